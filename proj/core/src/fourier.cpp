#include "tourney/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "tourney/detail/limits.hpp"

namespace tourney {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Maps each vertex of V(S) to a dense index and returns component roots per edge.
struct ComponentView {
  std::vector<std::uint32_t> vertices;
  std::vector<std::size_t> edge_root;
  std::size_t components = 0;
};

ComponentView components_of(std::span<const Edge> edges, std::vector<std::uint32_t> vertices) {
  ComponentView view;
  view.vertices = std::move(vertices);
  auto dense = [&](std::uint32_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(view.vertices.begin(), view.vertices.end(), v) - view.vertices.begin());
  };
  DisjointSets sets(view.vertices.size());
  for (const auto& e : edges) sets.unite(dense(e.a), dense(e.b));
  for (std::size_t v = 0; v < view.vertices.size(); ++v)
    if (sets.find(v) == v) ++view.components;
  view.edge_root.reserve(edges.size());
  for (const auto& e : edges) view.edge_root.push_back(sets.find(dense(e.a)));
  return view;
}

}  // namespace

Shape::Shape(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("shape edge is a self-loop");
    edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("shape has a duplicate edge");
}

Shape Shape::from_mask(std::size_t n, std::uint64_t mask) {
  Shape s;
  std::size_t k = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j, ++k)
      if (k < 64 && ((mask >> k) & 1u)) s.edges_.push_back({i, j});
  return s;
}

std::vector<std::uint32_t> Shape::vertices() const {
  std::vector<std::uint32_t> v;
  v.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    v.push_back(e.a);
    v.push_back(e.b);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t Shape::component_count() const { return components_of(edges_, vertices()).components; }

std::vector<std::size_t> Shape::component_edge_counts() const {
  const auto view = components_of(edges_, vertices());
  std::vector<std::size_t> per_root(view.vertices.size(), 0);
  for (auto r : view.edge_root) ++per_root[r];
  std::vector<std::size_t> out;
  for (auto c : per_root)
    if (c > 0) out.push_back(c);
  return out;
}

Shape Shape::symmetric_difference(const Shape& other) const {
  Shape out;
  std::set_symmetric_difference(edges_.begin(), edges_.end(), other.edges_.begin(),
                                other.edges_.end(), std::back_inserter(out.edges_));
  return out;
}

int monomial_value(const Tournament& t, const Shape& s) {
  int value = 1;
  for (const auto& e : s.edges()) {
    if (e.b >= t.size()) throw std::out_of_range("shape vertex exceeds tournament size");
    if (!t.bit(t.pair_index(e.a, e.b))) value = -value;
  }
  return value;
}

double planted_expectation(const Shape& s, double gamma) {
  if (s.empty()) return 1.0;
  const auto verts = s.vertices();
  if (verts.size() > kMaxExpectationVertices)
    throw std::invalid_argument("planted_expectation: shape touches too many vertices to enumerate");

  // Edge endpoints as dense indices into verts.
  std::vector<std::pair<std::size_t, std::size_t>> dense;
  dense.reserve(s.edge_count());
  for (const auto& e : s.edges()) {
    auto idx = [&](std::uint32_t v) {
      return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    dense.emplace_back(idx(e.a), idx(e.b));
  }

  // Only the relative order of V(S) matters; average (-1)^{#inverted edges}
  // over all |V(S)|! relative orders.
  std::vector<std::size_t> rank(verts.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::int64_t signed_count = 0;
  std::int64_t total = 0;
  do {
    bool odd = false;
    for (auto [a, b] : dense) odd ^= rank[a] > rank[b];
    signed_count += odd ? -1 : 1;
    ++total;
  } while (std::next_permutation(rank.begin(), rank.end()));

  const double sign_average = static_cast<double>(signed_count) / static_cast<double>(total);
  return std::pow(2.0 * gamma, static_cast<double>(s.edge_count())) * sign_average;
}

double chi2_fourier(const ModelParams& params) {
  params.validate();
  detail::require_enumerable(params.n, "chi2_fourier");
  const std::size_t pairs = params.n * (params.n - 1) / 2;
  long double sum = 0.0L;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Shape s = Shape::from_mask(params.n, mask);
    const auto counts = s.component_edge_counts();
    if (std::any_of(counts.begin(), counts.end(), [](std::size_t c) { return c % 2 == 1; }))
      continue;
    const long double e = planted_expectation(s, params.gamma);
    sum += e * e;
  }
  return static_cast<double>(sum - 1.0L);
}

}  // namespace tourney
