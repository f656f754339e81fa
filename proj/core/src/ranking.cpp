#include "tourney/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tourney {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": size mismatch");
}

// Counts inversions of `seq` by merge sort.
std::uint64_t count_inversions(std::vector<std::uint32_t>& seq, std::vector<std::uint32_t>& buf,
                               std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = count_inversions(seq, buf, lo, mid) + count_inversions(seq, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (seq[j] < seq[i]) {
      inv += mid - i;
      buf[k++] = seq[j++];
    } else {
      buf[k++] = seq[i++];
    }
  }
  while (i < mid) buf[k++] = seq[i++];
  while (j < hi) buf[k++] = seq[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, seq.begin() + lo);
  return inv;
}

}  // namespace

Ranking::Ranking(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw std::invalid_argument("ranking must have at least one vertex");
  std::vector<bool> seen(ranks_.size() + 1, false);
  for (auto r : ranks_) {
    if (r < 1 || r > ranks_.size() || seen[r])
      throw std::invalid_argument("ranks must be a permutation of 1..n");
    seen[r] = true;
  }
}

Ranking Ranking::identity(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 1u);
  return Ranking(std::move(r));
}

Ranking Ranking::reversal(std::size_t n) { return identity(n).reversed(); }

Ranking Ranking::from_order(std::span<const std::size_t> order) {
  std::vector<std::uint32_t> r(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (order[pos] >= order.size()) throw std::invalid_argument("order entry out of range");
    r[order[pos]] = static_cast<std::uint32_t>(pos + 1);
  }
  return Ranking(std::move(r));
}

int Ranking::pairwise_sign(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  return ranks_.at(i) < ranks_.at(j) ? 1 : -1;
}

std::vector<std::size_t> Ranking::order() const {
  std::vector<std::size_t> out(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) out[ranks_[i] - 1] = i;
  return out;
}

Ranking Ranking::reversed() const {
  std::vector<std::uint32_t> r(ranks_);
  const auto n = static_cast<std::uint32_t>(r.size());
  for (auto& x : r) x = n + 1 - x;
  return Ranking(std::move(r));
}

Tournament induced_tournament(const Ranking& pi) {
  const auto ranks = pi.ranks();
  return Tournament::from_predicate(pi.size(), [&](std::size_t i, std::size_t j) {
    return ranks[i] < ranks[j];
  });
}

std::uint64_t kendall_tau(const Ranking& a, const Ranking& b) {
  require_same_size(a.size(), b.size(), "kendall_tau");
  // Walk vertices in a's order and read off their b-ranks; each inversion of
  // that sequence is a discordant pair.
  std::vector<std::uint32_t> seq;
  seq.reserve(a.size());
  for (auto v : a.order()) seq.push_back(b.rank(v));
  std::vector<std::uint32_t> buf(seq.size());
  return count_inversions(seq, buf, 0, seq.size());
}

std::uint64_t spearman_footrule(const Ranking& a, const Ranking& b) {
  require_same_size(a.size(), b.size(), "spearman_footrule");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = a.rank(i), y = b.rank(i);
    total += x > y ? x - y : y - x;
  }
  return total;
}

std::int64_t alignment(const Ranking& pi, const Tournament& t) {
  require_same_size(pi.size(), t.size(), "alignment");
  const auto ranks = pi.ranks();
  const std::size_t n = t.size();
  std::int64_t total = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      total += (t.bit(k) == (ranks[i] < ranks[j])) ? 1 : -1;
  return total;
}

}  // namespace tourney
