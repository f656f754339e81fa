#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourney/recovery.hpp"

namespace tourney {

namespace {

std::vector<std::uint32_t> ranks_of(const std::vector<std::size_t>& order) {
  std::vector<std::uint32_t> ranks(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) ranks[order[p]] = static_cast<std::uint32_t>(p + 1);
  return ranks;
}

}  // namespace

// Steinhaus-Johnson-Trotter enumeration (Even's variant): consecutive
// rankings differ by one adjacent transposition, so the alignment changes by
// exactly one pairwise term per step.
MleResult brute_force_mle(const Tournament& t) {
  const std::size_t n = t.size();
  if (n > kMaxMleSize)
    throw std::invalid_argument("brute_force_mle: n = " + std::to_string(n) + " exceeds limit " +
                                std::to_string(kMaxMleSize));

  std::vector<std::size_t> order(n);  // vertices from top to bottom
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> position(order);
  std::vector<int> direction(n, -1);

  std::int64_t current = alignment(Ranking::identity(n), t);
  std::int64_t best = current;
  std::uint64_t optima = 1;
  std::vector<std::uint32_t> best_ranks = ranks_of(order);

  for (;;) {
    // Largest mobile vertex: its neighbour in the direction it faces is smaller.
    std::size_t mover = n;
    for (std::size_t v = n; v-- > 0;) {
      const std::size_t p = position[v];
      const auto next = static_cast<std::ptrdiff_t>(p) + direction[v];
      if (next < 0 || next >= static_cast<std::ptrdiff_t>(n)) continue;
      if (order[static_cast<std::size_t>(next)] < v) {
        mover = v;
        break;
      }
    }
    if (mover == n) break;

    const std::size_t p = position[mover];
    const std::size_t q = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p) + direction[mover]);
    const std::size_t upper = std::min(p, q);
    current -= 2 * t.sign(order[upper], order[upper + 1]);
    std::swap(order[p], order[q]);
    position[order[p]] = p;
    position[order[q]] = q;
    for (std::size_t v = mover + 1; v < n; ++v) direction[v] = -direction[v];

    if (current > best) {
      best = current;
      optima = 1;
      best_ranks = ranks_of(order);
    } else if (current == best) {
      ++optima;
      auto ranks = ranks_of(order);
      if (ranks < best_ranks) best_ranks = std::move(ranks);
    }
  }

  return {Ranking(std::move(best_ranks)), best, optima};
}

}  // namespace tourney
