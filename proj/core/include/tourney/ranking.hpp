#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// A ranking of vertices 0..n-1. rank(i) is 1-based and rank 1 is the top.
/// Vertex i is preferred to j (pairwise_sign(i, j) = +1) iff rank(i) < rank(j).
class Ranking {
 public:
  /// Validates that `ranks` is a permutation of 1..n (n >= 1).
  explicit Ranking(std::vector<std::uint32_t> ranks);

  static Ranking identity(std::size_t n);
  static Ranking reversal(std::size_t n);
  /// Ranking that lists `order[0]` first, `order[1]` second, and so on.
  static Ranking from_order(std::span<const std::size_t> order);

  std::size_t size() const noexcept { return ranks_.size(); }
  std::uint32_t rank(std::size_t i) const { return ranks_.at(i); }
  std::span<const std::uint32_t> ranks() const noexcept { return ranks_; }

  int pairwise_sign(std::size_t i, std::size_t j) const;

  /// Vertices from best to worst.
  std::vector<std::size_t> order() const;

  /// Ranking with every pairwise preference flipped.
  Ranking reversed() const;

  friend bool operator==(const Ranking&, const Ranking&) = default;
  friend auto operator<=>(const Ranking& a, const Ranking& b) { return a.ranks_ <=> b.ranks_; }

 private:
  std::vector<std::uint32_t> ranks_;
};

/// Tournament in which i beats j exactly when i is ranked above j.
Tournament induced_tournament(const Ranking& pi);

/// Number of pairs the two rankings order differently.
std::uint64_t kendall_tau(const Ranking& a, const Ranking& b);

/// Sum over vertices of |rank_a(i) - rank_b(i)|.
std::uint64_t spearman_footrule(const Ranking& a, const Ranking& b);

/// sum_{i<j} T(i,j) * pi(i,j): consistent minus inconsistent pairs.
std::int64_t alignment(const Ranking& pi, const Tournament& t);

}  // namespace tourney
