#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tourney {

/// Orientation of the complete graph on n vertices, stored as a packed bit
/// per upper-triangular pair (i < j) in lexicographic order. A set bit means
/// T(i, j) = +1, i.e. i beats j. Vertices are 0-based.
///
/// Immutable once built; copies are cheap enough for n in the thousands
/// (n = 4000 is about 1 MiB).
class Tournament {
 public:
  /// Builds a tournament from a predicate `beats(i, j)` evaluated for every
  /// i < j in lexicographic order.
  template <typename Pred>
  static Tournament from_predicate(std::size_t n, Pred&& beats) {
    Tournament t(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++k)
        if (beats(i, j)) t.words_[k >> 6] |= std::uint64_t{1} << (k & 63);
    return t;
  }

  /// Builds a tournament from raw packed words. Bits past the last pair are
  /// cleared. Throws std::invalid_argument if n == 0 or the word count is wrong.
  static Tournament from_words(std::size_t n, std::vector<std::uint64_t> words);

  /// Tournament whose pair bits are the low bits of `mask` (pair index k is
  /// bit k). Requires n(n-1)/2 <= 64.
  static Tournament from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return n_ * (n_ - 1) / 2; }

  /// T(i, j) in {-1, 0, +1}; skew-symmetric with zero diagonal.
  int sign(std::size_t i, std::size_t j) const;

  /// Index of the pair (i, j), i < j, in the packed layout.
  std::size_t pair_index(std::size_t i, std::size_t j) const noexcept {
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  bool bit(std::size_t k) const noexcept { return (words_[k >> 6] >> (k & 63)) & 1u; }

  /// Packed pairs as a bitmask; requires n(n-1)/2 <= 64.
  std::uint64_t mask() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Score vector s_i = sum_k T(i, k), i.e. wins minus losses.
  std::vector<std::int64_t> scores() const;

  /// The tournament with vertex v renamed to relabel[v]; relabel must be a
  /// permutation of 0..n-1.
  Tournament relabeled(std::span<const std::size_t> relabel) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(std::size_t n);

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace tourney
