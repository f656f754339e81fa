#include "tourney/tournament.hpp"

#include <stdexcept>
#include <string>

namespace tourney {

namespace {

std::size_t word_count(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  return (pairs + 63) / 64;
}

}  // namespace

Tournament::Tournament(std::size_t n) : n_(n), words_(word_count(n == 0 ? 1 : n), 0) {
  if (n == 0) throw std::invalid_argument("tournament size must be at least 1");
}

Tournament Tournament::from_words(std::size_t n, std::vector<std::uint64_t> words) {
  Tournament t(n);
  if (words.size() != t.words_.size())
    throw std::invalid_argument("expected " + std::to_string(t.words_.size()) +
                                " packed words, got " + std::to_string(words.size()));
  const std::size_t pairs = t.edge_count();
  if (pairs % 64 != 0 && !words.empty())
    words.back() &= (std::uint64_t{1} << (pairs % 64)) - 1;
  t.words_ = std::move(words);
  return t;
}

Tournament Tournament::from_mask(std::size_t n, std::uint64_t mask) {
  Tournament t(n);
  const std::size_t pairs = t.edge_count();
  if (pairs > 64) throw std::invalid_argument("from_mask requires at most 64 pairs (n <= 11)");
  if (pairs == 0) return t;
  if (pairs < 64) mask &= (std::uint64_t{1} << pairs) - 1;
  t.words_[0] = mask;
  return t;
}

int Tournament::sign(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("tournament vertex out of range");
  if (i == j) return 0;
  if (i < j) return bit(pair_index(i, j)) ? 1 : -1;
  return bit(pair_index(j, i)) ? -1 : 1;
}

std::uint64_t Tournament::mask() const {
  if (edge_count() > 64) throw std::logic_error("mask() requires at most 64 pairs");
  return edge_count() == 0 ? 0 : words_[0];
}

std::vector<std::int64_t> Tournament::scores() const {
  std::vector<std::int64_t> s(n_, 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j, ++k) {
      const std::int64_t v = bit(k) ? 1 : -1;
      s[i] += v;
      s[j] -= v;
    }
  }
  return s;
}

Tournament Tournament::relabeled(std::span<const std::size_t> relabel) const {
  if (relabel.size() != n_) throw std::invalid_argument("relabel size mismatch");
  std::vector<bool> seen(n_, false);
  for (auto v : relabel) {
    if (v >= n_ || seen[v]) throw std::invalid_argument("relabel is not a permutation");
    seen[v] = true;
  }
  // Original pair (a, b) becomes (relabel[a], relabel[b]); invert the map so
  // each new pair can look up its source.
  std::vector<std::size_t> source(n_);
  for (std::size_t v = 0; v < n_; ++v) source[relabel[v]] = v;
  return from_predicate(n_, [&](std::size_t i, std::size_t j) {
    return sign(source[i], source[j]) > 0;
  });
}

}  // namespace tourney
