#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "tourney/model.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Undirected edge {a, b} with a < b (0-based vertices).
struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A set of undirected labelled edges; indexes the Fourier monomial
/// T^S = prod_{{i,j} in S} T(min, max).
class Shape {
 public:
  Shape() = default;
  /// Normalizes each pair to (min, max). Throws on self-loops or duplicates.
  explicit Shape(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  Shape(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges)
      : Shape(std::vector<std::pair<std::uint32_t, std::uint32_t>>(edges)) {}

  /// Shape whose edges are the set bits of `mask` under the lexicographic
  /// pair order of K_n (same order as Tournament's packed layout).
  static Shape from_mask(std::size_t n, std::uint64_t mask);

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  /// Sorted incident vertex set V(S).
  std::vector<std::uint32_t> vertices() const;
  /// Number of connected components of the graph (V(S), S).
  std::size_t component_count() const;
  /// Edge counts of each connected component (order unspecified).
  std::vector<std::size_t> component_edge_counts() const;

  Shape symmetric_difference(const Shape& other) const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<Edge> edges_;  // sorted, unique
};

/// Largest |V(S)| accepted by planted_expectation.
inline constexpr std::size_t kMaxExpectationVertices = 10;

/// T^S evaluated on t; +1 for the empty shape. Throws std::out_of_range if
/// the shape mentions a vertex >= t.size().
int monomial_value(const Tournament& t, const Shape& s);

/// E_P[T^S] under the planted model with a uniform hidden ranking, by
/// enumerating relative orders of V(S). Throws std::invalid_argument when
/// |V(S)| > kMaxExpectationVertices.
double planted_expectation(const Shape& s, double gamma);

/// chi^2(P || Q) as sum over shapes of E_P[T^S]^2, minus 1. n <= 6.
double chi2_fourier(const ModelParams& params);

}  // namespace tourney
