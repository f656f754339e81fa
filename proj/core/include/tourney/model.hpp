#pragma once

#include <cstddef>
#include <utility>

#include "tourney/ranking.hpp"
#include "tourney/rng.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Planted ranking model: each pair agrees with the hidden ranking with
/// probability 1/2 + gamma. gamma = 0 is the uniform (null) model.
struct ModelParams {
  std::size_t n = 1;
  double gamma = 0.0;

  /// Throws std::invalid_argument unless n >= 1 and 0 <= gamma <= 1/2.
  void validate() const;
};

/// Uniformly random tournament.
Tournament sample_null(std::size_t n, RngStream& rng);

/// Tournament with T(i,j) = pi(i,j) w.p. 1/2 + gamma, independently per pair.
Tournament sample_planted(const ModelParams& params, const Ranking& pi, RngStream& rng);

/// Uniformly random ranking (Fisher-Yates on the rank array).
Ranking sample_ranking(std::size_t n, RngStream& rng);

/// Draws a uniform hidden ranking, then a planted tournament around it.
std::pair<Ranking, Tournament> sample_planted_uniform(const ModelParams& params, RngStream& rng);

}  // namespace tourney
