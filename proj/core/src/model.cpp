#include "tourney/model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tourney {

void ModelParams::validate() const {
  if (n < 1) throw std::invalid_argument("model size n must be at least 1");
  if (!(gamma >= 0.0 && gamma <= 0.5))
    throw std::invalid_argument("gamma must lie in [0, 1/2]");
}

Tournament sample_null(std::size_t n, RngStream& rng) {
  if (n == 0) throw std::invalid_argument("sample_null: n must be at least 1");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::uint64_t> words((pairs + 63) / 64);
  for (auto& w : words) w = rng.next_bits();
  return Tournament::from_words(n, std::move(words));
}

Tournament sample_planted(const ModelParams& params, const Ranking& pi, RngStream& rng) {
  params.validate();
  if (pi.size() != params.n) throw std::invalid_argument("sample_planted: ranking size mismatch");
  const double agree = 0.5 + params.gamma;
  const auto ranks = pi.ranks();
  return Tournament::from_predicate(params.n, [&](std::size_t i, std::size_t j) {
    const bool pi_says_i = ranks[i] < ranks[j];
    return rng.bernoulli(agree) ? pi_says_i : !pi_says_i;
  });
}

Ranking sample_ranking(std::size_t n, RngStream& rng) {
  if (n == 0) throw std::invalid_argument("sample_ranking: n must be at least 1");
  std::vector<std::uint32_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1u);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(ranks[i], ranks[j]);
  }
  return Ranking(std::move(ranks));
}

std::pair<Ranking, Tournament> sample_planted_uniform(const ModelParams& params, RngStream& rng) {
  params.validate();
  Ranking pi = sample_ranking(params.n, rng);
  Tournament t = sample_planted(params, pi, rng);
  return {std::move(pi), std::move(t)};
}

}  // namespace tourney
