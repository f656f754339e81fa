#include "tourney/rng.hpp"

#include <stdexcept>

namespace tourney {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_index) {
  // std::seed_seq and mt19937_64 are both fully specified by the standard,
  // which keeps streams identical across standard library implementations.
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_index),
                    static_cast<std::uint32_t>(stream_index >> 32),
                    0x746f75u};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index), engine_(make_engine(seed, stream_index)) {}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return uniform() < p;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
  // Rejection sampling on the top of the range; std::uniform_int_distribution
  // is implementation-defined and would break cross-platform reproducibility.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

}  // namespace tourney
