#pragma once

#include <cstdint>
#include <random>

namespace tourney {

/// Per-trial random stream. The generator state is a pure function of
/// (seed, stream_index), so trial k draws the same numbers no matter which
/// worker thread runs it or in which order.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  /// 64 uniformly random bits.
  std::uint64_t next_bits() { return engine_(); }

  /// Uniform double in [0, 1) with 53 bits of resolution.
  double uniform();

  /// True with probability p (p clamped to [0, 1]).
  bool bernoulli(double p);

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

}  // namespace tourney
