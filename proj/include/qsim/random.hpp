#pragma once

#include <cstdint>
#include <random>

namespace qsim {

// Seeded 64-bit random source. The engine is std::mt19937_64, which the
// standard pins bit-for-bit, and every derived draw (doubles, bounded ints)
// is computed here from raw engine words instead of going through
// std::uniform_*_distribution, so identical seeds give identical traces on
// every platform.
//
// A RandomSource is single-owner: pass it by reference and never share one
// between concurrent tasks. Independent streams come from derive().
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;
  RandomSource(RandomSource&&) = default;
  RandomSource& operator=(RandomSource&&) = default;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_double();

  /// Uniform in [0, bound) by masked rejection; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  /// Uniform integer in [lo, hi] inclusive.
  int next_int(int lo, int hi);

  bool next_bernoulli(double p);

  /// Child stream derived from (seed, stream) only; neither reads nor
  /// advances this source's position.
  RandomSource derive(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qsim
