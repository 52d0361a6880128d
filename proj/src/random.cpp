#include "qsim/random.hpp"

#include <stdexcept>

namespace qsim {

namespace {

// splitmix64, used only to spread seeds for derived streams.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomSource::next_u64() { return engine_(); }

double RandomSource::next_double() {
  // Top 53 bits -> [0, 1) on the 2^-53 grid.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::next_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("next_below: bound must be >= 1");
  }
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t draw = next_u64() & mask;
    if (draw < bound) {
      return draw;
    }
  }
}

int RandomSource::next_int(int lo, int hi) {
  if (lo > hi) {
    throw std::invalid_argument("next_int: empty range");
  }
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(next_below(span));
}

bool RandomSource::next_bernoulli(double p) { return next_double() < p; }

RandomSource RandomSource::derive(std::uint64_t stream) const {
  return RandomSource(splitmix64(seed_ + splitmix64(stream)));
}

}  // namespace qsim
