#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "qsim/algos/shor.hpp"
#include "qsim/measure.hpp"

using namespace qsim;
using namespace qsim::algos;

TEST_CASE("mod_pow agrees with direct arithmetic") {
  CHECK(mod_pow(7, 0, 15) == 1);
  CHECK(mod_pow(7, 2, 15) == 4);
  CHECK(mod_pow(7, 4, 15) == 1);
  CHECK(mod_pow(2, 10, 100) == 24);
  CHECK(mod_pow(5, 3, 1) == 0);
}

TEST_CASE("classical prechecks: primality and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(15));
  CHECK(as_prime_power(9) == std::make_pair(std::uint64_t{3}, 2));
  CHECK(as_prime_power(27) == std::make_pair(std::uint64_t{3}, 3));
  CHECK_FALSE(as_prime_power(15).has_value());
  CHECK_FALSE(as_prime_power(21).has_value());
}

TEST_CASE("multiplicative_order brute-forces the order") {
  CHECK(multiplicative_order(7, 15) == 4);
  CHECK(multiplicative_order(4, 15) == 2);
  CHECK(multiplicative_order(2, 21) == 6);
  CHECK_THROWS(multiplicative_order(5, 15));
}

TEST_CASE("shor_width satisfies M^2 <= 2^n < 2 M^2") {
  for (std::uint64_t m : {3, 15, 21, 33, 63}) {
    int n = shor_width(m);
    CHECK(std::ldexp(1.0, n) >= static_cast<double>(m * m));
    CHECK(std::ldexp(1.0, n) < 2.0 * static_cast<double>(m * m));
  }
  CHECK(shor_width(15) == 8);
}

TEST_CASE("modexp_superposition cycles the residue register") {
  // Classical oracle: residues of 7^a mod 15 cycle 1, 7, 4, 13.
  StateVector s = modexp_superposition(15, 7, 4);
  const std::uint64_t cycle[4] = {1, 7, 4, 13};
  double coeff = 1.0 / 4.0;
  for (std::uint64_t a = 0; a < 16; ++a) {
    std::uint64_t index = (a << 4) | cycle[a % 4];
    CHECK(std::abs(s.amp(index) - Amplitude(coeff, 0)) <= 1e-12);
  }
  double total = s.amps().squaredNorm();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("base 1 pins the residue register at 1") {
  StateVector s = modexp_superposition(15, 1, 4);
  for (std::uint64_t a = 0; a < 16; ++a) {
    CHECK(std::abs(s.amp((a << 4) | 1)) == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("modexp_superposition enforces its preconditions") {
  CHECK_THROWS(modexp_superposition(15, 5, 4));   // gcd(5, 15) != 1
  CHECK_THROWS(modexp_superposition(15, 7, 22));  // 22 + 4 qubits over the cap
}

TEST_CASE("extract_period recovers q = 4 from c = 12 at width 4") {
  // By hand: 12/16 -> convergent 3/4, denominator 4 verifies 7^4 = 1 (mod 15).
  CHECK(extract_period(12, 4, 15, 7) == std::uint64_t{4});
}

TEST_CASE("extract_period recovers q = 4 from the exact peak c = 4") {
  CHECK(extract_period(4, 4, 15, 7) == std::uint64_t{4});
}

TEST_CASE("extract_period uses multiples when c shares a factor with r") {
  // c = 128 at width 8: 128/256 = 1/2, denominator 2 fails but 2*2 verifies.
  CHECK(extract_period(128, 8, 15, 7) == std::uint64_t{4});
}

TEST_CASE("c = 0 carries no frequency information") {
  CHECK_FALSE(extract_period(0, 4, 15, 7).has_value());
}

TEST_CASE("measurement comb collapses onto a's congruent mod the order") {
  RandomSource rng(7);
  std::uint64_t modulus = 15, base = 7;
  int n = shor_width(modulus);
  int residue_bits = std::bit_width(modulus - 1);
  StateVector s = modexp_superposition(modulus, base, n);
  std::uint64_t u = 0;
  for (int k = 0; k < residue_bits; ++k) {
    auto r = measure_qubit(s, k, rng);
    if (r.outcome == "1") u |= std::uint64_t{1} << k;
    s = r.post_state;
  }
  std::uint64_t order = multiplicative_order(base, modulus);
  std::uint64_t first = 0;
  bool seen = false;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    if (std::abs(s.amp((a << residue_bits) | u)) > 1e-12) {
      if (!seen) {
        first = a;
        seen = true;
      } else {
        CHECK((a - first) % order == 0);
      }
    }
  }
  CHECK(seen);
}

TEST_CASE("a fixed base factors 15 through the full quantum pipeline") {
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomSource rng(seed);
    ShorAttempt attempt = shor_attempt(15, 7, rng);
    if (attempt.success) {
      ++successes;
      CHECK(attempt.period == std::uint64_t{4});
      CHECK(attempt.factors == std::vector<std::uint64_t>{3, 5});
    } else {
      CHECK_FALSE(attempt.note.empty());
    }
  }
  CHECK(successes >= 10);  // c = 0 fails ~1/4 of the time
}

TEST_CASE("step 1 shortcut factors via the gcd") {
  RandomSource rng(1);
  ShorAttempt attempt = shor_attempt(15, 5, rng);
  CHECK(attempt.gcd_shortcut);
  CHECK(attempt.success);
  CHECK(attempt.factors == std::vector<std::uint64_t>{3, 5});
}

TEST_CASE("base 2 factors 21 with period 6") {
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomSource rng(100 + seed);
    ShorAttempt attempt = shor_attempt(21, 2, rng);
    if (!attempt.success) continue;
    ++successes;
    CHECK(attempt.period == std::uint64_t{6});
    CHECK(attempt.factors == std::vector<std::uint64_t>{3, 7});
  }
  CHECK(successes >= 10);
}

TEST_CASE("shor_factor reports results over repeated attempts") {
  RandomSource rng(7);
  ShorRun run = shor_factor(15, rng);
  CHECK(run.success);
  CHECK(run.factors == std::vector<std::uint64_t>{3, 5});
  CHECK(run.attempts.size() >= 1);
  CHECK(run.attempts.back().success);
}

TEST_CASE("shor_factor rejects invalid moduli up front") {
  RandomSource rng(1);
  CHECK_THROWS(shor_factor(16, rng));  // even
  CHECK_THROWS(shor_factor(13, rng));  // prime
  CHECK_THROWS(shor_factor(27, rng));  // prime power
  CHECK_THROWS(shor_factor(65, rng));  // beyond desk scale
}
