#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsim/random.hpp"
#include "qsim/state.hpp"

namespace qsim::algos {

// Classical number theory used around the quantum stage.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);
bool is_prime(std::uint64_t m);
/// (p, k) with p^k = m and k >= 2, when m is a perfect prime power.
std::optional<std::pair<std::uint64_t, int>> as_prime_power(std::uint64_t m);
/// Smallest r >= 1 with y^r = 1 (mod m); requires gcd(y, m) = 1. Brute force,
/// intended as the order-finding oracle for tests and trace checks.
std::uint64_t multiplicative_order(std::uint64_t y, std::uint64_t m);

/// First-register width n with M^2 <= 2^n < 2 M^2.
int shor_width(std::uint64_t modulus);

/// Uniform superposition over |a, y^a mod M> with a on the high n qubits and
/// the residue register on the low ceil(log2 M) qubits. The residues are
/// computed classically per index (no reversible arithmetic circuit).
StateVector modexp_superposition(std::uint64_t modulus, std::uint64_t base, int n);

/// Continued-fraction period extraction from a measured c: expands c / 2^n,
/// collects convergent denominators q <= M and small multiples 2q..4q, and
/// returns the smallest candidate with y^q = 1 (mod M). nullopt for c = 0 or
/// when nothing verifies (a valid outcome that triggers a retry).
std::optional<std::uint64_t> extract_period(std::uint64_t c, int n, std::uint64_t modulus,
                                            std::uint64_t base);

struct ShorAttempt {
  std::uint64_t base = 0;                  // the chosen y
  bool gcd_shortcut = false;               // step 1 found gcd(y, M) > 1
  std::uint64_t measured_u = 0;            // residue-register measurement
  std::uint64_t measured_c = 0;            // post-QFT measurement
  std::optional<std::uint64_t> period;
  std::vector<std::uint64_t> factors;      // nontrivial divisors found
  bool success = false;
  std::string note;                        // failure reason when !success
};

struct ShorRun {
  std::uint64_t modulus = 0;
  int width = 0;                           // n of the successful attempt
  std::vector<ShorAttempt> attempts;
  std::vector<std::uint64_t> factors;
  bool success = false;
};

/// One pass of steps 2-7 for a fixed base y (gcd shortcut included).
ShorAttempt shor_attempt(std::uint64_t modulus, std::uint64_t base, RandomSource& rng);

/// Steps 1-8 with random bases, repeated up to max_attempts. Rejects even,
/// prime, and prime-power moduli up front (classical precheck) and moduli
/// beyond 64 (desk scale).
ShorRun shor_factor(std::uint64_t modulus, RandomSource& rng, int max_attempts = 32);

}  // namespace qsim::algos
