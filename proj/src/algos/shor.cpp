#include "qsim/algos/shor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qsim/algos/qft.hpp"
#include "qsim/measure.hpp"

namespace qsim::algos {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("mod_pow: zero modulus");
  if (modulus == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, int>> as_prime_power(std::uint64_t m) {
  for (int k = 2; k < 64; ++k) {
    std::uint64_t root = static_cast<std::uint64_t>(std::llround(std::pow(m, 1.0 / k)));
    for (std::uint64_t p : {root - 1, root, root + 1}) {
      if (p < 2) continue;
      std::uint64_t value = 1;
      bool overflow = false;
      for (int i = 0; i < k; ++i) {
        if (value > m / p) { overflow = true; break; }
        value *= p;
      }
      if (!overflow && value == m && is_prime(p)) return std::make_pair(p, k);
    }
    if ((std::uint64_t{1} << k) > m) break;
  }
  return std::nullopt;
}

std::uint64_t multiplicative_order(std::uint64_t y, std::uint64_t m) {
  if (std::gcd(y, m) != 1) throw std::invalid_argument("order requires gcd(y, m) = 1");
  std::uint64_t value = y % m;
  std::uint64_t r = 1;
  while (value != 1) {
    value = value * (y % m) % m;
    ++r;
    if (r > m) throw std::logic_error("order search exceeded modulus");
  }
  return r;
}

int shor_width(std::uint64_t modulus) {
  int n = 0;
  while (std::ldexp(1.0, n) < static_cast<double>(modulus) * static_cast<double>(modulus)) ++n;
  return n;
}

StateVector modexp_superposition(std::uint64_t modulus, std::uint64_t base, int n) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (std::gcd(base, modulus) != 1) {
    throw std::invalid_argument("modexp_superposition requires gcd(y, M) = 1");
  }
  int residue_bits = std::bit_width(modulus - 1);
  if (n < 1 || n + residue_bits > kMaxQubits) {
    throw std::invalid_argument("modexp register widths exceed the qubit cap");
  }
  std::uint64_t count = std::uint64_t{1} << n;
  AmpVector amps = AmpVector::Zero(static_cast<Eigen::Index>(count << residue_bits));
  double coeff = 1.0 / std::sqrt(static_cast<double>(count));
  std::uint64_t residue = 1 % modulus;
  for (std::uint64_t a = 0; a < count; ++a) {
    amps(static_cast<Eigen::Index>((a << residue_bits) | residue)) = coeff;
    residue = residue * base % modulus;
  }
  return StateVector(n + residue_bits, std::move(amps));
}

std::optional<std::uint64_t> extract_period(std::uint64_t c, int n, std::uint64_t modulus,
                                            std::uint64_t base) {
  if (n < 1 || n >= 64 || c >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("measured value out of range");
  }
  if (c == 0) return std::nullopt;  // no frequency information

  // Convergent denominators of c / 2^n.
  std::vector<std::uint64_t> denominators;
  std::uint64_t num = c, den = std::uint64_t{1} << n;
  std::uint64_t k_prev = 0, k_cur = 1;
  while (den != 0) {
    std::uint64_t a = num / den;
    std::uint64_t rem = num % den;
    std::uint64_t k_next = a * k_cur + k_prev;
    denominators.push_back(k_next);
    k_prev = k_cur;
    k_cur = k_next;
    num = den;
    den = rem;
  }

  // Candidates: each denominator and small multiples of it (the measured c
  // may share a factor with the true period); smallest verified wins, which
  // is the order itself whenever it appears.
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t q : denominators) {
    for (std::uint64_t mult = 1; mult <= 4; ++mult) {
      std::uint64_t candidate = q * mult;
      if (candidate >= 1 && candidate <= modulus) candidates.push_back(candidate);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::uint64_t q : candidates) {
    if (mod_pow(base, q, modulus) == 1) return q;
  }
  return std::nullopt;
}

ShorAttempt shor_attempt(std::uint64_t modulus, std::uint64_t base, RandomSource& rng) {
  ShorAttempt attempt;
  attempt.base = base;

  std::uint64_t g = std::gcd(base, modulus);
  if (g != 1) {
    attempt.gcd_shortcut = true;
    attempt.success = true;
    attempt.factors = {g, modulus / g};
    std::sort(attempt.factors.begin(), attempt.factors.end());
    return attempt;
  }

  int n = shor_width(modulus);
  int residue_bits = std::bit_width(modulus - 1);
  StateVector state = modexp_superposition(modulus, base, n);

  // Step 4: measure the residue register, collapsing onto the comb of a's
  // with y^a = u (mod M).
  std::uint64_t u = 0;
  for (int k = 0; k < residue_bits; ++k) {
    MeasurementRecord r = measure_qubit(state, k, rng);
    if (r.outcome == "1") u |= std::uint64_t{1} << k;
    state = r.post_state;
  }
  attempt.measured_u = u;

  // The residue register is now a fixed basis value; peel it off so the QFT
  // runs on the first register alone.
  std::uint64_t count = std::uint64_t{1} << n;
  AmpVector comb(static_cast<Eigen::Index>(count));
  for (std::uint64_t a = 0; a < count; ++a) {
    comb(static_cast<Eigen::Index>(a)) = state.amp((a << residue_bits) | u);
  }
  comb /= comb.norm();
  StateVector first_register(n, std::move(comb));

  // Steps 5-6: QFT, measure, extract the period by continued fractions.
  StateVector transformed = qft(first_register);
  attempt.measured_c = std::stoull(measure_all(transformed, rng).outcome, nullptr, 2);
  attempt.period = extract_period(attempt.measured_c, n, modulus, base);
  if (!attempt.period) {
    attempt.note = "no verified period candidate from c = " + std::to_string(attempt.measured_c);
    return attempt;
  }

  // Step 7.
  std::uint64_t q = *attempt.period;
  if (q % 2 != 0) {
    attempt.note = "period " + std::to_string(q) + " is odd";
    return attempt;
  }
  std::uint64_t half = mod_pow(base, q / 2, modulus);
  if (half == modulus - 1) {
    attempt.note = "y^(q/2) = -1 (mod M)";
    return attempt;
  }
  for (std::uint64_t candidate : {std::gcd(half - 1, modulus), std::gcd(half + 1, modulus)}) {
    if (candidate != 1 && candidate != modulus) {
      attempt.factors.push_back(candidate);
      attempt.factors.push_back(modulus / candidate);
    }
  }
  std::sort(attempt.factors.begin(), attempt.factors.end());
  attempt.factors.erase(std::unique(attempt.factors.begin(), attempt.factors.end()),
                        attempt.factors.end());
  attempt.success = !attempt.factors.empty();
  if (!attempt.success) attempt.note = "both gcd candidates were trivial";
  return attempt;
}

ShorRun shor_factor(std::uint64_t modulus, RandomSource& rng, int max_attempts) {
  if (modulus > 64) throw std::invalid_argument("desk-scale factoring handles M <= 64");
  if (modulus % 2 == 0) throw std::invalid_argument("modulus must be odd");
  if (modulus < 2 || is_prime(modulus)) throw std::invalid_argument("modulus must be composite");
  if (as_prime_power(modulus)) {
    throw std::invalid_argument("modulus must not be a prime power");
  }
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");

  ShorRun run;
  run.modulus = modulus;
  run.width = shor_width(modulus);
  for (int i = 0; i < max_attempts; ++i) {
    std::uint64_t base = 2 + rng.next_below(modulus - 2);  // y in [2, M-1]
    run.attempts.push_back(shor_attempt(modulus, base, rng));
    if (run.attempts.back().success) {
      run.success = true;
      run.factors = run.attempts.back().factors;
      break;
    }
  }
  return run;
}

}  // namespace qsim::algos
