#include "qsim/algos/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsim/gates.hpp"
#include "qsim/measure.hpp"

namespace qsim::algos {

namespace {

double solution_mass(const StateVector& state, const Oracle& oracle, int ancilla_qubits) {
  double mass = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    if (oracle.predicate(i >> ancilla_qubits)) {
      mass += std::norm(state.amp(i));
    }
  }
  return mass;
}

// |x, b> -> |x, b ^ P(x)>: a basis permutation, applied in place on a copy.
StateVector apply_bit_oracle(const StateVector& state, const Oracle& oracle) {
  AmpVector out(state.amps().size());
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    std::uint64_t j = oracle.predicate(i >> 1) ? i ^ 1u : i;
    out(static_cast<Eigen::Index>(j)) = state.amp(i);
  }
  return StateVector(state.num_qubits(), std::move(out));
}

// Inversion about the average of the x register only (identity on the
// ancilla): amplitudes are averaged per ancilla value.
StateVector invert_about_average_high(const StateVector& state) {
  AmpVector amps = state.amps();
  for (std::uint64_t b = 0; b < 2; ++b) {
    Amplitude sum = 0.0;
    std::uint64_t count = state.dim() / 2;
    for (std::uint64_t x = 0; x < count; ++x) sum += amps(static_cast<Eigen::Index>((x << 1) | b));
    Amplitude mean = sum / static_cast<double>(count);
    for (std::uint64_t x = 0; x < count; ++x) {
      Eigen::Index idx = static_cast<Eigen::Index>((x << 1) | b);
      amps(idx) = 2.0 * mean - amps(idx);
    }
  }
  return StateVector(state.num_qubits(), std::move(amps));
}

}  // namespace

StateVector inversion_about_average(const StateVector& state) {
  Amplitude mean = state.amps().mean();
  AmpVector amps = 2.0 * mean * AmpVector::Ones(state.amps().size()) - state.amps();
  return StateVector(state.num_qubits(), std::move(amps));
}

StateVector grover_iterate(const StateVector& state, const Oracle& oracle) {
  return inversion_about_average(apply_phase_oracle(state, oracle));
}

int grover_default_iterations(int n, std::uint64_t solution_count) {
  double root = solution_count > 0
                    ? std::sqrt(std::ldexp(1.0, n) / static_cast<double>(solution_count))
                    : std::sqrt(std::ldexp(1.0, n));
  int rounds = static_cast<int>(std::llround(std::numbers::pi / 4.0 * root));
  if (solution_count < (std::uint64_t{1} << n) && rounds < 1) rounds = 1;
  return rounds;
}

GroverResult grover_search(const Oracle& oracle, std::optional<int> iterations,
                           RandomSource& rng, OracleForm form) {
  if (oracle.n < 1 || oracle.n > kMaxQubits) {
    throw std::invalid_argument("grover oracle width out of range");
  }
  std::uint64_t k = count_solutions(oracle);
  int rounds = iterations.value_or(grover_default_iterations(oracle.n, k));
  if (rounds < 0) throw std::invalid_argument("iteration count must be nonnegative");

  GroverResult result;
  result.iterations = rounds;

  if (form == OracleForm::Phase) {
    StateVector s = hadamard_all(basis_state(oracle.n, std::uint64_t{0}));
    result.success_curve.push_back(solution_mass(s, oracle, 0));
    for (int it = 0; it < rounds; ++it) {
      s = grover_iterate(s, oracle);
      result.success_curve.push_back(solution_mass(s, oracle, 0));
    }
    result.success_probability = result.success_curve.back();
    result.outcome = std::stoull(measure_all(s, rng).outcome, nullptr, 2);
  } else {
    // Ancilla register (qubit 0) prepared in |->; the bit oracle |x, b^P(x)>
    // then kicks the same phase back onto the x register.
    StateVector s = tensor(hadamard_all(basis_state(oracle.n, std::uint64_t{0})),
                           apply_gate(basis_state(1, "1"), standard_gate(StdGate::H)));
    result.success_curve.push_back(solution_mass(s, oracle, 1));
    for (int it = 0; it < rounds; ++it) {
      s = invert_about_average_high(apply_bit_oracle(s, oracle));
      result.success_curve.push_back(solution_mass(s, oracle, 1));
    }
    result.success_probability = result.success_curve.back();
    std::uint64_t measured = std::stoull(measure_all(s, rng).outcome, nullptr, 2);
    result.outcome = measured >> 1;
  }
  result.outcome_is_solution = oracle.predicate(result.outcome);
  return result;
}

}  // namespace qsim::algos
