#pragma once

#include <optional>
#include <vector>

#include "qsim/algos/deutsch_jozsa.hpp"
#include "qsim/random.hpp"
#include "qsim/state.hpp"

namespace qsim::algos {

/// Each amplitude maps to 2*mean - a (the diffusion reflection); the uniform
/// state is a fixed point and applying it twice is the identity.
StateVector inversion_about_average(const StateVector& state);

/// One Grover iteration: phase flip on solutions, then inversion about the
/// average.
StateVector grover_iterate(const StateVector& state, const Oracle& oracle);

/// round(pi/4 * sqrt(2^n / k)) for known k >= 1 (at least 1 when k < 2^n);
/// round(pi/4 * sqrt(2^n)) when k is 0/unknown.
int grover_default_iterations(int n, std::uint64_t solution_count);

// The paper alternates between a phase-flip oracle and a |x, P(x)> ancilla
// register; both are provided and agree amplitude for amplitude (the ancilla
// is prepared in |-> so the bit flip kicks back the same phase).
enum class OracleForm { Phase, Ancilla };

struct GroverResult {
  int iterations = 0;
  std::vector<double> success_curve;  // success probability after 0..iterations steps
  double success_probability = 0.0;   // exact, pre-measurement, at the final step
  std::uint64_t outcome = 0;          // sampled candidate
  bool outcome_is_solution = false;
};

/// Steps 1-5 of the paper's search: uniform superposition, then the given
/// number of (oracle, diffusion) rounds, tracking the exact success
/// probability sum over solutions after every round, then one sampled
/// measurement. iterations defaults to grover_default_iterations.
GroverResult grover_search(const Oracle& oracle, std::optional<int> iterations,
                           RandomSource& rng, OracleForm form = OracleForm::Phase);

}  // namespace qsim::algos
