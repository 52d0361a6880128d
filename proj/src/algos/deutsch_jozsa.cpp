#include "qsim/algos/deutsch_jozsa.hpp"

#include <cmath>
#include <stdexcept>

#include "qsim/gates.hpp"

namespace qsim::algos {

StateVector apply_phase_oracle(const StateVector& state, const Oracle& oracle) {
  if (oracle.n != state.num_qubits()) {
    throw std::invalid_argument("oracle width does not match state");
  }
  AmpVector amps = state.amps();
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    if (oracle.predicate(i)) amps(static_cast<Eigen::Index>(i)) = -amps(static_cast<Eigen::Index>(i));
  }
  return StateVector(state.num_qubits(), std::move(amps));
}

std::uint64_t count_solutions(const Oracle& oracle) {
  if (oracle.solution_count) return *oracle.solution_count;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << oracle.n); ++i) {
    if (oracle.predicate(i)) ++count;
  }
  return count;
}

DeutschJozsaResult deutsch_jozsa(const Oracle& oracle) {
  StateVector s = hadamard_all(basis_state(oracle.n, std::uint64_t{0}));
  s = apply_phase_oracle(s, oracle);
  s = hadamard_all(s);
  double p0 = std::norm(s.amp(0));
  return {p0 > 0.5 ? DjVerdict::Constant : DjVerdict::Balanced, p0};
}

}  // namespace qsim::algos
