#include "qsim/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

Eigen::VectorXd outcome_probabilities(const StateVector& state) {
  return state.amps().cwiseAbs2();
}

MeasurementRecord measure_all(const StateVector& state, RandomSource& rng) {
  const AmpVector& amps = state.amps();
  double u = rng.next_double();
  double cumulative = 0.0;
  std::uint64_t dim = state.dim();
  std::uint64_t picked = dim - 1;
  for (std::uint64_t i = 0; i < dim; ++i) {
    cumulative += std::norm(amps(static_cast<Eigen::Index>(i)));
    if (u < cumulative) {
      picked = i;
      break;
    }
  }
  // u can exceed the (float) total; fall back to the last nonzero outcome.
  while (picked > 0 && std::norm(amps(static_cast<Eigen::Index>(picked))) == 0.0) {
    --picked;
  }
  double probability = std::norm(amps(static_cast<Eigen::Index>(picked)));
  return {basis_label(picked, state.num_qubits()), probability,
          basis_state(state.num_qubits(), picked)};
}

MeasurementRecord measure_qubit(const StateVector& state, int k, RandomSource& rng) {
  if (k < 0 || k >= state.num_qubits()) {
    throw std::invalid_argument("measured qubit index out of range");
  }
  const AmpVector& amps = state.amps();
  std::uint64_t mask = std::uint64_t{1} << k;
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    (i & mask ? p1 : p0) += std::norm(amps(static_cast<Eigen::Index>(i)));
  }
  int outcome = rng.next_double() * (p0 + p1) < p0 ? 0 : 1;
  double probability = outcome == 0 ? p0 : p1;

  AmpVector post = amps;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    bool bit = (i & mask) != 0;
    if (bit != (outcome == 1)) post(static_cast<Eigen::Index>(i)) = 0.0;
  }
  post /= post.norm();
  return {outcome == 0 ? "0" : "1", probability, StateVector(state.num_qubits(), std::move(post))};
}

}  // namespace qsim
