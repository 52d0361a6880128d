#pragma once

#include <string>

#include "qsim/random.hpp"
#include "qsim/state.hpp"

namespace qsim {

struct MeasurementRecord {
  std::string outcome;      // bit string, one char for a single-qubit measurement
  double probability;       // Born probability of the outcome in the pre-state
  StateVector post_state;   // collapsed, renormalized
};

/// Full computational-basis measurement. The outcome is drawn by inverse CDF
/// over the cumulative probability array using a single PRNG draw; the post
/// state is the measured basis state.
MeasurementRecord measure_all(const StateVector& state, RandomSource& rng);

/// Partial measurement of qubit k; the post state is renormalized onto the
/// measured subspace.
MeasurementRecord measure_qubit(const StateVector& state, int k, RandomSource& rng);

/// Born distribution over all 2^n outcomes.
Eigen::VectorXd outcome_probabilities(const StateVector& state);

}  // namespace qsim
