#pragma once

#include <Eigen/Dense>

#include "qsim/state.hpp"

namespace qsim::algos {

/// Two-step transition model over a 4-state register: complex amplitude
/// matrices for each step plus the row-stochastic matrices |a_ij|^2 they
/// induce. Build from unitaries directly, or lift a pair of stochastic
/// matrices (entrywise square root, then nearest-unitary correction; the
/// stochastic matrices are re-derived from the corrected amplitudes so the
/// |a_ij|^2 = p_ij invariant is exact).
class TransitionModel {
 public:
  static TransitionModel from_unitaries(const Eigen::Matrix4cd& amp1,
                                        const Eigen::Matrix4cd& amp2);
  static TransitionModel from_stochastic(const Eigen::Matrix4d& step1,
                                         const Eigen::Matrix4d& step2);

  const Eigen::Matrix4cd& amp1() const { return amp1_; }
  const Eigen::Matrix4cd& amp2() const { return amp2_; }
  const Eigen::Matrix4d& step1() const { return step1_; }
  const Eigen::Matrix4d& step2() const { return step2_; }

 private:
  TransitionModel(Eigen::Matrix4cd amp1, Eigen::Matrix4cd amp2);

  Eigen::Matrix4cd amp1_, amp2_;
  Eigen::Matrix4d step1_, step2_;
};

struct InterferenceComparison {
  double classical;          // sum_j p_0j q_j0
  double quantum;            // |sum_j a_0j b_j0|^2
  double measured_between;   // sum_j |a_0j|^2 |b_j0|^2, equals classical
};

/// Probability of returning to state 0 after two steps: the classical chain
/// value, the unmeasured quantum value, and the measured-between-steps
/// quantum value (which collapses to the classical one).
InterferenceComparison classical_vs_quantum_p0(const TransitionModel& model);

}  // namespace qsim::algos
