#include "qsim/algos/transition_model.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace qsim::algos {

namespace {

void check_unitary4(const Eigen::Matrix4cd& m, const char* which) {
  Eigen::Matrix4cd residual = m.adjoint() * m - Eigen::Matrix4cd::Identity();
  if (residual.cwiseAbs().maxCoeff() > kNormTol) {
    throw std::invalid_argument(std::string("transition amplitudes are not unitary: ") + which);
  }
}

void check_stochastic(const Eigen::Matrix4d& p, const char* which) {
  if (p.minCoeff() < 0.0) {
    throw std::invalid_argument(std::string("stochastic matrix has negative entries: ") + which);
  }
  for (int r = 0; r < 4; ++r) {
    if (std::abs(p.row(r).sum() - 1.0) > kNormTol) {
      throw std::invalid_argument(std::string("stochastic matrix rows must sum to 1: ") + which);
    }
  }
}

// Frobenius-nearest unitary (SVD polar factor).
Eigen::Matrix4cd polar_unitary(const Eigen::Matrix4cd& m) {
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

TransitionModel::TransitionModel(Eigen::Matrix4cd amp1, Eigen::Matrix4cd amp2)
    : amp1_(std::move(amp1)), amp2_(std::move(amp2)) {
  check_unitary4(amp1_, "step 1");
  check_unitary4(amp2_, "step 2");
  step1_ = amp1_.cwiseAbs2();
  step2_ = amp2_.cwiseAbs2();
  check_stochastic(step1_, "step 1");
  check_stochastic(step2_, "step 2");
}

TransitionModel TransitionModel::from_unitaries(const Eigen::Matrix4cd& amp1,
                                                const Eigen::Matrix4cd& amp2) {
  return TransitionModel(amp1, amp2);
}

TransitionModel TransitionModel::from_stochastic(const Eigen::Matrix4d& step1,
                                                 const Eigen::Matrix4d& step2) {
  check_stochastic(step1, "step 1");
  check_stochastic(step2, "step 2");
  Eigen::Matrix4cd a = polar_unitary(step1.cwiseSqrt().cast<Amplitude>());
  Eigen::Matrix4cd b = polar_unitary(step2.cwiseSqrt().cast<Amplitude>());
  return TransitionModel(a, b);
}

InterferenceComparison classical_vs_quantum_p0(const TransitionModel& model) {
  InterferenceComparison result{0.0, 0.0, 0.0};
  Amplitude path_sum = 0.0;
  for (int j = 0; j < 4; ++j) {
    result.classical += model.step1()(0, j) * model.step2()(j, 0);
    result.measured_between += std::norm(model.amp1()(0, j)) * std::norm(model.amp2()(j, 0));
    path_sum += model.amp1()(0, j) * model.amp2()(j, 0);
  }
  result.quantum = std::norm(path_sum);
  return result;
}

}  // namespace qsim::algos
