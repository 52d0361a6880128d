#include "qsim/state.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <Eigen/SVD>

namespace qsim {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n));
  }
}

}  // namespace

StateVector::StateVector(int num_qubits, AmpVector amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
  check_qubit_count(num_qubits_);
  if (amps_.size() != static_cast<Eigen::Index>(dim())) {
    throw std::invalid_argument("amplitude vector size does not match qubit count");
  }
  if (!amps_.allFinite()) {
    throw std::invalid_argument("amplitudes must be finite");
  }
  double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw std::invalid_argument("state vector is not unit norm: |psi|^2 = " +
                                std::to_string(norm2));
  }
}

StateVector basis_state(int num_qubits, std::string_view label) {
  check_qubit_count(num_qubits);
  if (static_cast<int>(label.size()) != num_qubits) {
    throw std::invalid_argument("basis label length does not match qubit count");
  }
  std::uint64_t index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis label must contain only 0/1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return basis_state(num_qubits, index);
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  AmpVector amps = AmpVector::Zero(static_cast<Eigen::Index>(dim));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

std::string basis_label(std::uint64_t index, int num_qubits) {
  std::string label(static_cast<std::size_t>(num_qubits), '0');
  for (int k = 0; k < num_qubits; ++k) {
    if ((index >> k) & 1u) {
      label[static_cast<std::size_t>(num_qubits - 1 - k)] = '1';
    }
  }
  return label;
}

Amplitude inner(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner product requires equal qubit counts");
  }
  return a.amps().dot(b.amps());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits) {
    throw std::invalid_argument("tensor product exceeds the " + std::to_string(kMaxQubits) +
                                "-qubit cap");
  }
  std::uint64_t dim_b = b.dim();
  AmpVector amps(static_cast<Eigen::Index>(a.dim() * dim_b));
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    for (std::uint64_t j = 0; j < dim_b; ++j) {
      amps(static_cast<Eigen::Index>(i * dim_b + j)) = a.amp(i) * b.amp(j);
    }
  }
  return StateVector(n, std::move(amps));
}

StateVector reflect_about(const StateVector& psi, const StateVector& axis) {
  if (psi.num_qubits() != axis.num_qubits()) {
    throw std::invalid_argument("reflect_about requires equal qubit counts");
  }
  Amplitude overlap = inner(axis, psi);
  AmpVector amps = 2.0 * overlap * axis.amps() - psi.amps();
  return StateVector(psi.num_qubits(), std::move(amps));
}

SeparabilityResult is_separable_2q(const StateVector& state) {
  if (state.num_qubits() != 2) {
    throw std::invalid_argument("is_separable_2q requires a 2-qubit state");
  }
  Amplitude det = state.amp(0) * state.amp(3) - state.amp(1) * state.amp(2);
  if (std::abs(det) > 1e-9) {
    return {false, std::nullopt};
  }
  // Rank-1 factorization of M[hi][lo] = amp(hi*2 + lo) via 2x2 SVD:
  // M = s1 * u1 * v1^dagger, so high factor = u1, low factor = conj(v1).
  Eigen::Matrix2cd m;
  m << state.amp(0), state.amp(1), state.amp(2), state.amp(3);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  AmpVector high(2), low(2);
  high << svd.matrixU()(0, 0), svd.matrixU()(1, 0);
  low << std::conj(svd.matrixV()(0, 0)), std::conj(svd.matrixV()(1, 0));
  low *= svd.singularValues()(0);
  low /= low.norm();
  SeparabilityResult result;
  result.separable = true;
  result.factors.emplace(StateVector(1, std::move(high)), StateVector(1, std::move(low)));
  return result;
}

void dump_amplitudes(const StateVector& state, std::ostream& os) {
  char line[80];
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    Amplitude a = state.amp(i);
    std::snprintf(line, sizeof(line), "%llu %s %.12f %.12f",
                  static_cast<unsigned long long>(i),
                  basis_label(i, state.num_qubits()).c_str(), a.real(), a.imag());
    os << line << '\n';
  }
}

}  // namespace qsim
