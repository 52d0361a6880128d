#include "qsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qsim {

namespace {

void check_unitary(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd residual = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  if (residual.cwiseAbs().maxCoeff() > kNormTol) {
    throw std::invalid_argument("gate matrix is not unitary within 1e-10");
  }
}

Eigen::Matrix2cd m2(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

}  // namespace

GateSpec::GateSpec(Eigen::MatrixXcd matrix, std::vector<int> targets, std::vector<int> controls)
    : matrix_(std::move(matrix)), targets_(std::move(targets)), controls_(std::move(controls)) {
  if (targets_.size() != 1 && targets_.size() != 2) {
    throw std::invalid_argument("gates act on one or two target qubits");
  }
  Eigen::Index want = Eigen::Index{1} << targets_.size();
  if (matrix_.rows() != want || matrix_.cols() != want) {
    throw std::invalid_argument("gate matrix size does not match target count");
  }
  std::unordered_set<int> seen;
  for (int q : targets_) {
    if (q < 0 || !seen.insert(q).second) {
      throw std::invalid_argument("target qubits must be distinct and nonnegative");
    }
  }
  for (int q : controls_) {
    if (q < 0 || !seen.insert(q).second) {
      throw std::invalid_argument("control qubits must be distinct from targets and each other");
    }
  }
  check_unitary(matrix_);
}

GateSpec GateSpec::adjoint() const { return GateSpec(matrix_.adjoint(), targets_, controls_); }

GateSpec standard_gate(StdGate gate, const std::vector<int>& targets) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (gate) {
    case StdGate::I:
      return GateSpec(Eigen::Matrix2cd::Identity(), targets);
    case StdGate::X:
      return GateSpec(m2(0, 1, 1, 0), targets);
    case StdGate::Y:
      return GateSpec(m2(0, -1, 1, 0), targets);
    case StdGate::Z:
      return GateSpec(m2(1, 0, 0, -1), targets);
    case StdGate::H:
      return GateSpec(m2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2), targets);
    case StdGate::T:
      return GateSpec(m2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0)), targets);
    case StdGate::Cnot: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
      m(2, 2) = 0;
      m(3, 3) = 0;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return GateSpec(m, targets);
    }
  }
  throw std::invalid_argument("unknown gate");
}

GateSpec standard_gate(StdGate gate) {
  return standard_gate(gate, gate == StdGate::Cnot ? std::vector<int>{1, 0} : std::vector<int>{0});
}

StdGate parse_gate_name(std::string_view name) {
  if (name == "I") return StdGate::I;
  if (name == "X") return StdGate::X;
  if (name == "Y") return StdGate::Y;
  if (name == "Z") return StdGate::Z;
  if (name == "H") return StdGate::H;
  if (name == "T") return StdGate::T;
  if (name == "CNOT") return StdGate::Cnot;
  throw std::invalid_argument("unknown gate name: " + std::string(name));
}

GateSpec standard_gate(std::string_view name, const std::vector<int>& targets) {
  return standard_gate(parse_gate_name(name), targets);
}

GateSpec phase_gate(double angle, int target) {
  return GateSpec(m2(1, 0, 0, std::polar(1.0, angle)), {target});
}

GateSpec controlled_phase(double angle, int control, int target) {
  return GateSpec(m2(1, 0, 0, std::polar(1.0, angle)), {target}, {control});
}

StateVector apply_gate(const StateVector& state, const GateSpec& gate) {
  int n = state.num_qubits();
  std::uint64_t control_mask = 0;
  for (int q : gate.controls()) {
    if (q >= n) throw std::invalid_argument("control qubit index out of range");
    control_mask |= std::uint64_t{1} << q;
  }
  for (int q : gate.targets()) {
    if (q >= n) throw std::invalid_argument("target qubit index out of range");
  }

  const AmpVector& in = state.amps();
  AmpVector out = in;
  const Eigen::MatrixXcd& m = gate.matrix();
  std::uint64_t dim = state.dim();

  if (gate.span() == 1) {
    std::uint64_t t = std::uint64_t{1} << gate.targets()[0];
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & t) || ((i & control_mask) != control_mask)) continue;
      Amplitude a0 = in(static_cast<Eigen::Index>(i));
      Amplitude a1 = in(static_cast<Eigen::Index>(i | t));
      out(static_cast<Eigen::Index>(i)) = m(0, 0) * a0 + m(0, 1) * a1;
      out(static_cast<Eigen::Index>(i | t)) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  } else {
    std::uint64_t hi = std::uint64_t{1} << gate.targets()[0];
    std::uint64_t lo = std::uint64_t{1} << gate.targets()[1];
    std::uint64_t both = hi | lo;
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & both) || ((i & control_mask) != control_mask)) continue;
      std::uint64_t idx[4] = {i, i | lo, i | hi, i | both};
      Amplitude v[4];
      for (int c = 0; c < 4; ++c) v[c] = in(static_cast<Eigen::Index>(idx[c]));
      for (int r = 0; r < 4; ++r) {
        out(static_cast<Eigen::Index>(idx[r])) =
            m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2] + m(r, 3) * v[3];
      }
    }
  }
  return StateVector(n, std::move(out));
}

StateVector hadamard_all(const StateVector& state) {
  StateVector out = state;
  for (int q = 0; q < state.num_qubits(); ++q) {
    out = apply_gate(out, standard_gate(StdGate::H, {q}));
  }
  return out;
}

}  // namespace qsim
