#pragma once

#include <string_view>
#include <vector>

#include "qsim/state.hpp"

namespace qsim {

/// A unitary acting on one or two target qubits, optionally conditioned on
/// control qubits (identity unless every control bit is 1). For two-target
/// gates, targets[0] is the high bit of the matrix index and targets[1] the
/// low bit, so CNOT's 4x4 matrix reads in the paper's |control target>
/// basis order when targets = {control, target}.
class GateSpec {
 public:
  GateSpec(Eigen::MatrixXcd matrix, std::vector<int> targets, std::vector<int> controls = {});

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  const std::vector<int>& targets() const { return targets_; }
  const std::vector<int>& controls() const { return controls_; }
  int span() const { return static_cast<int>(targets_.size()); }

  GateSpec adjoint() const;

 private:
  Eigen::MatrixXcd matrix_;
  std::vector<int> targets_;
  std::vector<int> controls_;
};

enum class StdGate { I, X, Y, Z, H, T, Cnot };

/// The paper's gate set. Y is the paper's real matrix [[0,-1],[1,0]] (the
/// standard physics sigma_y differs by a factor i; no algorithm here depends
/// on the choice). T = diag(1, e^{i pi/4}); H carries the 1/sqrt(2)
/// normalization forced by unit norm. CNOT takes targets {control, target}.
GateSpec standard_gate(StdGate gate, const std::vector<int>& targets);
GateSpec standard_gate(StdGate gate);  // targets {0}, CNOT {1, 0}

/// Name lookup for I, X, Y, Z, H, T, CNOT; throws on unknown names.
GateSpec standard_gate(std::string_view name, const std::vector<int>& targets);
StdGate parse_gate_name(std::string_view name);

/// diag(1, e^{i angle}) on target.
GateSpec phase_gate(double angle, int target);

/// diag(1, e^{i angle}) on target conditioned on control.
GateSpec controlled_phase(double angle, int control, int target);

/// U|psi> with the gate embedded on its targets/controls and identity
/// elsewhere, computed by strided index arithmetic (the full 2^n x 2^n
/// operator is never materialized).
StateVector apply_gate(const StateVector& state, const GateSpec& gate);

/// H on every qubit; from |0...0> this is the uniform superposition.
StateVector hadamard_all(const StateVector& state);

}  // namespace qsim
