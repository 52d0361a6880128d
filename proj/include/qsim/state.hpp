#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace qsim {

using Amplitude = std::complex<double>;
using AmpVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 24;      // 2^24 amplitudes, ~256 MB
inline constexpr double kNormTol = 1e-10;  // unit norm / unitarity
inline constexpr double kStateTol = 1e-9;  // per-amplitude state equality

/// Dense state vector over n qubits. Index i encodes the basis ket
/// |b_{n-1} ... b_1 b_0> with i = sum_k b_k 2^k, so "qubit k" is bit k of
/// the index and the rightmost ket symbol is qubit 0.
///
/// States are unit vectors (enforced at construction, tolerance kNormTol)
/// and immutable once built: every operation returns a new state, and values
/// are safe to share across threads.
class StateVector {
 public:
  StateVector(int num_qubits, AmpVector amps);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
  const AmpVector& amps() const { return amps_; }
  Amplitude amp(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
  double norm() const { return amps_.norm(); }

 private:
  int num_qubits_;
  AmpVector amps_;
};

/// |label> with the leftmost label symbol as the highest qubit.
StateVector basis_state(int num_qubits, std::string_view label);

/// |index> over n qubits.
StateVector basis_state(int num_qubits, std::uint64_t index);

/// Label of a basis index, most significant qubit first.
std::string basis_label(std::uint64_t index, int num_qubits);

/// <a|b>; conjugates the first argument.
Amplitude inner(const StateVector& a, const StateVector& b);

/// Composite |a>|b> with a occupying the high qubits (leftmost ket symbols).
StateVector tensor(const StateVector& a, const StateVector& b);

/// Reflection through |axis>: psi -> 2<axis|psi>|axis> - psi. Unitary.
StateVector reflect_about(const StateVector& psi, const StateVector& axis);

struct SeparabilityResult {
  bool separable = false;
  // Present iff separable: high-qubit factor then low-qubit factor,
  // tensor(high, low) reproduces the input within kStateTol.
  std::optional<std::pair<StateVector, StateVector>> factors;
};

/// Two-qubit separability: a00*a11 - a01*a10 == 0 within 1e-9 means the
/// state factors as (high qubit) x (low qubit).
SeparabilityResult is_separable_2q(const StateVector& state);

/// Debug dump, one line per amplitude: "index bitstring re im" with
/// fixed-point 12-decimal reals.
void dump_amplitudes(const StateVector& state, std::ostream& os);

}  // namespace qsim
