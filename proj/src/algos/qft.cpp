#include "qsim/algos/qft.hpp"

#include <numbers>
#include <stdexcept>

#include "qsim/gates.hpp"

namespace qsim::algos {

StateVector qft(const StateVector& state) {
  int n = state.num_qubits();
  StateVector s = state;
  for (int t = n - 1; t >= 0; --t) {
    s = apply_gate(s, standard_gate(StdGate::H, {t}));
    for (int c = t - 1; c >= 0; --c) {
      double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, t - c + 1);
      s = apply_gate(s, controlled_phase(angle, c, t));
    }
  }
  // Bit reversal, as an index permutation rather than swap gates.
  AmpVector amps(s.amps().size());
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    std::uint64_t rev = 0;
    for (int k = 0; k < n; ++k) {
      if ((i >> k) & 1u) rev |= std::uint64_t{1} << (n - 1 - k);
    }
    amps(static_cast<Eigen::Index>(rev)) = s.amp(i);
  }
  return StateVector(n, std::move(amps));
}

int qft_gate_count(int n) {
  if (n < 1) throw std::invalid_argument("qft_gate_count needs n >= 1");
  return n * (n + 1) / 2;
}

}  // namespace qsim::algos
