#pragma once

#include "qsim/state.hpp"

namespace qsim::algos {

/// Quantum Fourier transform with base 2^n:
/// |a> -> 2^{-n/2} sum_c e^{2 pi i c a / 2^n} |c>,
/// built as the standard circuit of Hadamard and controlled-phase gates
/// (qft_gate_count of them) followed by the bit-reversal reordering.
StateVector qft(const StateVector& state);

/// H and controlled-phase gates in the circuit: n(n+1)/2.
int qft_gate_count(int n);

}  // namespace qsim::algos
