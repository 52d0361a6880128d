#pragma once

#include "qsim/random.hpp"
#include "qsim/state.hpp"

namespace qsim::algos {

// Mach-Zehnder beam splitter model on one path qubit: each half-silvered
// mirror is an H, detector A is outcome 0 and detector B outcome 1. A blocked
// path absorbs the photon when the post-mirror-1 measurement lands on path 1;
// a mid-path measurement collapses without absorbing.
struct InterferometerConfig {
  int mirrors = 2;  // 1 = single beam splitter, 2 = full interferometer
  bool block_path = false;
  bool mid_measurement = false;
  int trials = 10000;
};

struct InterferometerStats {
  int trials = 0;
  int hits_a = 0;
  int hits_b = 0;
  int absorbed = 0;
  double freq_a = 0.0;  // conditional on detection
  double freq_b = 0.0;
  // Exact branch-enumeration probabilities (no sampling).
  double exact_p_a = 0.0;
  double exact_p_b = 0.0;
  double exact_p_absorbed = 0.0;
};

InterferometerStats interferometer(const InterferometerConfig& config, RandomSource& rng);

}  // namespace qsim::algos
