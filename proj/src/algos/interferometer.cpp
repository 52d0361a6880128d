#include "qsim/algos/interferometer.hpp"

#include <cmath>
#include <stdexcept>

#include "qsim/gates.hpp"
#include "qsim/measure.hpp"

namespace qsim::algos {

namespace {

// One sampled photon. Returns 0 (detector A), 1 (detector B) or -1 (absorbed).
int run_trial(const InterferometerConfig& config, RandomSource& rng) {
  GateSpec mirror = standard_gate(StdGate::H);
  StateVector photon = apply_gate(basis_state(1, "0"), mirror);
  if (config.mirrors == 1) {
    return measure_all(photon, rng).outcome == "0" ? 0 : 1;
  }
  if (config.block_path) {
    MeasurementRecord r = measure_all(photon, rng);
    if (r.outcome == "1") return -1;  // screen sits on path 1
    photon = r.post_state;
  } else if (config.mid_measurement) {
    photon = measure_all(photon, rng).post_state;
  }
  photon = apply_gate(photon, mirror);
  return measure_all(photon, rng).outcome == "0" ? 0 : 1;
}

}  // namespace

InterferometerStats interferometer(const InterferometerConfig& config, RandomSource& rng) {
  if (config.trials < 1) {
    throw std::invalid_argument("interferometer needs at least one trial");
  }
  if (config.mirrors != 1 && config.mirrors != 2) {
    throw std::invalid_argument("interferometer models one or two mirrors");
  }

  InterferometerStats stats;
  stats.trials = config.trials;
  for (int t = 0; t < config.trials; ++t) {
    switch (run_trial(config, rng)) {
      case 0: ++stats.hits_a; break;
      case 1: ++stats.hits_b; break;
      default: ++stats.absorbed; break;
    }
  }
  int detected = stats.hits_a + stats.hits_b;
  if (detected > 0) {
    stats.freq_a = static_cast<double>(stats.hits_a) / detected;
    stats.freq_b = static_cast<double>(stats.hits_b) / detected;
  }

  // Exact probabilities by enumerating the (at most two) measurement
  // branches; with no collapse this is the pure amplitude computation. Born
  // weights are normalized over each complete outcome pair, so an amplitude
  // that cancels exactly leaves the other outcome at exactly 1.
  auto born = [](const StateVector& s, std::uint64_t outcome) {
    double w0 = std::norm(s.amp(0));
    double w1 = std::norm(s.amp(1));
    return (outcome == 0 ? w0 : w1) / (w0 + w1);
  };
  GateSpec mirror = standard_gate(StdGate::H);
  StateVector after_first = apply_gate(basis_state(1, "0"), mirror);
  if (config.mirrors == 1) {
    stats.exact_p_a = born(after_first, 0);
    stats.exact_p_b = born(after_first, 1);
  } else if (config.block_path || config.mid_measurement) {
    for (std::uint64_t branch = 0; branch < 2; ++branch) {
      double p_branch = born(after_first, branch);
      if (p_branch == 0.0) continue;
      if (config.block_path && branch == 1) {
        stats.exact_p_absorbed += p_branch;
        continue;
      }
      StateVector final = apply_gate(basis_state(1, branch), mirror);
      stats.exact_p_a += p_branch * born(final, 0);
      stats.exact_p_b += p_branch * born(final, 1);
    }
  } else {
    StateVector final = apply_gate(after_first, mirror);
    stats.exact_p_a = born(final, 0);
    stats.exact_p_b = born(final, 1);
  }
  return stats;
}

}  // namespace qsim::algos
