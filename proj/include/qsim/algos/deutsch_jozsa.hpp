#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qsim/state.hpp"

namespace qsim::algos {

/// Black-box boolean predicate over n-bit inputs. The callback must be a
/// deterministic total function; it is lifted per basis index to a phase or
/// bit oracle by the algorithms that consume it.
struct Oracle {
  int n = 0;
  std::function<bool(std::uint64_t)> predicate;
  std::optional<std::uint64_t> solution_count;  // counted on demand if absent
};

/// (-1)^{f(x)} phase flip on every basis component.
StateVector apply_phase_oracle(const StateVector& state, const Oracle& oracle);

/// Number of inputs with f(x) = 1; uses the declared count when present.
std::uint64_t count_solutions(const Oracle& oracle);

enum class DjVerdict { Constant, Balanced };

struct DeutschJozsaResult {
  DjVerdict verdict;
  double p_all_zeros;  // probability of measuring |0...0>; 1 or 0 under the promise
};

/// H^n -> phase oracle -> H^n; verdict is Constant iff the all-zeros outcome
/// has probability 1. One oracle application; correct with certainty on
/// promise-satisfying oracles (violations go undetected by contract).
DeutschJozsaResult deutsch_jozsa(const Oracle& oracle);

}  // namespace qsim::algos
