#pragma once

#include <cmath>
#include <string>

#include "annulus/iteration.hpp"
#include "annulus/model.hpp"

namespace annulus::detail {

// Drives start/advance until the increment drops to epsilon. reps counts
// every sweep, the q = 0 start included.
template <typename Start, typename Advance>
IterationState successive_approximation(const SolverConfig& config, IterationReport& report, Start start,
                                        Advance advance) {
  IterationState state = start();
  report.history.assign(1, state.step.max_abs());
  while (!(report.history.back() <= config.epsilon)) {
    if (!std::isfinite(report.history.back()))
      throw ConvergenceError("successive approximation diverged (non-finite increment)", report.history);
    if (static_cast<int>(report.history.size()) >= config.max_reps)
      throw ConvergenceError(
          "successive approximation did not reach epsilon within " + std::to_string(config.max_reps) + " reps",
          report.history);
    state = advance(state);
    report.history.push_back(state.step.max_abs());
  }
  report.reps = static_cast<int>(report.history.size());
  return state;
}

}  // namespace annulus::detail
