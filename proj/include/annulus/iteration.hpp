#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "annulus/fields.hpp"
#include "annulus/indexed_series.hpp"

namespace annulus {

/// Run metadata: the condition numbers of the two truncated systems and the
/// successive-approximation history.
struct IterationReport {
  int reps = 0;                 ///< linear-solve sweeps performed, the q = 0 start included
  double cond_alpha = 0.0;      ///< 2-norm condition number of the alpha-system
  double cond_beta = 0.0;       ///< 2-norm condition number of the beta-system
  std::vector<double> history;  ///< max_k |d_k^(q)| for q = 0 .. reps - 1
};

struct IterationState {
  IndexedSeries d;       ///< accumulated sum of increments
  IndexedSeries step;    ///< current increment d^(q)
  IndexedSeries A_step;  ///< A^(q) from the current increment
  IndexedSeries B_step;  ///< B^(q) from the current increment
  int q = 0;
};

struct SolveResult {
  SeriesSolution solution;
  IterationReport report;
};

/// Thrown when the increments have not dropped below epsilon by max_reps.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), history_(std::move(history)) {}
  [[nodiscard]] const std::vector<double>& history() const { return history_; }

 private:
  std::vector<double> history_;
};

}  // namespace annulus
