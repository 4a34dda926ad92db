#pragma once

// Right-hand-side rows shared by both successive-approximation schemes.
// Rows come from the inner-boundary coefficient match
//   A_k r^k + (k+1) conj(A_{-k}) (1 - r^-2) r^-k - B_k r^(-k-2) = p_k + i q_k
// solved for A_{-k} (alpha rows, k >= 2) and for B_k (beta rows, k >= 0).

#include <cmath>
#include <complex>

#include "annulus/indexed_series.hpp"
#include "annulus/model.hpp"

namespace annulus::detail {

inline double damping(double r) { return 1.0 - 1.0 / (r * r); }

/// Traction part of the alpha row k >= 2: r^k (p_{-k} + i q_{-k}).
inline Complex alpha_load(const ProblemSpec& spec, int k) {
  return std::pow(spec.r, k) * spec.traction.coefficient(-k);
}

/// Feedback part of the alpha row k >= 2 from the previous increment.
inline Complex alpha_feedback(double r, int k, const IndexedSeries& A, const IndexedSeries& B) {
  return (k - 1.0) * damping(r) * std::pow(r, 2 * k) * std::conj(A[k]) + std::pow(r, 2 * k - 2) * B[-k];
}

/// Traction part of the beta row k = 0 or k >= 2:
///   k = 0:  -r^2 (p_0 + i q_0)
///   k >= 2: (k+1)(1 - r^-2) r^(k+2) (p_{-k} - i q_{-k}) - r^(k+2) (p_k + i q_k)
inline Complex beta_load(const ProblemSpec& spec, int k) {
  const double r = spec.r;
  const Complex own = -std::pow(r, k + 2) * spec.traction.coefficient(k);
  if (k == 0) return own;
  return (k + 1.0) * damping(r) * std::pow(r, k + 2) * std::conj(spec.traction.coefficient(-k)) + own;
}

/// Feedback part of the beta row k = 0 or k >= 2 (row k = 1 is scheme specific).
inline Complex beta_feedback(double r, int k, const IndexedSeries& A, const IndexedSeries& B) {
  const double s = damping(r);
  if (k == 0) return r * r * A[0] + s * r * r * std::conj(A[0]);
  const double r2k2 = std::pow(r, 2 * k + 2);
  return r2k2 * A[k] + (k * k - 1.0) * s * s * r2k2 * A[k] + (k + 1.0) * s * std::pow(r, 2 * k) * std::conj(B[-k]);
}

}  // namespace annulus::detail
