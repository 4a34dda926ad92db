#pragma once

#include "annulus/indexed_series.hpp"
#include "annulus/model.hpp"

namespace annulus {

/// Arc integrals of X(e^{i theta}) e^{i (k+1) theta} over the fixed arc (c12)
/// and the free arc (c11), for k in [-N-1, N].
///
/// Both are evaluated with the open equal-spaced rule
///   sum_{m=1}^{M} w(theta_m) e^{i eta(k, theta_m)} dtheta,  theta_m = a + m (b - a) / (M + 1),
/// which never samples the endpoint singularities at t1 and t2. The summand
/// grows like (distance to an endpoint)^(-1/2), so the rule converges only as
/// M^(-1/2); a Gauss-Jacobi rule would do far better but the equal-spaced sum
/// is what the M1/M2 point counts refer to.
struct QuadratureTable {
  int N = 0;
  int M1 = 0;
  int M2 = 0;
  Complex K0;
  IndexedSeries c11;
  IndexedSeries c12;
};

/// K0 = -(i/2) exp[lambda/2 (theta1 - theta2) - i/4 (theta1 + theta2)]
Complex k0_constant(const ProblemSpec& spec, const ContinuationParams& params);

IndexedSeries c12_table(const ProblemSpec& spec, const ContinuationParams& params, int N, int M2);
IndexedSeries c11_table(const ProblemSpec& spec, const ContinuationParams& params, int N, int M1);

QuadratureTable build_quadrature(const ProblemSpec& spec, const ContinuationParams& params, int N, int M1, int M2);

}  // namespace annulus
