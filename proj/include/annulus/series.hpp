#pragma once

#include <utility>
#include <vector>

#include "annulus/model.hpp"

namespace annulus {

/// Taylor coefficients of the Plemelj factor
///   X(z) = (z - t1)^(-gamma) (z - t2)^(gamma - 1)
/// inside the unit circle (alpha_0 .. alpha_{2N}, powers z^k) and outside it
/// (beta_1 .. beta_{2N}, powers z^-k).
struct TaylorCoefficients {
  int N = 0;
  std::vector<Complex> alpha;  ///< alpha[k] for k = 0 .. 2N
  std::vector<Complex> beta;   ///< beta[k] for k = 1 .. 2N; beta[0] is unused and zero

  [[nodiscard]] int order() const { return 2 * N; }
};

/// gamma = 1/2 + i lambda with lambda = ln(kappa) / (2 pi). Throws for kappa <= 1.
ContinuationParams continuation_params(double kappa, Branch branch = Branch::as_given);

/// (h(-gamma, k), h(gamma - 1, k)): the k-factor falling products
///   h(-gamma, k)    = (-gamma)(-gamma - 1)...(-gamma - k + 1)
///   h(gamma - 1, k) = (gamma - 1)(gamma - 2)...(gamma - k)
std::pair<Complex, Complex> falling_products(Complex gamma, int k);

/// Angle used as arg(t) for the fractional powers under the given branch.
double branch_angle(double theta, Branch branch);

/// e^{exponent * i * arg}: a power of a unit-modulus number with an explicit branch.
Complex unit_power(double arg, Complex exponent);

std::vector<Complex> alpha_coeffs(const ProblemSpec& spec, const ContinuationParams& params, int up_to);
/// Indexed 0 .. up_to with entry 0 set to zero.
std::vector<Complex> beta_coeffs(const ProblemSpec& spec, const ContinuationParams& params, int up_to);

TaylorCoefficients taylor_coefficients(const ProblemSpec& spec, const ContinuationParams& params, int N);

}  // namespace annulus
