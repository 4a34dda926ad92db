#include "annulus/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

// Generalised binomial coefficients (-1)^l h(a, l) / l! of (1 - x)^a, built
// with the ratio recursion so that no factorial is ever formed.
std::vector<Complex> binomial_series(Complex exponent, int count) {
  std::vector<Complex> c(static_cast<std::size_t>(count + 1));
  c[0] = 1.0;
  for (int l = 1; l <= count; ++l) c[l] = c[l - 1] * (static_cast<double>(l) - 1.0 - exponent) / static_cast<double>(l);
  return c;
}

}  // namespace

ContinuationParams continuation_params(double kappa, Branch branch) {
  if (!(kappa > 1.0)) throw std::domain_error("continuation_params: kappa must exceed 1");
  ContinuationParams p;
  p.lambda = std::log(kappa) / (2.0 * kPi);
  p.gamma = Complex(0.5, p.lambda);
  p.branch = branch;
  return p;
}

std::pair<Complex, Complex> falling_products(Complex gamma, int k) {
  if (k <= 0) throw std::invalid_argument("falling_products: k must be positive");
  Complex h_minus = -gamma;
  Complex h_plus = gamma - 1.0;
  for (int j = 1; j < k; ++j) {
    h_minus *= -gamma - static_cast<double>(j);
    h_plus *= gamma - 1.0 - static_cast<double>(j);
  }
  return {h_minus, h_plus};
}

double branch_angle(double theta, Branch branch) {
  if (branch == Branch::as_given) return theta;
  double a = std::fmod(theta + kPi, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a - kPi;
}

Complex unit_power(double arg, Complex exponent) { return std::exp(exponent * Complex(0.0, arg)); }

std::vector<Complex> alpha_coeffs(const ProblemSpec& spec, const ContinuationParams& params, int up_to) {
  if (up_to < 0) throw std::invalid_argument("alpha_coeffs: negative order");
  const Complex gamma = params.gamma;
  const double arg1 = branch_angle(spec.theta1, params.branch);
  const double arg2 = branch_angle(spec.theta2, params.branch);
  const Complex prefactor = -unit_power(arg1, -gamma) * unit_power(arg2, gamma - 1.0);

  // (1 - z/t1)^(-gamma) and (1 - z/t2)^(gamma - 1), each with the integer
  // powers of 1/t folded in.
  auto first = binomial_series(-gamma, up_to);
  auto second = binomial_series(gamma - 1.0, up_to);
  for (int l = 0; l <= up_to; ++l) {
    first[l] *= std::polar(1.0, -l * spec.theta1);
    second[l] *= std::polar(1.0, -l * spec.theta2);
  }

  std::vector<Complex> alpha(static_cast<std::size_t>(up_to + 1));
  for (int k = 0; k <= up_to; ++k) {
    Complex s{};
    for (int l = 0; l <= k; ++l) s += first[l] * second[k - l];
    alpha[k] = prefactor * s;
  }
  return alpha;
}

std::vector<Complex> beta_coeffs(const ProblemSpec& spec, const ContinuationParams& params, int up_to) {
  if (up_to < 1) throw std::invalid_argument("beta_coeffs: order must be at least 1");
  const Complex gamma = params.gamma;
  // z^-1 (1 - t1/z)^(-gamma) (1 - t2/z)^(gamma - 1); only integer powers of
  // t1, t2 appear, so the branch plays no role here.
  auto first = binomial_series(-gamma, up_to - 1);
  auto second = binomial_series(gamma - 1.0, up_to - 1);
  for (int l = 0; l < up_to; ++l) {
    first[l] *= std::polar(1.0, l * spec.theta1);
    second[l] *= std::polar(1.0, l * spec.theta2);
  }

  std::vector<Complex> beta(static_cast<std::size_t>(up_to + 1));
  for (int k = 1; k <= up_to; ++k) {
    Complex s{};
    for (int l = 0; l <= k - 1; ++l) s += first[l] * second[k - 1 - l];
    beta[k] = s;
  }
  beta[1] = 1.0;
  return beta;
}

TaylorCoefficients taylor_coefficients(const ProblemSpec& spec, const ContinuationParams& params, int N) {
  if (N < 1) throw std::invalid_argument("taylor_coefficients: N must be positive");
  TaylorCoefficients t;
  t.N = N;
  t.alpha = alpha_coeffs(spec, params, 2 * N);
  t.beta = beta_coeffs(spec, params, 2 * N);
  return t;
}

}  // namespace annulus
