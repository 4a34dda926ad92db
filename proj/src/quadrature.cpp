#include "annulus/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace annulus {

namespace {

// Accumulates sum_m w_m e^{i eta(k, theta_m)} dtheta for every k in [-N-1, N].
// The arc runs from `start` over `length`; `near`/`far` pick which endpoint
// each sine factor is measured from so that both stay positive:
//   fixed arc: s_a = sin((theta - theta1)/2), s_b = sin((theta2 - theta)/2)
//   free arc:  s_a = sin((theta - theta1)/2), s_b = sin((theta - theta2)/2)
// eta = (k + 1/2) theta + lambda ln(s_b / s_a).
template <typename Factors>
IndexedSeries open_arc_sums(int N, int M, double start, double length, double lambda, Factors factors) {
  IndexedSeries sums(-N - 1, N);
  const double h = length / (M + 1);
  auto acc = sums.values();
  const std::size_t K = acc.size();
  for (int m = 1; m <= M; ++m) {
    const double theta = start + m * h;
    const auto [s_a, s_b] = factors(m, h);
    const double weight = h / std::sqrt(s_a * s_b);
    const double phase = lambda * std::log(s_b / s_a) + (-N - 0.5) * theta;
    Complex term = std::polar(weight, phase);
    const Complex step = std::polar(1.0, theta);
    for (std::size_t j = 0; j < K; ++j) {
      acc[j] += term;
      term *= step;
    }
  }
  return sums;
}

}  // namespace

Complex k0_constant(const ProblemSpec& spec, const ContinuationParams& params) {
  const Complex exponent(params.lambda / 2.0 * (spec.theta1 - spec.theta2), -(spec.theta1 + spec.theta2) / 4.0);
  return Complex(0.0, -0.5) * std::exp(exponent);
}

IndexedSeries c12_table(const ProblemSpec& spec, const ContinuationParams& params, int N, int M2) {
  if (M2 < 100) throw std::invalid_argument("c12_table: M2 must be at least 100");
  const double length = spec.theta2 - spec.theta1;
  // theta - theta1 = m h and theta2 - theta = (M2 + 1 - m) h exactly.
  auto sums = open_arc_sums(N, M2, spec.theta1, length, params.lambda, [M2](int m, double h) {
    return std::pair{std::sin(m * h / 2.0), std::sin((M2 + 1 - m) * h / 2.0)};
  });
  const Complex scale = -std::exp(std::numbers::pi * params.lambda) * k0_constant(spec, params);
  for (auto& v : sums.values()) v *= scale;
  return sums;
}

IndexedSeries c11_table(const ProblemSpec& spec, const ContinuationParams& params, int N, int M1) {
  if (M1 < 100) throw std::invalid_argument("c11_table: M1 must be at least 100");
  const double length = 2.0 * std::numbers::pi - (spec.theta2 - spec.theta1);
  // theta - theta2 = m h; theta - theta1 = 2 pi - (M1 + 1 - m) h, whose half-angle
  // sine equals sin((M1 + 1 - m) h / 2) without cancellation near the far end.
  auto sums = open_arc_sums(N, M1, spec.theta2, length, params.lambda, [M1](int m, double h) {
    return std::pair{std::sin((M1 + 1 - m) * h / 2.0), std::sin(m * h / 2.0)};
  });
  const Complex scale = Complex(0.0, 1.0) * k0_constant(spec, params);
  for (auto& v : sums.values()) v *= scale;
  return sums;
}

QuadratureTable build_quadrature(const ProblemSpec& spec, const ContinuationParams& params, int N, int M1, int M2) {
  QuadratureTable q;
  q.N = N;
  q.M1 = M1;
  q.M2 = M2;
  q.K0 = k0_constant(spec, params);
  q.c11 = c11_table(spec, params, N, M1);
  q.c12 = c12_table(spec, params, N, M2);
  return q;
}

}  // namespace annulus
