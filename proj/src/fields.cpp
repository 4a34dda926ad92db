#include "annulus/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace annulus {

namespace {

void require_in_annulus(const SeriesSolution& sol, double rho) {
  // Allow a few ulps so that rho = r read back from text still qualifies.
  const double slack = 1e-12;
  if (!(rho >= sol.spec.r - slack && rho <= 1.0 + slack)) throw std::domain_error("rho outside the annulus [r, 1]");
}

}  // namespace

double lanczos_filter(int k, int N) {
  if (N <= 0) throw std::invalid_argument("lanczos_filter: N must be positive");
  if (std::abs(k) > N) throw std::domain_error("lanczos_filter: |k| > N");
  if (k == 0) return 1.0;
  if (std::abs(k) == N) return 0.0;
  const double x = std::abs(k) * std::numbers::pi / N;
  return std::sin(x) / x;
}

void assemble_AB(const IndexedSeries& d, const TaylorCoefficients& taylor, int N, IndexedSeries& A, IndexedSeries& B) {
  A = IndexedSeries(-N, N);
  B = IndexedSeries(-N, N);
  for (int k = -N; k <= N; ++k) {
    Complex a{};
    for (int l = 0; l <= N + k; ++l) a += taylor.alpha[l] * d[k - l];
    A[k] = a;
    Complex b{};
    for (int l = 1; l <= N - k; ++l) b += taylor.beta[l] * d[k + l];
    B[k] = b;
  }
}

SeriesSolution assemble_AB(const IndexedSeries& d, const TaylorCoefficients& taylor, int N, const ProblemSpec& spec) {
  if (d.first() != -N || d.last() != N) throw std::invalid_argument("assemble_AB: d must cover [-N, N]");
  if (taylor.order() < 2 * N) throw std::invalid_argument("assemble_AB: Taylor coefficients too short");
  SeriesSolution sol;
  sol.N = N;
  sol.d = d;
  sol.spec = spec;
  assemble_AB(d, taylor, N, sol.A, sol.B);
  return sol;
}

Complex radial_traction(const SeriesSolution& sol, double rho, double theta) {
  const int N = sol.N;
  const double damp = 1.0 - 1.0 / (rho * rho);
  Complex total{};
  for (int k = -N; k <= N; ++k) {
    const double F = lanczos_filter(k, N);
    if (F == 0.0) continue;
    const Complex term = std::pow(rho, k) * sol.A[k] + (k + 1.0) * damp * std::pow(rho, -k) * std::conj(sol.A[-k]) -
                         std::pow(rho, -k - 2) * sol.B[k];
    total += F * term * std::polar(1.0, k * theta);
  }
  return total;
}

StressSample stress_at(const SeriesSolution& sol, double rho, double theta) {
  require_in_annulus(sol, rho);
  const int N = sol.N;
  Complex phi{};
  for (int k = -N; k <= N; ++k) phi += lanczos_filter(k, N) * sol.A[k] * std::pow(rho, k) * std::polar(1.0, k * theta);
  const Complex radial = radial_traction(sol, rho, theta);
  StressSample s;
  s.sigma_rho = radial.real();
  s.tau_rhotheta = radial.imag();
  s.sigma_theta = 4.0 * phi.real() - s.sigma_rho;
  return s;
}

Displacement displacement_at(const SeriesSolution& sol, const RigidBody& rigid, double rho, double theta) {
  require_in_annulus(sol, rho);
  const int N = sol.N;
  const double kappa = sol.spec.kappa();
  const double damp = 1.0 - 1.0 / (rho * rho);
  const auto& A = sol.A;
  const auto& B = sol.B;

  // 2G(u + iv) with G = 1; the three families below follow the harmonic
  // e^{i(k+1)theta} for k >= 0, the constant (k = -1) term, and
  // e^{i(1-k)theta} for k >= 2.
  Complex g{};
  for (int k = 0; k <= N; ++k) {
    const Complex bracket = kappa * A[k] * std::pow(rho, k + 1) / (k + 1.0) -
                            std::conj(A[-k]) * std::pow(rho, 1 - k) * damp + B[k] * std::pow(rho, -k - 1) / (k + 1.0);
    g += lanczos_filter(k, N) * bracket * std::polar(1.0, (k + 1) * theta);
  }
  if (N >= 1) g += lanczos_filter(1, N) * ((kappa * A[-1] - B[-1]) * std::log(rho) - std::conj(A[1]) * rho * rho);
  for (int k = 2; k <= N; ++k) {
    const Complex bracket = kappa * A[-k] * std::pow(rho, 1 - k) / (1.0 - k) -
                            std::conj(A[k]) * std::pow(rho, k + 1) * damp - B[-k] * std::pow(rho, k - 1) / (k - 1.0);
    g += lanczos_filter(k, N) * bracket * std::polar(1.0, (1 - k) * theta);
  }
  const Complex w = 0.5 * g - Complex(rigid.dx, rigid.dy);
  return {w.real(), w.imag()};
}

RigidBody rigid_body_constant(const SeriesSolution& sol, int samples) {
  if (samples < 2) throw std::invalid_argument("rigid_body_constant: need at least two samples");
  const double a = sol.spec.theta1 + kEndZone;
  const double b = sol.spec.theta2 - kEndZone;
  if (!(b > a)) throw std::domain_error("rigid_body_constant: fixed arc shorter than the excluded end zones");
  Complex sum{};
  for (int i = 0; i < samples; ++i) {
    const double theta = a + (b - a) * i / (samples - 1);
    const Displacement w = displacement_at(sol, RigidBody{}, 1.0, theta);
    sum += Complex(w.u, w.v);
  }
  sum /= static_cast<double>(samples);
  return {sum.real(), sum.imag()};
}

FieldSample sample_field(const SeriesSolution& sol, const RigidBody& rigid, double rho, double theta, bool sign_flip) {
  const StressSample s = stress_at(sol, rho, theta);
  const Displacement w = displacement_at(sol, rigid, rho, theta);
  // Adding +0.0 turns the -0.0 of a flipped zero back into +0.0.
  const auto flip = [sign_flip](double x) { return (sign_flip ? -x : x) + 0.0; };
  return {rho, theta, flip(s.sigma_theta), flip(s.sigma_rho), flip(s.tau_rhotheta), flip(w.u), flip(w.v)};
}

}  // namespace annulus
