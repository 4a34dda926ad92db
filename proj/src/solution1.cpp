#include "annulus/solution1.hpp"

#include <cmath>

#include "constraint_rows.hpp"
#include "iteration_loop.hpp"

namespace annulus::solution1 {

namespace {

// Solves both triangular systems and scatters the result into d^(q).
IterationState solve_step(const Systems& systems, const TaylorCoefficients& taylor, const ComplexVector& alpha_rhs,
                          const ComplexVector& beta_rhs, int q) {
  const int N = systems.N;
  const ComplexVector x = solve_triangular_toeplitz(systems.alpha_band, alpha_rhs);
  const ComplexVector y = solve_triangular_toeplitz(systems.beta_band, beta_rhs);
  IterationState state;
  state.q = q;
  state.step = IndexedSeries(-N, N);
  for (int j = 1; j <= N; ++j) state.step[-j] = x(j - 1);
  for (int j = 0; j <= N; ++j) state.step[j] = y(j);
  assemble_AB(state.step, taylor, N, state.A_step, state.B_step);
  return state;
}

}  // namespace

Systems assemble_systems(const TaylorCoefficients& taylor, int N) {
  if (N < 2) throw std::invalid_argument("assemble_systems: N must be at least 2");
  if (taylor.order() < N + 1) throw std::invalid_argument("assemble_systems: Taylor coefficients too short");
  Systems s;
  s.N = N;
  s.alpha_band.assign(taylor.alpha.begin(), taylor.alpha.begin() + N);
  s.beta_band.assign(taylor.beta.begin() + 1, taylor.beta.begin() + N + 2);
  s.alpha_system = toeplitz_matrix(s.alpha_band, N);
  s.beta_system = toeplitz_matrix(s.beta_band, N + 1);
  return s;
}

ComplexVector initial_alpha_rhs(const ProblemSpec& spec, int N) {
  const double kappa = spec.kappa();
  ComplexVector rhs = ComplexVector::Zero(N);
  rhs(0) = spec.traction.coefficient(-1) * spec.r / (1.0 + kappa);
  for (int k = 2; k <= N; ++k) rhs(k - 1) = detail::alpha_load(spec, k);
  return rhs;
}

ComplexVector initial_beta_rhs(const ProblemSpec& spec, int N) {
  const double kappa = spec.kappa();
  const double r = spec.r;
  const Complex resultant = spec.traction.coefficient(-1);
  ComplexVector rhs = ComplexVector::Zero(N + 1);
  rhs(0) = -kappa * resultant * r / (1.0 + kappa);
  rhs(1) = detail::beta_load(spec, 0);
  // conj(A_{-1}) is fixed by the resultant, which turns row k = 1 into a load.
  rhs(2) = 2.0 * detail::damping(r) * std::pow(r, 3) * std::conj(resultant) / (1.0 + kappa) -
           std::pow(r, 3) * spec.traction.coefficient(1);
  for (int k = 2; k <= N - 1; ++k) rhs(k + 1) = detail::beta_load(spec, k);
  return rhs;
}

ComplexVector alpha_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N) {
  ComplexVector rhs = ComplexVector::Zero(N);
  for (int k = 2; k <= N; ++k) rhs(k - 1) = detail::alpha_feedback(spec.r, k, A_prev, B_prev);
  return rhs;
}

ComplexVector beta_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N) {
  const double r = spec.r;
  ComplexVector rhs = ComplexVector::Zero(N + 1);
  rhs(1) = detail::beta_feedback(r, 0, A_prev, B_prev);
  rhs(2) = std::pow(r, 4) * A_prev[1];
  for (int k = 2; k <= N - 1; ++k) rhs(k + 1) = detail::beta_feedback(r, k, A_prev, B_prev);
  return rhs;
}

IterationState initial_step(const ProblemSpec& spec, const TaylorCoefficients& taylor, const Systems& systems) {
  IterationState state =
      solve_step(systems, taylor, initial_alpha_rhs(spec, systems.N), initial_beta_rhs(spec, systems.N), 0);
  state.d = state.step;
  return state;
}

IterationState iterate_once(const IterationState& state, const TaylorCoefficients& taylor, const Systems& systems,
                            const ProblemSpec& spec) {
  const int N = systems.N;
  IterationState next = solve_step(systems, taylor, alpha_rhs(spec, state.A_step, state.B_step, N),
                                   beta_rhs(spec, state.A_step, state.B_step, N), state.q + 1);
  next.d = state.d;
  next.d += next.step;
  return next;
}

SolveResult run(const ProblemSpec& spec, const SolverConfig& config) {
  validate(spec, config);
  const int N = config.N;
  const auto params = continuation_params(spec.kappa(), config.branch);
  const auto taylor = taylor_coefficients(spec, params, N);
  const Systems systems = assemble_systems(taylor, N);

  SolveResult result;
  result.report.cond_alpha = condition_number_2norm(systems.alpha_system);
  result.report.cond_beta = condition_number_2norm(systems.beta_system);
  const IterationState final_state = detail::successive_approximation(
      config, result.report, [&] { return initial_step(spec, taylor, systems); },
      [&](const IterationState& s) { return iterate_once(s, taylor, systems, spec); });
  result.solution = assemble_AB(final_state.d, taylor, N, spec);
  return result;
}

}  // namespace annulus::solution1
