#include "annulus/solution2.hpp"

#include <cmath>

#include "constraint_rows.hpp"
#include "iteration_loop.hpp"

namespace annulus::solution2 {

Systems assemble_systems2(const TaylorCoefficients& taylor, int N) {
  if (N < 3) throw std::invalid_argument("assemble_systems2: N must be at least 3");
  if (taylor.order() < N + 1) throw std::invalid_argument("assemble_systems2: Taylor coefficients too short");
  Systems s;
  s.N = N;
  s.alpha_band.assign(taylor.alpha.begin(), taylor.alpha.begin() + (N - 1));
  s.beta_band.assign(taylor.beta.begin() + 1, taylor.beta.begin() + (N + 1));
  s.alpha_system = toeplitz_matrix(s.alpha_band, N - 1);
  s.beta_system = toeplitz_matrix(s.beta_band, N);
  return s;
}

void assemble_pair(Systems& systems, const TaylorCoefficients& taylor, const QuadratureTable& quad) {
  systems.pair.resize(2, 2);
  systems.pair << taylor.alpha[0], -taylor.beta[1], quad.c11[-1], quad.c11[0];
}

ComplexVector initial_alpha_rhs(const ProblemSpec& spec, int N) {
  ComplexVector rhs(N - 1);
  for (int k = 2; k <= N; ++k) rhs(k - 2) = detail::alpha_load(spec, k);
  return rhs;
}

ComplexVector initial_beta_rhs(const ProblemSpec& spec, int N) {
  ComplexVector rhs(N);
  for (int k = 0; k <= N - 1; ++k) rhs(k) = detail::beta_load(spec, k);
  return rhs;
}

ComplexVector alpha_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N) {
  ComplexVector rhs(N - 1);
  for (int k = 2; k <= N; ++k) rhs(k - 2) = detail::alpha_feedback(spec.r, k, A_prev, B_prev);
  return rhs;
}

ComplexVector beta_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N) {
  const double r = spec.r;
  ComplexVector rhs(N);
  rhs(0) = detail::beta_feedback(r, 0, A_prev, B_prev);
  rhs(1) = std::pow(r, 4) * A_prev[1] + 2.0 * detail::damping(r) * r * r * std::conj(B_prev[-1]);
  for (int k = 2; k <= N - 1; ++k) rhs(k) = detail::beta_feedback(r, k, A_prev, B_prev);
  return rhs;
}

ComplexVector pair_rhs(const IndexedSeries& step, const TaylorCoefficients& taylor, const QuadratureTable& quad,
                       Complex load) {
  const int N = step.last();
  Complex first = load;
  for (int l = 1; l <= N - 1; ++l) first -= taylor.alpha[l] * step[-1 - l];
  for (int l = 2; l <= N + 1; ++l) first += taylor.beta[l] * step[-1 + l];
  Complex second{};
  for (int l = 2; l <= N; ++l) second -= quad.c11[-l] * step[-l];
  for (int l = 1; l <= N; ++l) second -= quad.c11[l] * step[l];
  ComplexVector rhs(2);
  rhs << first, second;
  return rhs;
}

namespace {

Systems systems_with_pair(const TaylorCoefficients& taylor, const QuadratureTable& quad, int N) {
  Systems s = assemble_systems2(taylor, N);
  assemble_pair(s, taylor, quad);
  return s;
}

DenseFactorization factor_pair(const ComplexMatrix& pair) {
  try {
    return DenseFactorization(pair);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("solution 2: the (d_{-1}, d_0) system is singular; degenerate arc configuration");
  }
}

}  // namespace

Context::Context(const ProblemSpec& spec, const SolverConfig& config, const ContinuationParams& params)
    : spec_(spec),
      taylor_(taylor_coefficients(spec, params, config.N)),
      quad_(build_quadrature(spec, params, config.N, config.M1, config.M2)),
      systems_(systems_with_pair(taylor_, quad_, config.N)),
      pair_lu_(factor_pair(systems_.pair)) {}

IterationState Context::solve_step(const ComplexVector& alpha_rhs, const ComplexVector& beta_rhs, Complex load,
                                   int q) const {
  const int N = systems_.N;
  const ComplexVector x = solve_triangular_toeplitz(systems_.alpha_band, alpha_rhs);
  const ComplexVector y = solve_triangular_toeplitz(systems_.beta_band, beta_rhs);
  IterationState state;
  state.q = q;
  state.step = IndexedSeries(-N, N);
  for (int j = 2; j <= N; ++j) state.step[-j] = x(j - 2);
  for (int j = 1; j <= N; ++j) state.step[j] = y(j - 1);
  const ComplexVector inner = pair_lu_.solve(pair_rhs(state.step, taylor_, quad_, load));
  state.step[-1] = inner(0);
  state.step[0] = inner(1);
  assemble_AB(state.step, taylor_, N, state.A_step, state.B_step);
  return state;
}

IterationState Context::initial_step() const {
  const int N = systems_.N;
  IterationState state =
      solve_step(initial_alpha_rhs(spec_, N), initial_beta_rhs(spec_, N), spec_.r * spec_.traction.coefficient(-1), 0);
  state.d = state.step;
  return state;
}

IterationState Context::iterate_once(const IterationState& state) const {
  const int N = systems_.N;
  IterationState next = solve_step(alpha_rhs(spec_, state.A_step, state.B_step, N),
                                   beta_rhs(spec_, state.A_step, state.B_step, N), Complex{}, state.q + 1);
  next.d = state.d;
  next.d += next.step;
  return next;
}

SolveResult run2(const ProblemSpec& spec, const SolverConfig& config) {
  validate(spec, config);
  if (config.N < 3) throw std::invalid_argument("solution 2 needs N >= 3");
  const Context ctx(spec, config, continuation_params(spec.kappa(), config.branch));

  SolveResult result;
  result.report.cond_alpha = condition_number_2norm(ctx.systems().alpha_system);
  result.report.cond_beta = condition_number_2norm(ctx.systems().beta_system);
  const IterationState final_state = detail::successive_approximation(
      config, result.report, [&] { return ctx.initial_step(); },
      [&](const IterationState& s) { return ctx.iterate_once(s); });
  result.solution = assemble_AB(final_state.d, ctx.taylor(), config.N, spec);
  return result;
}

}  // namespace annulus::solution2
