#pragma once

#include <vector>

#include "annulus/iteration.hpp"
#include "annulus/linalg.hpp"
#include "annulus/model.hpp"
#include "annulus/quadrature.hpp"
#include "annulus/series.hpp"

/// Successive approximation in which the displacement condition on the free
/// arc is imposed through the quadrature coefficients c_{11,k}
/// (sum_k c_{11,k} d_k = 0) instead of the residue theorem. Each rep solves
/// the outer coefficients first, then d_{-1} and d_0 from a 2 x 2 system.
namespace annulus::solution2 {

/// The alpha-system ((N-1) x (N-1)) acts on (d_{-2}, ..., d_{-N}); the
/// beta-system (N x N) on (d_1, ..., d_N). `pair` is the 2 x 2 matrix
/// [[alpha_0, -beta_1], [c_{11,-1}, c_{11,0}]] acting on (d_{-1}, d_0).
struct Systems {
  int N = 0;
  std::vector<Complex> alpha_band;  ///< alpha_0 .. alpha_{N-2}
  std::vector<Complex> beta_band;   ///< beta_1 .. beta_N
  ComplexMatrix alpha_system;
  ComplexMatrix beta_system;
  ComplexMatrix pair;
};

/// pair is left empty; assemble_pair fills it once c_{11} is known.
Systems assemble_systems2(const TaylorCoefficients& taylor, int N);
void assemble_pair(Systems& systems, const TaylorCoefficients& taylor, const QuadratureTable& quad);

ComplexVector initial_alpha_rhs(const ProblemSpec& spec, int N);
ComplexVector initial_beta_rhs(const ProblemSpec& spec, int N);
ComplexVector alpha_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N);
ComplexVector beta_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N);

/// Right-hand side of the 2 x 2 system from the already-solved outer
/// coefficients of `step`; `load` is r (p_{-1} + i q_{-1}) for q = 0 and zero after.
ComplexVector pair_rhs(const IndexedSeries& step, const TaylorCoefficients& taylor, const QuadratureTable& quad,
                       Complex load);

/// Solver context: the systems plus a factorisation of the 2 x 2 matrix,
/// which never changes between reps.
class Context {
 public:
  Context(const ProblemSpec& spec, const SolverConfig& config, const ContinuationParams& params);

  [[nodiscard]] const TaylorCoefficients& taylor() const { return taylor_; }
  [[nodiscard]] const QuadratureTable& quadrature() const { return quad_; }
  [[nodiscard]] const Systems& systems() const { return systems_; }
  [[nodiscard]] const ProblemSpec& spec() const { return spec_; }

  [[nodiscard]] IterationState initial_step() const;
  [[nodiscard]] IterationState iterate_once(const IterationState& state) const;

 private:
  IterationState solve_step(const ComplexVector& alpha_rhs, const ComplexVector& beta_rhs, Complex load, int q) const;

  ProblemSpec spec_;
  TaylorCoefficients taylor_;
  QuadratureTable quad_;
  Systems systems_;
  DenseFactorization pair_lu_;
};

SolveResult run2(const ProblemSpec& spec, const SolverConfig& config);

}  // namespace annulus::solution2
