#pragma once

#include <vector>

#include "annulus/iteration.hpp"
#include "annulus/linalg.hpp"
#include "annulus/model.hpp"
#include "annulus/series.hpp"

/// Successive approximation with the residue-theorem constraints
/// A_{-1} = (p_{-1} + i q_{-1}) r / (1 + kappa) and kappa A_{-1} + B_{-1} = 0.
namespace annulus::solution1 {

/// The two truncated systems. The alpha-system (N x N) acts on
/// (d_{-1}, ..., d_{-N}); the beta-system ((N+1) x (N+1)) on (d_0, ..., d_N).
/// Both are upper-triangular Toeplitz, with diagonals alpha_0 and beta_1.
struct Systems {
  int N = 0;
  std::vector<Complex> alpha_band;  ///< alpha_0 .. alpha_{N-1}
  std::vector<Complex> beta_band;   ///< beta_1 .. beta_{N+1}
  ComplexMatrix alpha_system;
  ComplexMatrix beta_system;
};

Systems assemble_systems(const TaylorCoefficients& taylor, int N);

/// Right-hand sides of the q = 0 sweep.
ComplexVector initial_alpha_rhs(const ProblemSpec& spec, int N);
ComplexVector initial_beta_rhs(const ProblemSpec& spec, int N);

/// Right-hand sides of sweep q from A^(q-1), B^(q-1).
ComplexVector alpha_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N);
ComplexVector beta_rhs(const ProblemSpec& spec, const IndexedSeries& A_prev, const IndexedSeries& B_prev, int N);

IterationState initial_step(const ProblemSpec& spec, const TaylorCoefficients& taylor, const Systems& systems);
IterationState iterate_once(const IterationState& state, const TaylorCoefficients& taylor, const Systems& systems,
                            const ProblemSpec& spec);

/// Iterates until max_k |d_k^(q)| <= epsilon. Throws ConvergenceError at max_reps.
SolveResult run(const ProblemSpec& spec, const SolverConfig& config);

}  // namespace annulus::solution1
