#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annulus/fields.hpp"
#include "annulus/model.hpp"
#include "annulus/quadrature.hpp"
#include "annulus/series.hpp"

namespace annulus {

/// One row of the coefficient-identity table. An entry is empty when its
/// denominator vanishes by symmetry.
struct SRatioRow {
  int l = 0;
  std::optional<double> S1, S2, S3, S4;
};

/// S1, S2 compare (2 pi i kappa / (1 + kappa)) alpha_l with c_{12,-1-l};
/// S3, S4 compare the same multiple of beta_l with c_{12,-1+l}.
struct SRatios {
  std::vector<SRatioRow> rows;
  double expected_alpha = -1.0;  ///< target of S1 and S2
  double expected_beta = 1.0;    ///< target of S3 and S4
  int skipped = 0;

  /// Largest |S - target| / |target| over all defined entries.
  [[nodiscard]] double max_deviation() const;
};

/// Denominators below this magnitude are treated as symmetry zeros.
inline constexpr double kSymmetryZero = 1e-9;

struct BoundaryResiduals {
  double inner_traction = 0.0;  ///< max |traction - f| on rho = r over max |f|
  double free_arc = 0.0;        ///< max |traction| on the free arc over max |f|
  double fixed_arc = 0.0;       ///< max |u + iv| on the fixed arc over the boundary maximum
};

struct FieldAgreement {
  double stress = 0.0;
  double displacement = 0.0;
};

struct ValidationReport {
  double single_valuedness_residual = 0.0;
  double resultant_residual = 0.0;
  double closed_form_A_B_error = 0.0;
  double constraint_residual = 0.0;
  SRatios S_ratios;
  Complex c11_closure;
  double c11_closure_relative = 0.0;
  double c12_resultant_error = 0.0;
  std::optional<double> cross_solution_max_diff;
  std::optional<FieldAgreement> field_agreement;
  BoundaryResiduals boundary_residuals;
};

/// |kappa A_{-1} + B_{-1}| / (1 + |A_{-1}|)
double check_single_valuedness(const SeriesSolution& sol);

/// |r^-1 A_{-1} - r^-1 B_{-1} - (p_{-1} + i q_{-1})|
double check_resultant(const SeriesSolution& sol, const ProblemSpec& spec);

/// Larger of |A_{-1} - (p_{-1} + i q_{-1}) r / (1 + kappa)| and |kappa A_{-1} + B_{-1}|.
double closed_form_error(const SeriesSolution& sol);

/// Max over the rows k in [-N, -2] and [0, N - 1] of
///   |A_k r^k + (k+1) conj(A_{-k}) (1 - r^-2) r^-k - B_k r^(-k-2) - (p_k + i q_k)|.
double constraint_residual(const SeriesSolution& sol);

/// Ratios for l = 0 .. min(20, N). The targets are -1 and +1 except when the
/// principal branch puts theta1 and theta2 in different periods; alpha then
/// carries an extra factor -kappa and S1, S2 are expected to equal kappa.
SRatios check_c12_identity(const ProblemSpec& spec, const ContinuationParams& params, const TaylorCoefficients& taylor,
                           const QuadratureTable& quad);

/// max_k |d1_k - d2_k| / max_k |d1_k|, reported as 0 when both vanish.
double compare_solutions(const SeriesSolution& sol1, const SeriesSolution& sol2);

/// sum_k c_{11,k} d_k
Complex check_c11_closure(const SeriesSolution& sol, const QuadratureTable& quad);
/// |sum_k c_{11,k} d_k| / max_k |c_{11,k} d_k|
double c11_closure_relative(const SeriesSolution& sol, const QuadratureTable& quad);

/// |sum_k c_{12,k} d_k + (2 pi i kappa / (1 + kappa)) (p_{-1} + i q_{-1}) r|
/// divided by max_k |c_{12,k} d_k|.
double check_c12_resultant(const SeriesSolution& sol, const QuadratureTable& quad, const ProblemSpec& spec);

/// Residuals of the three boundary conditions from `samples` points per arc,
/// end zones excluded on the outer arcs.
BoundaryResiduals boundary_residuals(const SeriesSolution& sol, int samples = 720);

/// Stress and displacement differences on a grid x grid cell-centred polar
/// grid, each relative to the largest Solution 1 magnitude on the grid.
FieldAgreement compare_fields(const SeriesSolution& sol1, const SeriesSolution& sol2, int grid = 24);

/// Runs every check on `sol`. The quadrature is rebuilt from `config`, with
/// M2 scaled by `m2_multiplier` for the S ratios. `counterpart` (the other
/// scheme's solution for the same problem) enables the cross-solution checks.
ValidationReport validate_solution(const SeriesSolution& sol, const SolverConfig& config, int m2_multiplier = 10,
                                   const SeriesSolution* counterpart = nullptr);

std::string format_validation(const ValidationReport& report);

}  // namespace annulus
