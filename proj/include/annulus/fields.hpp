#pragma once

#include <numbers>

#include "annulus/indexed_series.hpp"
#include "annulus/model.hpp"
#include "annulus/series.hpp"

namespace annulus {

/// Converged coefficients d_k together with the Laurent coefficients of
/// phi'(z) inside (A_k) and outside (B_k) the unit circle, all on [-N, N].
struct SeriesSolution {
  int N = 0;
  IndexedSeries d;
  IndexedSeries A;
  IndexedSeries B;
  ProblemSpec spec;
};

/// Lanczos sigma factor: 1 at k = 0, sin(|k| pi / N) / (|k| pi / N) otherwise.
double lanczos_filter(int k, int N);

/// A_k = sum_{l=0}^{N+k} alpha_l d_{k-l}, B_k = sum_{l=1}^{N-k} beta_l d_{k+l}.
void assemble_AB(const IndexedSeries& d, const TaylorCoefficients& taylor, int N, IndexedSeries& A, IndexedSeries& B);
SeriesSolution assemble_AB(const IndexedSeries& d, const TaylorCoefficients& taylor, int N, const ProblemSpec& spec);

struct StressSample {
  double sigma_theta = 0.0;
  double sigma_rho = 0.0;
  double tau_rhotheta = 0.0;
};

struct Displacement {
  double u = 0.0;
  double v = 0.0;
};

struct RigidBody {
  double dx = 0.0;
  double dy = 0.0;
};

/// Normalised record written to CSV: stresses over G, lengths over r_o.
struct FieldSample {
  double rho = 0.0;
  double theta = 0.0;
  double sigma_theta = 0.0;
  double sigma_rho = 0.0;
  double tau_rhotheta = 0.0;
  double u = 0.0;
  double v = 0.0;
};

/// Filtered stresses at (rho, theta). Throws std::domain_error for rho outside [r, 1].
StressSample stress_at(const SeriesSolution& sol, double rho, double theta);

/// sigma_rho + i tau_rhotheta at (rho, theta), without the range check.
Complex radial_traction(const SeriesSolution& sol, double rho, double theta);

/// Filtered displacement u + i v with the rigid-body translation removed.
Displacement displacement_at(const SeriesSolution& sol, const RigidBody& rigid, double rho, double theta);

/// Width of the end zones around t1 and t2 that residual checks and the
/// rigid-body fit skip (5 degrees).
inline constexpr double kEndZone = 5.0 * std::numbers::pi / 180.0;

/// Mean of the D = 0 displacement over `samples` equally spaced points on
/// the fixed arc, end zones excluded.
RigidBody rigid_body_constant(const SeriesSolution& sol, int samples = 361);

FieldSample sample_field(const SeriesSolution& sol, const RigidBody& rigid, double rho, double theta, bool sign_flip);

}  // namespace annulus
