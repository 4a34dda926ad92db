#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string_view>

#include "annulus/indexed_series.hpp"

namespace annulus {

// Outputs are normalised: stresses by the shear modulus G (fixed at 1),
// lengths and displacements by the outer radius r_o (fixed at 1).

enum class PlaneCondition { plane_strain, plane_stress };

/// Fourier coefficients p_k + i q_k of the inner-boundary traction.
class TractionSpectrum {
 public:
  TractionSpectrum() = default;
  explicit TractionSpectrum(std::map<int, Complex> coefficients);

  void set(int k, Complex value);
  [[nodiscard]] Complex coefficient(int k) const;
  [[nodiscard]] const std::map<int, Complex>& coefficients() const { return coefficients_; }
  [[nodiscard]] bool empty() const { return coefficients_.empty(); }
  /// Largest |k| present, 0 for an empty spectrum.
  [[nodiscard]] int max_harmonic() const;

  friend bool operator==(const TractionSpectrum&, const TractionSpectrum&) = default;

 private:
  std::map<int, Complex> coefficients_;
};

/// f(theta) = sum_k (p_k + i q_k) e^{i k theta}
Complex traction_eval(const TractionSpectrum& traction, double theta);

struct ProblemSpec {
  double nu = 0.3;
  PlaneCondition plane_condition = PlaneCondition::plane_strain;
  double r = 0.5;       ///< inner radius over outer radius
  double theta1 = 0.0;  ///< start of the fixed arc (radians)
  double theta2 = 0.0;  ///< end of the fixed arc, anticlockwise from theta1
  TractionSpectrum traction;

  [[nodiscard]] double kappa() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

double kappa(const ProblemSpec& spec);

/// Which period of arg is used for the fractional powers of t1 and t2.
enum class Branch {
  principal,  ///< each angle reduced into [-pi, pi)
  as_given,   ///< angles used exactly as stored (theta1 < theta2 < theta1 + 2 pi)
};

struct ContinuationParams {
  Complex gamma;  ///< 1/2 + i lambda
  double lambda = 0.0;
  Branch branch = Branch::as_given;
};

struct SolverConfig {
  int N = 60;
  double epsilon = 1e-20;
  int max_reps = 20000;
  int M1 = 30000;
  int M2 = 10000;
  bool sign_flip = true;
  Branch branch = Branch::as_given;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// Throws std::invalid_argument naming the first violated constraint.
void validate(const ProblemSpec& spec);
void validate(const SolverConfig& config);
/// Both of the above plus the harmonic range |k| <= N.
void validate(const ProblemSpec& spec, const SolverConfig& config);

enum class CaseId { A, B, C, D };

struct CasePreset {
  ProblemSpec spec;
  SolverConfig config;
  double sample_radius = 0.5;  ///< intermediate sampling circle r_rho
};

CasePreset build_case_preset(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view text);
char case_letter(CaseId id);

}  // namespace annulus
