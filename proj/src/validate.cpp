#include "annulus/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace annulus {

namespace {

using std::numbers::pi;

Complex resultant_load(const ProblemSpec& spec) { return spec.traction.coefficient(-1); }

Complex identity_factor(double kappa) { return Complex(0.0, 2.0 * pi * kappa / (1.0 + kappa)); }

std::optional<double> ratio(double num, double den, int& skipped) {
  if (std::abs(den) < kSymmetryZero) {
    ++skipped;
    return std::nullopt;
  }
  return num / den;
}

double max_traction(const ProblemSpec& spec, int samples) {
  double m = 0.0;
  for (int j = 0; j < samples; ++j) m = std::max(m, std::abs(traction_eval(spec.traction, 2.0 * pi * j / samples)));
  return m;
}

double relative(double value, double scale) { return scale > 0.0 ? value / scale : value; }

void append(std::string& out, const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  out += buf;
}

}  // namespace

double SRatios::max_deviation() const {
  double worst = 0.0;
  auto track = [&](const std::optional<double>& s, double target) {
    if (s) worst = std::max(worst, std::abs(*s - target) / std::abs(target));
  };
  for (const auto& row : rows) {
    track(row.S1, expected_alpha);
    track(row.S2, expected_alpha);
    track(row.S3, expected_beta);
    track(row.S4, expected_beta);
  }
  return worst;
}

double check_single_valuedness(const SeriesSolution& sol) {
  if (sol.N < 1) return 0.0;
  const Complex a = sol.A[-1];
  return std::abs(sol.spec.kappa() * a + sol.B[-1]) / (1.0 + std::abs(a));
}

double check_resultant(const SeriesSolution& sol, const ProblemSpec& spec) {
  if (sol.N < 1) return std::abs(resultant_load(spec));
  return std::abs((sol.A[-1] - sol.B[-1]) / spec.r - resultant_load(spec));
}

double closed_form_error(const SeriesSolution& sol) {
  const double kappa = sol.spec.kappa();
  const Complex expected = resultant_load(sol.spec) * sol.spec.r / (1.0 + kappa);
  return std::max(std::abs(sol.A[-1] - expected), std::abs(kappa * sol.A[-1] + sol.B[-1]));
}

double constraint_residual(const SeriesSolution& sol) {
  const int N = sol.N;
  const double r = sol.spec.r;
  const double s = 1.0 - 1.0 / (r * r);
  double worst = 0.0;
  auto row = [&](int k) {
    const Complex lhs = sol.A[k] * std::pow(r, k) + (k + 1.0) * std::conj(sol.A[-k]) * s * std::pow(r, -k) -
                        sol.B[k] * std::pow(r, -k - 2);
    worst = std::max(worst, std::abs(lhs - sol.spec.traction.coefficient(k)));
  };
  for (int k = -N; k <= -2; ++k) row(k);
  for (int k = 0; k <= N - 1; ++k) row(k);
  return worst;
}

SRatios check_c12_identity(const ProblemSpec& spec, const ContinuationParams& params, const TaylorCoefficients& taylor,
                           const QuadratureTable& quad) {
  SRatios out;
  const double kappa = spec.kappa();
  const Complex f = identity_factor(kappa);
  const double shift = branch_angle(spec.theta2, params.branch) - branch_angle(spec.theta1, params.branch);
  if (std::abs(shift - (spec.theta2 - spec.theta1)) > 1e-9) out.expected_alpha = kappa;

  const int l_max = std::min(20, quad.N);
  for (int l = 0; l <= l_max; ++l) {
    SRatioRow row;
    row.l = l;
    const Complex fa = f * taylor.alpha[l];
    const Complex ca = quad.c12[-1 - l];
    row.S1 = ratio(fa.real(), ca.real(), out.skipped);
    row.S2 = ratio(fa.imag(), ca.imag(), out.skipped);
    if (l >= 1) {
      const Complex fb = f * taylor.beta[l];
      const Complex cb = quad.c12[-1 + l];
      row.S3 = ratio(fb.real(), cb.real(), out.skipped);
      row.S4 = ratio(fb.imag(), cb.imag(), out.skipped);
    }
    out.rows.push_back(row);
  }
  return out;
}

double compare_solutions(const SeriesSolution& sol1, const SeriesSolution& sol2) {
  const double scale = sol1.d.max_abs();
  double diff = 0.0;
  for (int k = sol1.d.first(); k <= sol1.d.last(); ++k)
    diff = std::max(diff, std::abs(sol1.d[k] - sol2.d.value_or_zero(k)));
  if (scale == 0.0) return diff;
  return diff / scale;
}

Complex check_c11_closure(const SeriesSolution& sol, const QuadratureTable& quad) {
  Complex sum{};
  for (int k = -sol.N; k <= sol.N; ++k) sum += quad.c11[k] * sol.d[k];
  return sum;
}

double c11_closure_relative(const SeriesSolution& sol, const QuadratureTable& quad) {
  double scale = 0.0;
  for (int k = -sol.N; k <= sol.N; ++k) scale = std::max(scale, std::abs(quad.c11[k] * sol.d[k]));
  return relative(std::abs(check_c11_closure(sol, quad)), scale);
}

double check_c12_resultant(const SeriesSolution& sol, const QuadratureTable& quad, const ProblemSpec& spec) {
  Complex sum{};
  double scale = 0.0;
  for (int k = -sol.N; k <= sol.N; ++k) {
    const Complex term = quad.c12[k] * sol.d[k];
    sum += term;
    scale = std::max(scale, std::abs(term));
  }
  const Complex target = -identity_factor(spec.kappa()) * resultant_load(spec) * spec.r;
  return relative(std::abs(sum - target), scale);
}

BoundaryResiduals boundary_residuals(const SeriesSolution& sol, int samples) {
  const ProblemSpec& spec = sol.spec;
  const double fmax = max_traction(spec, samples);
  BoundaryResiduals out;

  double inner = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * pi * j / samples;
    inner = std::max(inner, std::abs(radial_traction(sol, spec.r, theta) - traction_eval(spec.traction, theta)));
  }
  out.inner_traction = relative(inner, fmax);

  double free_arc = 0.0;
  const double fa = spec.theta2 + kEndZone;
  const double fb = spec.theta1 + 2.0 * pi - kEndZone;
  for (int j = 0; j < samples; ++j) {
    const double theta = fa + (fb - fa) * j / (samples - 1);
    free_arc = std::max(free_arc, std::abs(radial_traction(sol, 1.0, theta)));
  }
  out.free_arc = relative(free_arc, fmax);

  const RigidBody rigid = rigid_body_constant(sol);
  auto displacement = [&](double rho, double theta) {
    const Displacement w = displacement_at(sol, rigid, rho, theta);
    return std::hypot(w.u, w.v);
  };
  double fixed = 0.0;
  const double xa = spec.theta1 + kEndZone;
  const double xb = spec.theta2 - kEndZone;
  for (int j = 0; j < samples; ++j) fixed = std::max(fixed, displacement(1.0, xa + (xb - xa) * j / (samples - 1)));
  double boundary = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * pi * j / samples;
    boundary = std::max({boundary, displacement(1.0, theta), displacement(spec.r, theta)});
  }
  out.fixed_arc = relative(fixed, boundary);
  return out;
}

FieldAgreement compare_fields(const SeriesSolution& sol1, const SeriesSolution& sol2, int grid) {
  const double r = sol1.spec.r;
  const RigidBody rigid1 = rigid_body_constant(sol1);
  const RigidBody rigid2 = rigid_body_constant(sol2);
  double stress_scale = 0.0, stress_diff = 0.0, disp_scale = 0.0, disp_diff = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double rho = r + (i + 0.5) * (1.0 - r) / grid;
    for (int j = 0; j < grid; ++j) {
      const double theta = (j + 0.5) * 2.0 * pi / grid;
      const StressSample s1 = stress_at(sol1, rho, theta);
      const StressSample s2 = stress_at(sol2, rho, theta);
      stress_scale =
          std::max({stress_scale, std::abs(s1.sigma_theta), std::abs(s1.sigma_rho), std::abs(s1.tau_rhotheta)});
      stress_diff = std::max({stress_diff, std::abs(s1.sigma_theta - s2.sigma_theta),
                              std::abs(s1.sigma_rho - s2.sigma_rho), std::abs(s1.tau_rhotheta - s2.tau_rhotheta)});
      const Displacement w1 = displacement_at(sol1, rigid1, rho, theta);
      const Displacement w2 = displacement_at(sol2, rigid2, rho, theta);
      disp_scale = std::max({disp_scale, std::abs(w1.u), std::abs(w1.v)});
      disp_diff = std::max({disp_diff, std::abs(w1.u - w2.u), std::abs(w1.v - w2.v)});
    }
  }
  return {relative(stress_diff, stress_scale), relative(disp_diff, disp_scale)};
}

ValidationReport validate_solution(const SeriesSolution& sol, const SolverConfig& config, int m2_multiplier,
                                   const SeriesSolution* counterpart) {
  if (m2_multiplier < 1) throw std::invalid_argument("m2_multiplier must be at least 1");
  const ProblemSpec& spec = sol.spec;
  const ContinuationParams params = continuation_params(spec.kappa(), config.branch);
  const TaylorCoefficients taylor = taylor_coefficients(spec, params, sol.N);
  const QuadratureTable quad = build_quadrature(spec, params, sol.N, config.M1, config.M2);
  QuadratureTable fine = quad;
  fine.M2 = config.M2 * m2_multiplier;
  fine.c12 = c12_table(spec, params, sol.N, fine.M2);

  ValidationReport report;
  report.single_valuedness_residual = check_single_valuedness(sol);
  report.resultant_residual = check_resultant(sol, spec);
  report.closed_form_A_B_error = closed_form_error(sol);
  report.constraint_residual = constraint_residual(sol);
  report.S_ratios = check_c12_identity(spec, params, taylor, fine);
  report.c11_closure = check_c11_closure(sol, quad);
  report.c11_closure_relative = c11_closure_relative(sol, quad);
  report.c12_resultant_error = check_c12_resultant(sol, quad, spec);
  report.boundary_residuals = boundary_residuals(sol);
  if (counterpart != nullptr) {
    report.cross_solution_max_diff = compare_solutions(sol, *counterpart);
    report.field_agreement = compare_fields(sol, *counterpart);
  }
  return report;
}

std::string format_validation(const ValidationReport& report) {
  std::string out;
  append(out, "single_valuedness_residual %.6e\n", report.single_valuedness_residual);
  append(out, "resultant_residual %.6e\n", report.resultant_residual);
  append(out, "closed_form_A_B_error %.6e\n", report.closed_form_A_B_error);
  append(out, "constraint_residual %.6e\n", report.constraint_residual);
  append(out, "c11_closure %.6e %+.6e i (relative %.6e)\n", report.c11_closure.real(), report.c11_closure.imag(),
         report.c11_closure_relative);
  append(out, "c12_resultant_error %.6e\n", report.c12_resultant_error);
  const auto& b = report.boundary_residuals;
  append(out, "boundary inner_traction %.6e free_arc %.6e fixed_arc %.6e\n", b.inner_traction, b.free_arc, b.fixed_arc);
  if (report.cross_solution_max_diff) append(out, "cross_solution_max_diff %.6e\n", *report.cross_solution_max_diff);
  if (report.field_agreement)
    append(out, "field_agreement stress %.6e displacement %.6e\n", report.field_agreement->stress,
           report.field_agreement->displacement);
  const SRatios& s = report.S_ratios;
  append(out, "S_ratios expected %.6g %.6g, skipped %d, max deviation %.6e\n", s.expected_alpha, s.expected_beta,
         s.skipped, s.max_deviation());
  auto cell = [&](const std::optional<double>& v) {
    if (v)
      append(out, " %14.6e", *v);
    else
      out += "              -";
  };
  out += "   l             S1             S2             S3             S4\n";
  for (const auto& row : s.rows) {
    append(out, "%4d", row.l);
    cell(row.S1);
    cell(row.S2);
    cell(row.S3);
    cell(row.S4);
    out += '\n';
  }
  return out;
}

}  // namespace annulus
