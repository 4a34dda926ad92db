#include <doctest.h>

#include <cmath>
#include <numbers>

#include "annulus/solution1.hpp"
#include "annulus/solution2.hpp"
#include "annulus/validate.hpp"

using namespace annulus;
using std::numbers::pi;

namespace {

SeriesSolution zero_solution(int N) {
  SeriesSolution sol;
  sol.N = N;
  sol.d = sol.A = sol.B = IndexedSeries(-N, N);
  sol.spec.theta1 = -pi / 2;
  sol.spec.theta2 = pi / 2;
  return sol;
}

}  // namespace

TEST_CASE("zero solution has zero residuals") {
  const auto z = zero_solution(10);
  CHECK(check_single_valuedness(z) == 0.0);
  CHECK(check_resultant(z, z.spec) == 0.0);
  CHECK(closed_form_error(z) == 0.0);
  CHECK(constraint_residual(z) == 0.0);
  CHECK(compare_solutions(z, z) == 0.0);
}

TEST_CASE("single-valuedness residual formula") {
  const auto p = build_case_preset(CaseId::A);
  auto sol = solution1::run(p.spec, p.config).solution;
  CHECK(check_single_valuedness(sol) <= 1e-10);
  CHECK(check_resultant(sol, p.spec) <= 1e-10);
  CHECK(std::abs((sol.A[-1] - sol.B[-1]) - Complex(0, 0.1)) < 1e-12);
  sol.B[-1] += 0.1;
  CHECK(check_single_valuedness(sol) == doctest::Approx(0.1 / (1 + std::abs(sol.A[-1]))).epsilon(1e-9));
}

TEST_CASE("zero resultant case") {
  const auto p = build_case_preset(CaseId::C);
  const auto sol = solution1::run(p.spec, p.config).solution;
  CHECK(std::abs(sol.A[-1]) < 1e-10);
  CHECK(std::abs(sol.B[-1]) < 1e-10);
  CHECK(constraint_residual(sol) < 1e-10);
}

TEST_CASE("cross-solution comparison") {
  const auto z = zero_solution(5);
  auto other = z;
  other.d[2] = Complex(0, 1e-3);
  CHECK(compare_solutions(z, other) == doctest::Approx(1e-3));
  other.d[0] = 1.0;
  auto base = z;
  base.d[0] = 2.0;
  CHECK(compare_solutions(base, other) == doctest::Approx(0.5));
}

TEST_CASE("S ratio bookkeeping") {
  const auto p = build_case_preset(CaseId::B);
  const auto params = continuation_params(p.spec.kappa());
  const auto t = taylor_coefficients(p.spec, params, 60);
  const auto q = build_quadrature(p.spec, params, 60, p.config.M1, p.config.M2);
  const auto s = check_c12_identity(p.spec, params, t, q);
  CHECK(s.rows.size() == 21);
  CHECK(s.expected_alpha == -1.0);
  CHECK(s.expected_beta == 1.0);
  CHECK_FALSE(s.rows[0].S3.has_value());
  int skipped = 0;
  for (const auto& row : s.rows) skipped += !row.S1 + !row.S2 + (row.l > 0 ? !row.S3 + !row.S4 : 0);
  CHECK(skipped == s.skipped);
  // at the preset M2 the open rule is still far from the 1% band
  CHECK(s.max_deviation() < 0.25);

  // an exact table gives exactly the targets
  auto exact = q;
  const Complex f(0, 2 * pi * p.spec.kappa() / (1 + p.spec.kappa()));
  for (int l = 0; l <= 20; ++l) exact.c12[-1 - l] = -f * t.alpha[l];
  for (int l = 1; l <= 20; ++l) exact.c12[-1 + l] = f * t.beta[l];
  CHECK(check_c12_identity(p.spec, params, t, exact).max_deviation() < 1e-12);
}

TEST_CASE("principal branch across periods expects kappa") {
  ProblemSpec spec;
  spec.theta1 = pi / 2;
  spec.theta2 = 3 * pi / 2;
  const auto params = continuation_params(spec.kappa(), Branch::principal);
  const auto t = taylor_coefficients(spec, params, 20);
  const auto q = build_quadrature(spec, params, 20, 1000, 1000);
  CHECK(check_c12_identity(spec, params, t, q).expected_alpha == doctest::Approx(spec.kappa()));
}

TEST_CASE("Solution 2 closure on its own output") {
  const auto p = build_case_preset(CaseId::A);
  const auto sol = solution2::run2(p.spec, p.config).solution;
  const auto params = continuation_params(p.spec.kappa());
  const auto q = build_quadrature(p.spec, params, 60, p.config.M1, p.config.M2);
  CHECK(c11_closure_relative(sol, q) <= 1e-6);
  CHECK(check_c12_resultant(sol, q, p.spec) < 1e-2);
}

TEST_CASE("report and formatting") {
  const auto p = build_case_preset(CaseId::B);
  const auto one = solution1::run(p.spec, p.config).solution;
  const auto two = solution2::run2(p.spec, p.config).solution;
  const auto report = validate_solution(one, p.config, 2, &two);
  CHECK(report.cross_solution_max_diff.has_value());
  CHECK(*report.cross_solution_max_diff < 1e-3);
  CHECK(report.field_agreement.has_value());
  CHECK(report.boundary_residuals.inner_traction < 1e-2);
  CHECK(report.boundary_residuals.free_arc < 2e-2);
  CHECK(report.boundary_residuals.fixed_arc < 1e-2);
  CHECK(report.single_valuedness_residual >= 0.0);
  const std::string text = format_validation(report);
  CHECK(text.find("single_valuedness_residual") != std::string::npos);
  CHECK(text.find("S_ratios") != std::string::npos);
  CHECK(text == format_validation(validate_solution(one, p.config, 2, &two)));
  CHECK_THROWS(validate_solution(one, p.config, 0));
}
