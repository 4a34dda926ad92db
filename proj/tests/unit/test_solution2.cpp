#include <doctest.h>

#include <cmath>

#include "annulus/solution1.hpp"
#include "annulus/solution2.hpp"

using namespace annulus;

TEST_CASE("2x2 closure system entries") {
  const auto p = build_case_preset(CaseId::C);
  const solution2::Context ctx(p.spec, p.config, continuation_params(p.spec.kappa()));
  const auto& m = ctx.systems().pair;
  CHECK(m(0, 0) == ctx.taylor().alpha[0]);
  CHECK(m(0, 1) == -ctx.taylor().beta[1]);
  CHECK(m(1, 0) == ctx.quadrature().c11[-1]);
  CHECK(m(1, 1) == ctx.quadrature().c11[0]);
  CHECK(ctx.systems().alpha_system.rows() == 59);
  CHECK(ctx.systems().beta_system.rows() == 60);
}

TEST_CASE("initial loads") {
  const auto p = build_case_preset(CaseId::B);
  const double r = p.spec.r;
  const auto beta = solution2::initial_beta_rhs(p.spec, 60);
  const double s = 1 - 1 / (r * r);
  CHECK(std::abs(beta(1) - Complex(2 * s * r * r * r, 0)) < 1e-15);
  CHECK(beta(0) == Complex{});
  const auto c = build_case_preset(CaseId::C);
  CHECK(std::abs(solution2::initial_beta_rhs(c.spec, 60)(0) - Complex(-0.25, 0)) < 1e-16);
}

TEST_CASE("case B agrees with the residue-theorem solution") {
  const auto p = build_case_preset(CaseId::B);
  const auto two = solution2::run2(p.spec, p.config);
  const auto one = solution1::run(p.spec, p.config);
  CHECK(two.report.reps == 30);
  CHECK(two.report.cond_alpha == doctest::Approx(7.52).epsilon(0.02));
  CHECK(two.report.cond_beta == doctest::Approx(7.59).epsilon(0.02));
  double diff = 0.0;
  for (int k = -60; k <= 60; ++k) diff = std::max(diff, std::abs(one.solution.d[k] - two.solution.d[k]));
  CHECK(diff / one.solution.d.max_abs() < 1e-3);

  // the closure row is satisfied by construction
  const solution2::Context ctx(p.spec, p.config, continuation_params(p.spec.kappa()));
  Complex closure{};
  double scale = 0.0;
  for (int k = -60; k <= 60; ++k) {
    closure += ctx.quadrature().c11[k] * two.solution.d[k];
    scale = std::max(scale, std::abs(ctx.quadrature().c11[k] * two.solution.d[k]));
  }
  CHECK(std::abs(closure) / scale < 1e-6);
}

TEST_CASE("zero traction") {
  auto p = build_case_preset(CaseId::A);
  p.spec.traction = TractionSpectrum{};
  const auto res = solution2::run2(p.spec, p.config);
  CHECK(res.report.reps == 1);
  CHECK(res.solution.d.max_abs() == 0.0);
}
