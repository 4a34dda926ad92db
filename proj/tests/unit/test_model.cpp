#include <doctest.h>

#include <numbers>

#include "annulus/model.hpp"

using namespace annulus;
using std::numbers::pi;

TEST_CASE("Kolosov constant for both plane conditions") {
  ProblemSpec s;
  s.nu = 0.3;
  CHECK(s.kappa() == doctest::Approx(1.8));
  s.plane_condition = PlaneCondition::plane_stress;
  CHECK(s.kappa() == doctest::Approx(2.7 / 1.3));
  CHECK(kappa(s) == s.kappa());
}

TEST_CASE("traction series evaluation") {
  TractionSpectrum t;
  CHECK(t.empty());
  CHECK(traction_eval(t, 1.0) == Complex{});
  t.set(-1, Complex(0, 1));
  t.set(2, Complex(0.5, 0));
  CHECK(t.max_harmonic() == 2);
  CHECK(t.coefficient(5) == Complex{});
  const double th = 0.7;
  const Complex expected = Complex(0, 1) * std::polar(1.0, -th) + 0.5 * std::polar(1.0, 2 * th);
  CHECK(std::abs(traction_eval(t, th) - expected) < 1e-15);
}

TEST_CASE("validation rejects bad problems") {
  ProblemSpec s;
  s.theta1 = -pi / 2;
  s.theta2 = 0.0;
  CHECK_NOTHROW(validate(s));

  auto bad = s;
  bad.nu = 0.6;
  CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("nu out of range"), std::invalid_argument);
  bad = s;
  bad.r = 1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = s;
  bad.theta2 = bad.theta1 + 2 * pi;
  CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("theta ordering"), std::invalid_argument);

  SolverConfig c;
  c.N = 4;
  s.traction.set(5, 1.0);
  CHECK_THROWS_WITH_AS(validate(s, c), doctest::Contains("exceeds truncation order"), std::invalid_argument);
  c.M1 = 50;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("case presets") {
  const auto a = build_case_preset(CaseId::A);
  CHECK(a.spec.r == 0.1);
  CHECK(a.spec.theta1 == -pi / 2);
  CHECK(a.spec.theta2 == 0.0);
  CHECK(a.spec.traction.coefficient(-1) == Complex(0, 1));
  CHECK(a.config.M1 == 30000);
  CHECK(a.config.M2 == 10000);
  CHECK(a.sample_radius == 0.3);

  const auto d = build_case_preset(CaseId::D);
  CHECK(d.spec.r == 0.7);
  CHECK(d.spec.theta2 == pi / 2);
  CHECK(d.spec.traction.coefficient(0) == Complex(0, 1));
  CHECK(d.config.M1 == 20000);
  CHECK(d.config.M2 == 20000);
  CHECK(d.sample_radius == 0.9);

  for (CaseId id : {CaseId::A, CaseId::B, CaseId::C, CaseId::D}) {
    CHECK(parse_case_id(std::string(1, case_letter(id))) == id);
    CHECK_NOTHROW(validate(build_case_preset(id).spec, build_case_preset(id).config));
  }
  CHECK_FALSE(parse_case_id("E").has_value());
}
