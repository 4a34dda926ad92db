#include "annulus/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace annulus {

TractionSpectrum::TractionSpectrum(std::map<int, Complex> coefficients) : coefficients_(std::move(coefficients)) {}

void TractionSpectrum::set(int k, Complex value) { coefficients_[k] = value; }

Complex TractionSpectrum::coefficient(int k) const {
  auto it = coefficients_.find(k);
  return it == coefficients_.end() ? Complex{} : it->second;
}

int TractionSpectrum::max_harmonic() const {
  int m = 0;
  for (const auto& [k, v] : coefficients_) m = std::max(m, std::abs(k));
  return m;
}

Complex traction_eval(const TractionSpectrum& traction, double theta) {
  Complex f{};
  for (const auto& [k, v] : traction.coefficients()) f += v * std::polar(1.0, k * theta);
  return f;
}

double ProblemSpec::kappa() const {
  return plane_condition == PlaneCondition::plane_strain ? 3.0 - 4.0 * nu : (3.0 - nu) / (1.0 + nu);
}

double kappa(const ProblemSpec& spec) { return spec.kappa(); }

void validate(const ProblemSpec& spec) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(spec.nu > 0.0 && spec.nu < 0.5)) throw std::invalid_argument("nu out of range (0, 0.5)");
  if (!(spec.r > 0.0 && spec.r < 1.0)) throw std::invalid_argument("r out of range (0, 1)");
  if (!std::isfinite(spec.theta1) || !std::isfinite(spec.theta2))
    throw std::invalid_argument("theta1 and theta2 must be finite");
  if (!(spec.theta2 > spec.theta1 && spec.theta2 < spec.theta1 + two_pi))
    throw std::invalid_argument("theta ordering violated: need theta1 < theta2 < theta1 + 2pi");
  for (const auto& [k, v] : spec.traction.coefficients())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("traction harmonic " + std::to_string(k) + " is not finite");
}

void validate(const SolverConfig& config) {
  if (config.N < 2) throw std::invalid_argument("N must be at least 2");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (config.max_reps < 1) throw std::invalid_argument("max_reps must be positive");
  if (config.M1 < 100 || config.M2 < 100) throw std::invalid_argument("M1 and M2 must be at least 100");
}

void validate(const ProblemSpec& spec, const SolverConfig& config) {
  validate(spec);
  validate(config);
  if (spec.traction.max_harmonic() > config.N)
    throw std::invalid_argument("traction harmonic |k| = " + std::to_string(spec.traction.max_harmonic()) +
                                " exceeds truncation order N = " + std::to_string(config.N));
}

CasePreset build_case_preset(CaseId id) {
  constexpr double pi = std::numbers::pi;
  CasePreset preset;
  ProblemSpec& s = preset.spec;
  SolverConfig& c = preset.config;
  s.nu = 0.3;
  s.plane_condition = PlaneCondition::plane_strain;
  s.theta1 = -pi / 2.0;
  c.N = 60;
  c.epsilon = 1e-20;
  switch (id) {
    case CaseId::A:
      s.traction.set(-1, {0.0, 1.0});
      s.r = 0.1;
      s.theta2 = 0.0;
      c.M1 = 30000;
      c.M2 = 10000;
      preset.sample_radius = 0.3;
      break;
    case CaseId::B:
      s.traction.set(-1, {1.0, 0.0});
      s.r = 0.3;
      s.theta2 = pi / 2.0;
      c.M1 = 20000;
      c.M2 = 20000;
      preset.sample_radius = 0.5;
      break;
    case CaseId::C:
      s.traction.set(0, {1.0, 0.0});
      s.r = 0.5;
      s.theta2 = 0.0;
      c.M1 = 30000;
      c.M2 = 10000;
      preset.sample_radius = 0.7;
      break;
    case CaseId::D:
      s.traction.set(0, {0.0, 1.0});
      s.r = 0.7;
      s.theta2 = pi / 2.0;
      c.M1 = 20000;
      c.M2 = 20000;
      preset.sample_radius = 0.9;
      break;
  }
  return preset;
}

std::optional<CaseId> parse_case_id(std::string_view text) {
  if (text == "A" || text == "a") return CaseId::A;
  if (text == "B" || text == "b") return CaseId::B;
  if (text == "C" || text == "c") return CaseId::C;
  if (text == "D" || text == "d") return CaseId::D;
  return std::nullopt;
}

char case_letter(CaseId id) { return static_cast<char>('A' + static_cast<int>(id)); }

}  // namespace annulus
