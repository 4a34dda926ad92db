#include "annulus/run.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "annulus/solution1.hpp"
#include "annulus/solution2.hpp"
#include "annulus/validate.hpp"

namespace annulus {

namespace {

struct Entry {
  int line = 0;
  std::string key;
  std::string value;
};

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

double to_double(const Entry& e, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v))
    throw ConfigError(e.line, "malformed number '" + std::string(text) + "' for key '" + e.key + "'");
  return v;
}

int to_int(const Entry& e) {
  const std::string_view text = trim(e.value);
  int v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw ConfigError(e.line, "malformed integer '" + std::string(text) + "' for key '" + e.key + "'");
  return v;
}

bool to_bool(const Entry& e) {
  const std::string v = lower(trim(e.value));
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw ConfigError(e.line, "malformed boolean '" + e.value + "' for key '" + e.key + "'");
}

// Radians by default; a trailing "deg" converts from degrees.
double to_angle(const Entry& e) {
  std::string_view text = trim(e.value);
  if (text.size() > 3 && lower(text.substr(text.size() - 3)) == "deg")
    return to_double(e, text.substr(0, text.size() - 3)) / 180.0 * std::numbers::pi;
  return to_double(e, text);
}

std::vector<double> to_list(const Entry& e) {
  std::vector<double> out;
  std::string_view rest = e.value;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(to_double(e, rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

// "p[-1]" -> ('p', -1)
std::optional<std::pair<char, int>> harmonic_key(const Entry& e) {
  const std::string& key = e.key;
  if (key.size() < 4 || (key[0] != 'p' && key[0] != 'q') || key[1] != '[' || key.back() != ']') return std::nullopt;
  const std::string_view inner = trim(std::string_view(key).substr(2, key.size() - 3));
  int k = 0;
  const auto [end, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), k);
  if (inner.empty() || ec != std::errc{} || end != inner.data() + inner.size())
    throw ConfigError(e.line, "malformed harmonic index in '" + key + "'");
  return std::pair{key[0], k};
}

std::vector<Entry> tokenize(std::string_view text) {
  std::vector<Entry> entries;
  int line_no = 0;
  while (!text.empty() || line_no == 0) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (text.empty()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    Entry e{line_no, std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))};
    e.key.erase(std::remove(e.key.begin(), e.key.end(), ' '), e.key.end());
    if (e.key.empty()) throw ConfigError(line_no, "missing key before '='");
    entries.push_back(std::move(e));
  }
  return entries;
}

void require(bool ok, const Entry& e, const std::string& message) {
  if (!ok) throw ConfigError(e.line, message);
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

RunSetup preset_setup(CaseId id) {
  const CasePreset preset = build_case_preset(id);
  RunSetup setup;
  setup.spec = preset.spec;
  setup.solver = preset.config;
  setup.run.case_id = id;
  setup.run.source = std::string("case ") + case_letter(id);
  setup.sample_radius = preset.sample_radius;
  return setup;
}

RunSetup parse_config(std::string_view text) {
  const std::vector<Entry> entries = tokenize(text);

  RunSetup setup;
  const Entry* case_entry = nullptr;
  for (const Entry& e : entries) {
    if (e.key != "case") continue;
    const auto id = parse_case_id(e.value);
    require(id.has_value(), e, "unknown case '" + e.value + "' (expected A, B, C or D)");
    setup = preset_setup(*id);
    case_entry = &e;
  }

  int r_line = 0, theta1_line = 0, theta2_line = 0, radii_line = 0;
  std::map<int, int> harmonic_lines;
  for (const Entry& e : entries) {
    const std::string& key = e.key;
    if (key == "case") continue;
    if (const auto h = harmonic_key(e)) {
      const double v = to_double(e, e.value);
      const Complex old = setup.spec.traction.coefficient(h->second);
      setup.spec.traction.set(h->second, h->first == 'p' ? Complex(v, old.imag()) : Complex(old.real(), v));
      harmonic_lines[h->second] = e.line;
    } else if (key == "nu") {
      setup.spec.nu = to_double(e, e.value);
      require(setup.spec.nu > 0.0 && setup.spec.nu < 0.5, e, "nu out of range (0, 0.5)");
    } else if (key == "plane") {
      const std::string v = lower(e.value);
      require(v == "strain" || v == "stress", e, "plane must be 'strain' or 'stress'");
      setup.spec.plane_condition = v == "strain" ? PlaneCondition::plane_strain : PlaneCondition::plane_stress;
    } else if (key == "r") {
      setup.spec.r = to_double(e, e.value);
      require(setup.spec.r > 0.0 && setup.spec.r < 1.0, e, "r out of range (0, 1)");
      r_line = e.line;
    } else if (key == "theta1") {
      setup.spec.theta1 = to_angle(e);
      theta1_line = e.line;
    } else if (key == "theta2") {
      setup.spec.theta2 = to_angle(e);
      theta2_line = e.line;
    } else if (key == "N") {
      setup.solver.N = to_int(e);
      require(setup.solver.N >= 3, e, "N must be at least 3");
    } else if (key == "epsilon") {
      setup.solver.epsilon = to_double(e, e.value);
      require(setup.solver.epsilon > 0.0, e, "epsilon must be positive");
    } else if (key == "M1" || key == "M2") {
      const int m = to_int(e);
      require(m >= 100, e, key + " must be at least 100");
      (key == "M1" ? setup.solver.M1 : setup.solver.M2) = m;
    } else if (key == "max_reps") {
      setup.solver.max_reps = to_int(e);
      require(setup.solver.max_reps >= 1, e, "max_reps must be positive");
    } else if (key == "branch") {
      const std::string v = lower(e.value);
      require(v == "principal" || v == "as_given", e, "branch must be 'principal' or 'as_given'");
      setup.solver.branch = v == "principal" ? Branch::principal : Branch::as_given;
    } else if (key == "solution") {
      const std::string v = lower(e.value);
      require(v == "1" || v == "2" || v == "both", e, "solution must be 1, 2 or both");
      setup.run.solution = v == "1" ? SolutionChoice::one : v == "2" ? SolutionChoice::two : SolutionChoice::both;
    } else if (key == "samples") {
      setup.run.samples_per_circle = to_int(e);
      require(setup.run.samples_per_circle >= 8, e, "samples must be at least 8");
    } else if (key == "radii") {
      setup.run.sample_radii = to_list(e);
      radii_line = e.line;
    } else if (key == "sign_flip") {
      setup.run.sign_flip = to_bool(e);
      setup.solver.sign_flip = setup.run.sign_flip;
    } else if (key == "validate") {
      setup.run.emit_validation = to_bool(e);
    } else if (key == "output_dir") {
      setup.run.output_dir = e.value;
    } else if (key == "m2_multiplier") {
      setup.run.m2_multiplier = to_int(e);
      require(setup.run.m2_multiplier >= 1, e, "m2_multiplier must be at least 1");
    } else {
      throw ConfigError(e.line, "unknown key '" + key + "'");
    }
  }

  if (case_entry == nullptr) {
    if (r_line == 0 && theta1_line == 0 && theta2_line == 0) throw ConfigError(0, "no case or geometry specified");
    if (r_line == 0) throw ConfigError(0, "missing key 'r'");
    if (theta1_line == 0) throw ConfigError(0, "missing key 'theta1'");
    if (theta2_line == 0) throw ConfigError(0, "missing key 'theta2'");
    setup.run.source = "config";
  }
  const ProblemSpec& spec = setup.spec;
  if (!(spec.theta2 > spec.theta1 && spec.theta2 < spec.theta1 + 2.0 * std::numbers::pi))
    throw ConfigError(std::max(theta1_line, theta2_line),
                      "theta ordering violated: need theta1 < theta2 < theta1 + 2pi");
  for (const auto& [k, line] : harmonic_lines)
    if (std::abs(k) > setup.solver.N)
      throw ConfigError(line, "traction harmonic |k| = " + std::to_string(std::abs(k)) +
                                  " exceeds truncation order N = " + std::to_string(setup.solver.N));
  try {
    validate(setup.run, setup.spec);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(radii_line, err.what());
  }
  validate(setup.spec, setup.solver);
  return setup;
}

void validate(const RunConfig& run, const ProblemSpec& spec) {
  if (run.samples_per_circle < 8) throw std::invalid_argument("samples_per_circle must be at least 8");
  if (run.m2_multiplier < 1) throw std::invalid_argument("m2_multiplier must be at least 1");
  for (double rho : run.sample_radii)
    if (!(rho >= spec.r && rho <= 1.0)) throw std::invalid_argument("sample radius outside [r, 1]");
}

std::vector<double> sample_radii(const RunSetup& setup) {
  if (!setup.run.sample_radii.empty()) return setup.run.sample_radii;
  const double r = setup.spec.r;
  const double mid = setup.sample_radius > 0.0 ? setup.sample_radius : 0.5 * (r + 1.0);
  return {r, mid, 1.0};
}

std::vector<FieldSample> sample_circle(const SeriesSolution& sol, const RigidBody& rigid, double rho, int samples,
                                       bool sign_flip) {
  std::vector<FieldSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j)
    out.push_back(sample_field(sol, rigid, rho, 2.0 * std::numbers::pi * j / samples, sign_flip));
  return out;
}

void write_csv(std::ostream& out, const std::vector<FieldSample>& samples) {
  out << "theta_deg,rho,sigma_theta,sigma_rho,tau_rhotheta,u,v\n";
  char buf[256];
  for (const FieldSample& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17e,%.17e,%.17e,%.17e,%.17e,%.17e,%.17e\n", s.theta * 180.0 / std::numbers::pi,
                  s.rho, s.sigma_theta, s.sigma_rho, s.tau_rhotheta, s.u, s.v);
    out << buf;
  }
}

void emit_csv(const std::vector<FieldSample>& samples, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(out, samples);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string csv_name(const RunSetup& setup, int solution, double rho) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "_sol%d_rho%.3f.csv", solution, rho);
  const std::string stem = setup.run.case_id ? std::string("case") + case_letter(*setup.run.case_id) : "custom";
  return stem + buf;
}

std::string format_run_report(const RunSetup& setup, int solution, const IterationReport& report) {
  const SolverConfig& c = setup.solver;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "solution %d\n  N %d\n  epsilon %.3e\n  M1 %d\n  M2 %d\n  Q %d\n  N_C1 %.4f\n  N_C2 %.4f\n"
                "  final increment %.6e\n",
                solution, c.N, c.epsilon, c.M1, c.M2, report.reps, report.cond_alpha, report.cond_beta,
                report.history.empty() ? 0.0 : report.history.back());
  return buf;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
}

std::string run_header(const RunSetup& setup) {
  const ProblemSpec& s = setup.spec;
  std::string out = "source " + setup.run.source + "\n";
  char buf[256];
  std::snprintf(buf, sizeof buf, "nu %.6g (%s) kappa %.6g\nr %.6g\ntheta1 %.17g\ntheta2 %.17g\n", s.nu,
                s.plane_condition == PlaneCondition::plane_strain ? "plane strain" : "plane stress", s.kappa(), s.r,
                s.theta1, s.theta2);
  out += buf;
  for (const auto& [k, v] : s.traction.coefficients()) {
    std::snprintf(buf, sizeof buf, "traction k=%d p=%.17g q=%.17g\n", k, v.real(), v.imag());
    out += buf;
  }
  return out;
}

}  // namespace

int run_case(const RunSetup& setup, std::ostream& log) {
  validate(setup.spec, setup.solver);
  validate(setup.run, setup.spec);
  const RunConfig& run = setup.run;
  std::filesystem::create_directories(run.output_dir);
  const std::string stem = setup.run.case_id ? std::string("case") + case_letter(*setup.run.case_id) : "custom";

  std::vector<int> wanted;
  if (run.solution != SolutionChoice::two) wanted.push_back(1);
  if (run.solution != SolutionChoice::one) wanted.push_back(2);

  std::string report = run_header(setup);
  std::map<int, SeriesSolution> solved;
  int status = 0;
  for (int which : wanted) {
    try {
      SolveResult result =
          which == 1 ? solution1::run(setup.spec, setup.solver) : solution2::run2(setup.spec, setup.solver);
      report += format_run_report(setup, which, result.report);
      log << stem << " solution " << which << ": Q = " << result.report.reps << "\n";
      const RigidBody rigid = rigid_body_constant(result.solution);
      for (double rho : sample_radii(setup)) {
        const auto path = run.output_dir / csv_name(setup, which, rho);
        emit_csv(sample_circle(result.solution, rigid, rho, run.samples_per_circle, run.sign_flip), path);
        log << "  wrote " << path.string() << "\n";
      }
      solved.emplace(which, std::move(result.solution));
    } catch (const ConvergenceError& err) {
      report += "solution " + std::to_string(which) + "\n  did not converge: " + err.what() + "\n";
      log << stem << " solution " << which << ": " << err.what() << "\n";
      status = 2;
    }
  }
  write_text(run.output_dir / (stem + "_report.txt"), report);

  if (run.emit_validation && !solved.empty()) {
    std::string text;
    for (const auto& [which, sol] : solved) {
      const SeriesSolution* other = nullptr;
      if (const auto it = solved.find(3 - which); it != solved.end()) other = &it->second;
      text += "solution " + std::to_string(which) + "\n";
      text += format_validation(validate_solution(sol, setup.solver, run.m2_multiplier, other));
    }
    write_text(run.output_dir / (stem + "_validation.txt"), text);
    log << "  wrote " << (run.output_dir / (stem + "_validation.txt")).string() << "\n";
  }
  return status;
}

}  // namespace annulus
