#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "annulus/fields.hpp"
#include "annulus/iteration.hpp"
#include "annulus/model.hpp"

namespace annulus {

enum class SolutionChoice { one, two, both };

struct RunConfig {
  std::string source;  ///< "case A" or the config path
  std::optional<CaseId> case_id;
  SolutionChoice solution = SolutionChoice::both;
  std::vector<double> sample_radii;  ///< empty means the per-case default
  int samples_per_circle = 720;
  std::filesystem::path output_dir = ".";
  bool sign_flip = true;
  bool emit_validation = false;
  int m2_multiplier = 10;
};

struct RunSetup {
  ProblemSpec spec;
  SolverConfig solver;
  RunConfig run;
  double sample_radius = 0.0;  ///< intermediate circle of the presets, 0 for custom geometry
};

/// Parse error carrying the 1-based line it refers to (0 when not tied to a line).
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// `key = value` lines, `#` comments. A `case` line loads the preset and
/// later keys override it; without one, r, theta1 and theta2 are required.
RunSetup parse_config(std::string_view text);
RunSetup preset_setup(CaseId id);

/// Radii to sample: the configured list, or r, the preset r_rho and 1
/// (r, (r + 1) / 2 and 1 for custom geometry).
std::vector<double> sample_radii(const RunSetup& setup);

void validate(const RunConfig& run, const ProblemSpec& spec);

/// `samples` equally spaced points on the circle rho, starting at theta = 0.
std::vector<FieldSample> sample_circle(const SeriesSolution& sol, const RigidBody& rigid, double rho, int samples,
                                       bool sign_flip);

void write_csv(std::ostream& out, const std::vector<FieldSample>& samples);
void emit_csv(const std::vector<FieldSample>& samples, const std::filesystem::path& path);

/// e.g. caseA_sol1_rho0.100.csv, or custom_sol2_rho0.750.csv without a case id.
std::string csv_name(const RunSetup& setup, int solution, double rho);

/// Truncation, point counts, sweep count and condition numbers of one solve.
std::string format_run_report(const RunSetup& setup, int solution, const IterationReport& report);

/// Solves the configured problem, writes its CSVs and reports into run.output_dir and returns the
/// process exit status: 0 on success, 2 when a solver does not converge.
int run_case(const RunSetup& setup, std::ostream& log);

}  // namespace annulus
