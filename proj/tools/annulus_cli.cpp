// Batch front end: solve a preset or configured annulus problem and write
// per-circle CSV samples plus a plain-text report.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "annulus/run.hpp"

int main(int argc, char** argv) {
  using namespace annulus;

  CLI::App app{"Stress and displacement of an annulus with a partially fixed outer boundary"};
  std::string case_name;
  std::string config_path;
  std::string solution;
  std::string out_dir;
  int samples = 0;
  std::vector<double> radii;
  bool no_sign_flip = false;
  bool emit_validation = false;
  int m2_multiplier = 0;

  auto* case_opt = app.add_option("--case", case_name, "Preset case")->check(CLI::IsMember({"A", "B", "C", "D"}));
  auto* config_opt =
      app.add_option("--config", config_path, "Config file (key = value lines)")->check(CLI::ExistingFile);
  case_opt->excludes(config_opt);
  app.add_option("--solution", solution, "Which solver to run")->check(CLI::IsMember({"1", "2", "both"}));
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--samples", samples, "Samples per circle")->check(CLI::Range(8, 1 << 24));
  app.add_option("--radii", radii, "Comma-separated sample radii")->delimiter(',');
  app.add_flag("--no-sign-flip", no_sign_flip, "Write the raw sign convention");
  app.add_flag("--validate", emit_validation, "Also write the validation report");
  app.add_option("--m2-multiplier", m2_multiplier, "M2 scale for the coefficient-identity check")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    RunSetup setup;
    if (!case_name.empty()) {
      setup = preset_setup(*parse_case_id(case_name));
    } else if (!config_path.empty()) {
      std::ifstream in(config_path);
      std::ostringstream text;
      text << in.rdbuf();
      setup = parse_config(text.str());
      if (!setup.run.case_id) setup.run.source = config_path;
    } else {
      std::cerr << "one of --case or --config is required\n" << app.help();
      return 1;
    }

    if (!solution.empty())
      setup.run.solution = solution == "1"   ? SolutionChoice::one
                           : solution == "2" ? SolutionChoice::two
                                             : SolutionChoice::both;
    if (!out_dir.empty()) setup.run.output_dir = out_dir;
    if (samples > 0) setup.run.samples_per_circle = samples;
    if (!radii.empty()) setup.run.sample_radii = radii;
    if (no_sign_flip) setup.run.sign_flip = setup.solver.sign_flip = false;
    if (emit_validation) setup.run.emit_validation = true;
    if (m2_multiplier > 0) setup.run.m2_multiplier = m2_multiplier;
    validate(setup.run, setup.spec);

    return run_case(setup, std::cout);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
