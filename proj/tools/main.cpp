// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

// wigner1d: command-line front end.
//
//   wigner1d run --config run.cfg [--seed N] [--output-dir DIR]
//   wigner1d sweep --config run.cfg --param lambda --values 0.01,0.1,1
//   wigner1d resume out/checkpoint.json
//   wigner1d compare ecg/density.csv dft/density.csv
//
// Exit status: 0 success, 2 configuration error, 3 solver failure.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>

#include "runner.hpp"
#include "wigner/io/report.hpp"
#include "wigner/observables.hpp"

namespace {

using namespace wigner;

constexpr int kConfigError = 2;
constexpr int kSolverFailure = 3;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  std::optional<int> basis_size;
  std::optional<int> sweeps;
  std::optional<double> scf_tolerance;
  std::optional<double> photon_tolerance;

  void apply(io::RunConfig& c) const {
    if (seed) c.optimizer.seed = *seed;
    if (output_dir) c.output_dir = *output_dir;
    if (basis_size) c.optimizer.target_size = *basis_size;
    if (sweeps) c.optimizer.refinement_sweeps = *sweeps;
    if (scf_tolerance) c.scf.tolerance = *scf_tolerance;
    if (photon_tolerance) c.photon_tolerance = *photon_tolerance;
    c.validate();
  }
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--seed", o.seed, "Random seed for the basis optimizer");
  cmd->add_option("--output-dir", o.output_dir, "Directory for the run artifacts");
  cmd->add_option("--basis-size", o.basis_size, "Target number of basis terms");
  cmd->add_option("--sweeps", o.sweeps, "Refinement sweeps after growth");
  cmd->add_option("--scf-tolerance", o.scf_tolerance, "Kohn-Sham density tolerance");
  cmd->add_option("--photon-tolerance", o.photon_tolerance,
                  "Energy tolerance of the automatic photon truncation");
}

void print_result(const app::RunResult& r) {
  if (!r.complete) {
    std::cout << "stopped after basis growth; continue with 'resume'\n";
    return;
  }
  std::printf("E0 = %.12f\n", r.summary["energy"].get<double>());
}

int compare(const std::string& first, const std::string& second) {
  const GridDensity a = io::load_density_csv(first);
  const GridDensity b = io::load_density_csv(second);
  const ComparisonReport report = compare_report(a, b);
  std::printf("L1 = %.9g\n", report.l1_distance);
  std::printf("peaks: %d vs %d\n", report.first_peaks, report.second_peaks);
  for (const auto& m : report.matches) {
    std::printf("%12.6f %12.6f %+12.6f\n", m.first, m.second, m.displacement);
  }
  return 0;
}

// "0.1, 1,10" -> {0.1, 1, 10}; an empty string is an empty grid.
std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const auto first = text.find_first_not_of(' ', start);
    const auto last = text.find_last_not_of(' ', end - 1);
    double v = 0.0;
    const char* b = text.data() + first;
    const char* e = text.data() + last + 1;
    if (first >= end || std::from_chars(b, e, v).ptr != e) {
      throw UsageError("invalid sweep value '" + text.substr(start, end - start) + "'");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Few-electron 1D Wigner crystals: ECG/SVM, cavity QED and LDA solvers"};
  cli.require_subcommand(1);

  bool verbose = false;
  cli.add_flag("-v,--verbose", verbose, "Log optimizer progress to stderr");

  std::string config_path;
  Overrides overrides;
  bool stop_after_growth = false;
  auto* run_cmd = cli.add_subcommand("run", "Run one configuration");
  run_cmd->add_option("--config", config_path, "Run configuration file")->required();
  run_cmd->add_flag("--stop-after-growth", stop_after_growth,
                    "Write the checkpoint after basis growth and stop");
  add_overrides(run_cmd, overrides);

  std::string param;
  std::string values;
  auto* sweep_cmd = cli.add_subcommand("sweep", "Run a configuration over a parameter grid");
  sweep_cmd->add_option("--config", config_path, "Template configuration file")->required();
  sweep_cmd->add_option("--param", param, "omega, lambda or omega_p")->required();
  sweep_cmd->add_option("--values", values, "Comma-separated parameter values")->required();
  add_overrides(sweep_cmd, overrides);

  std::string checkpoint_path;
  std::string resume_dir;
  auto* resume_cmd = cli.add_subcommand("resume", "Continue an ECG run from its checkpoint");
  resume_cmd->add_option("checkpoint", checkpoint_path, "checkpoint.json")->required();
  resume_cmd->add_option("--output-dir", resume_dir, "Directory for the run artifacts");

  std::vector<std::string> csv_files;
  auto* compare_cmd = cli.add_subcommand("compare", "Compare two density CSV files");
  compare_cmd->add_option("densities", csv_files, "Two density CSV files")->required()->expected(2);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  app::RunOptions options;
  if (verbose) options.log = [](std::string_view m) { std::cerr << m << '\n'; };

  try {
    if (*run_cmd) {
      io::RunConfig config = io::load_run_config(config_path);
      overrides.apply(config);
      options.stop_after_growth = stop_after_growth;
      print_result(app::run(config, options));
    } else if (*sweep_cmd) {
      io::RunConfig config = io::load_run_config(config_path);
      overrides.apply(config);
      const auto points =
          app::sweep(config, app::sweep_parameter_from_string(param), parse_values(values),
                     config.output_dir, options);
      int failed = 0;
      for (const auto& p : points) {
        std::printf("%-12g %s\n", p.value, p.status.c_str());
        if (p.status != "ok") ++failed;
      }
      return failed == 0 ? 0 : kSolverFailure;
    } else if (*resume_cmd) {
      print_result(app::resume(io::load_checkpoint(checkpoint_path), resume_dir, options));
    } else if (*compare_cmd) {
      return compare(csv_files[0], csv_files[1]);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  }
  return 0;
}
