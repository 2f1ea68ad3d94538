// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "runner.hpp"

#include <cmath>
#include <sstream>

#include "wigner/io/report.hpp"
#include "wigner/observables.hpp"

namespace wigner::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void note(const RunOptions& options, std::string_view message) {
  if (options.log) options.log(message);
}

json system_json(const SystemSpec& s) {
  json j = {{"electrons", s.electrons},
            {"spin", s.total_spin},
            {"confinement", std::string(to_string(s.confinement.shape))},
            {"omega", s.confinement.omega},
            {"coulomb", s.coulomb}};
  if (s.cavity) {
    j["cavity"] = {{"omega_p", s.cavity->omega_p},
                   {"lambda", s.cavity->lambda},
                   {"coupling", s.cavity->coupling_strength()}};
  }
  return j;
}

json header(const io::RunConfig& config) {
  return {{"config_hash", io::config_hash(config)},
          {"seed", config.optimizer.seed},
          {"method", std::string(io::to_string(config.method))},
          {"system", system_json(config.system)}};
}

json diagnostics_json(const DensityDiagnostics& d) {
  return {{"integral", d.integral},
          {"peak_count", d.peak_count},
          {"peak_positions", d.peak_positions},
          {"rms_spread", d.rms_spread},
          {"symmetry_defect", d.symmetry_defect}};
}

void write_density(const fs::path& dir, const GridDensity& density) {
  std::ostringstream csv;
  io::write_density_csv(csv, density);
  io::write_text_file(dir / "density.csv", csv.str());
}

void write_summary(const fs::path& dir, const json& summary) {
  io::write_text_file(dir / "summary.json", summary.dump(2) + "\n");
}

SystemSpec model_system(const io::Checkpoint& c) {
  SystemSpec s = c.config.system;
  if (s.cavity) s.cavity->n_max = c.photon_blocks - 1;
  return s;
}

RunResult finish_ecg(const io::Checkpoint& c, const EcgModel& model, const BasisSet& basis,
                     const StochasticOptimizer& optimizer, const fs::path& dir) {
  const SpectrumResult spectrum = optimizer.spectrum(basis);
  const ManyBodyState state = ManyBodyState::from_spectrum(model, basis, spectrum);
  const EnergyBreakdown e = energy_decomposition(basis, state.coefficients);
  const auto grid = c.config.grid.coordinates();
  const GridDensity density = reduced_density(state, grid);
  const DensityDiagnostics diag = density_diagnostics(density);

  json summary = header(c.config);
  summary["energy"] = spectrum.ground_energy();
  std::vector<double> low;
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(5, spectrum.energies.size()); ++i) {
    low.push_back(spectrum.energies(i));
  }
  summary["lowest_energies"] = low;
  summary["breakdown"] = {{"kinetic", e.kinetic},
                          {"coulomb", e.coulomb},
                          {"confinement", e.confinement},
                          {"total", e.total}};
  summary["basis_size"] = basis.size();
  summary["discarded_directions"] = spectrum.discarded;
  summary["residual"] = generalized_residual(basis.hamiltonian(), basis.overlap(), spectrum, 1);
  summary["sweeps_done"] = c.progress.sweeps_done;
  summary["trace"] = c.trace;
  summary["density"] = diagnostics_json(diag);

  if (c.config.system.cavity) {
    const int n_max = c.photon_blocks - 1;
    const PolaritonicState polariton = polaritonic_state(basis, state.coefficients, n_max);
    summary["photon"] = {{"n_max", n_max},
                         {"probabilities", photon_number_distribution(polariton)},
                         {"block_energies", polariton.block_energies}};
    if (!c.photon_energies.empty()) summary["photon"]["truncation_energies"] = c.photon_energies;
    std::ostringstream csv;
    io::write_photon_csv(csv, polariton);
    io::write_text_file(dir / "photons.csv", csv.str());
  }
  write_density(dir, density);
  write_summary(dir, summary);
  return {true, summary};
}

// Drives an ECG checkpoint to completion, saving after growth and every sweep.
RunResult continue_ecg(io::Checkpoint c, const fs::path& dir, const RunOptions& options) {
  fs::create_directories(dir);
  const auto checkpoint_path = dir / "checkpoint.json";
  const io::RunConfig& config = c.config;
  auto logger = [&](std::string_view m) { note(options, m); };

  // automatic photon truncation replaces the growth stage
  if (c.stage == io::Stage::kGrow && c.terms.empty() && config.system.cavity &&
      config.photon_tolerance > 0.0) {
    TruncationOptions t;
    t.tolerance = config.photon_tolerance;
    t.ceiling = config.system.cavity->n_max;
    t.initial_terms = config.optimizer.target_size;
    t.terms_per_block = config.photon_terms_per_block;
    TruncationResult found =
        converge_photon_truncation(config.system, *config.system.cavity, config.optimizer, t);
    c.photon_blocks = found.n_max + 2;
    c.photon_energies = found.energies;
    for (const auto& p : found.basis.terms()) c.terms.push_back(p.term);
    c.stage = io::Stage::kRefine;
    c.progress = {};
    std::ostringstream msg;
    msg << "photon truncation converged at n_max=" << found.n_max;
    logger(msg.str());
  }

  const EcgModel model(model_system(c));
  OptimizerConfig optimizer_config = config.optimizer;
  StochasticOptimizer optimizer(model, optimizer_config);
  optimizer.set_logger(logger);
  if (!c.progress.rng_state.empty()) optimizer.restore(c.progress);

  BasisSet basis = BasisSet::assemble(model, c.terms);
  if (!basis.empty()) {
    const double e0 = optimizer.spectrum(basis).ground_energy();
    if (c.energy != 0.0 && std::abs(e0 - c.energy) > 1e-12 * std::max(1.0, std::abs(c.energy))) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "rebuilt basis gives E0=" << e0 << " but the checkpoint recorded " << c.energy;
      throw NumericalError(msg.str());
    }
  }

  const std::vector<double> prior_trace = c.trace;
  auto snapshot = [&](io::Stage stage) {
    c.stage = stage;
    c.terms.clear();
    for (const auto& p : basis.terms()) c.terms.push_back(p.term);
    c.progress = optimizer.progress();
    c.trace = prior_trace;
    c.trace.insert(c.trace.end(), optimizer.trace().begin(), optimizer.trace().end());
    c.energy = basis.empty() ? 0.0 : optimizer.spectrum(basis).ground_energy();
    io::save_checkpoint(c, checkpoint_path);
  };

  if (c.stage == io::Stage::kGrow) {
    optimizer.grow(basis, config.optimizer.target_size);
    snapshot(io::Stage::kRefine);
    if (options.stop_after_growth) return {false, {}};
  }
  if (c.stage == io::Stage::kRefine) {
    const int sweeps = config.optimizer.refinement_sweeps;
    while (optimizer.progress().sweeps_done < sweeps && basis.size() >= 2) {
      optimizer.refine(basis, 1);
      snapshot(io::Stage::kRefine);
    }
    // final artifacts depend on the terms only, not on the update history
    std::vector<BasisTerm> terms;
    for (const auto& p : basis.terms()) terms.push_back(p.term);
    basis = BasisSet::assemble(model, terms);
    snapshot(io::Stage::kDone);
  }
  return finish_ecg(c, model, basis, optimizer, dir);
}

RunResult run_dft(const io::RunConfig& config, const fs::path& dir, const RunOptions& options) {
  fs::create_directories(dir);
  const dft::ScfResult r = dft::scf(config.system, config.grid, config.scf);
  std::ostringstream msg;
  msg << "SCF converged in " << r.iterations << " iterations (mixing " << r.mixing << ")";
  note(options, msg.str());
  json summary = header(config);
  summary["energy"] = r.energy;
  summary["iterations"] = r.iterations;
  summary["mixing"] = r.mixing;
  summary["final_residual"] = r.residuals.back();
  summary["eigenvalues_up"] = r.state.eigenvalues_up;
  summary["eigenvalues_down"] = r.state.eigenvalues_down;
  summary["density"] = diagnostics_json(density_diagnostics(r.state.density));
  write_density(dir, r.state.density);
  write_summary(dir, summary);
  return {true, summary};
}

std::string point_dir(SweepParameter p, std::size_t index) {
  static const char* names[] = {"omega", "lambda", "omega_p"};
  return std::string(names[static_cast<int>(p)]) + "_" + std::to_string(index);
}

}  // namespace

RunResult run(const io::RunConfig& config, const RunOptions& options) {
  config.validate();
  const fs::path dir = config.output_dir;
  if (config.method == io::Method::kDft) return run_dft(config, dir, options);
  io::Checkpoint c;
  c.config = config;
  c.photon_blocks = config.system.cavity ? config.system.cavity->n_max + 1 : 1;
  return continue_ecg(std::move(c), dir, options);
}

RunResult resume(const io::Checkpoint& checkpoint, const std::string& output_dir,
                 const RunOptions& options) {
  io::Checkpoint c = checkpoint;
  if (!output_dir.empty()) c.config.output_dir = output_dir;
  if (c.config.method == io::Method::kDft) throw UsageError("DFT runs have no checkpoints");
  const fs::path dir = c.config.output_dir;
  return continue_ecg(std::move(c), dir, options);
}

SweepParameter sweep_parameter_from_string(std::string_view name) {
  if (name == "omega") return SweepParameter::kOmega;
  if (name == "lambda") return SweepParameter::kLambda;
  if (name == "omega_p") return SweepParameter::kOmegaP;
  throw UsageError("unknown sweep parameter '" + std::string(name) +
                   "' (expected omega, lambda or omega_p)");
}

std::vector<SweepPoint> sweep(const io::RunConfig& base, SweepParameter parameter,
                              const std::vector<double>& values, const std::string& output_dir,
                              const RunOptions& options) {
  if (values.empty()) throw UsageError("sweep needs at least one parameter value");
  if (parameter != SweepParameter::kOmega && !base.system.cavity) {
    throw UsageError("lambda and omega_p sweeps need a cavity configuration");
  }
  std::vector<SweepPoint> points;
  std::ostringstream table;
  static const char* names[] = {"omega", "lambda", "omega_p"};
  table << names[static_cast<int>(parameter)]
        << ",status,energy,rms_spread,peak_count,symmetry_defect\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    SweepPoint point;
    point.value = values[i];
    io::RunConfig config = base;
    config.output_dir = (fs::path(output_dir) / point_dir(parameter, i)).string();
    switch (parameter) {
      case SweepParameter::kOmega: config.system.confinement.omega = values[i]; break;
      case SweepParameter::kLambda: config.system.cavity->lambda = values[i]; break;
      case SweepParameter::kOmegaP: config.system.cavity->omega_p = values[i]; break;
    }
    try {
      point.summary = run(config, options).summary;
      point.status = "ok";
    } catch (const UsageError& e) {
      point.status = std::string("config-error: ") + e.what();
    } catch (const NumericalError& e) {
      point.status = std::string("solver-failure: ") + e.what();
    }
    note(options, point_dir(parameter, i) + ": " + point.status);
    std::string status = point.status;
    for (char& ch : status) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    table << io::format_double(point.value) << ',' << status;
    if (point.status == "ok") {
      const auto& d = point.summary["density"];
      table << ',' << io::format_double(point.summary["energy"].get<double>()) << ','
            << io::format_double(d["rms_spread"].get<double>()) << ','
            << d["peak_count"].get<int>() << ','
            << io::format_double(d["symmetry_defect"].get<double>());
    } else {
      table << ",,,,";
    }
    table << '\n';
    points.push_back(std::move(point));
  }
  io::write_text_file(fs::path(output_dir) / "sweep.csv", table.str());
  return points;
}

}  // namespace wigner::app
