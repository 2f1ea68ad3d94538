// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance driver: one PASS/FAIL line per criterion, with the measured
// numbers printed as indented detail lines above it.
//
//   wigner_acceptance            all criteria
//   wigner_acceptance 3 6        selected criteria
//   wigner_acceptance --extended only the N = 5, 6 energies (hours)

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "brute_force.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "runner.hpp"
#include "wigner/cavity.hpp"
#include "wigner/density.hpp"
#include "wigner/dft.hpp"
#include "wigner/io/config.hpp"
#include "wigner/observables.hpp"
#include "wigner/svm.hpp"

using namespace wigner;
namespace fs = std::filesystem;

namespace {

void detail(const char* format, ...) {
  std::va_list args;
  va_start(args, format);
  std::printf("      ");
  std::vprintf(format, args);
  std::printf("\n");
  std::fflush(stdout);
  va_end(args);
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SystemSpec electrons(int n, double spin, double omega, bool coulomb = true) {
  SystemSpec s;
  s.electrons = n;
  s.total_spin = spin;
  s.confinement.omega = omega;
  s.coulomb = coulomb;
  return s;
}

// Every SVM trace produced in this process, checked again by criterion 9.
std::vector<std::pair<std::string, std::vector<double>>>& trajectories() {
  static std::vector<std::pair<std::string, std::vector<double>>> all;
  return all;
}

bool non_increasing(const std::vector<double>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i] > trace[i - 1] + 1e-11 * (1.0 + std::abs(trace[i - 1]))) return false;
  }
  return true;
}

std::string label(const SystemSpec& s) {
  std::ostringstream out;
  out << "N=" << s.electrons << " S=" << s.total_spin << " w=" << s.confinement.omega;
  if (s.cavity) out << " wp=" << s.cavity->omega_p << " lambda=" << s.cavity->lambda;
  return out.str();
}

struct EcgRun {
  SystemSpec system;
  BasisSet basis;
  SpectrumResult spectrum;
  double energy = 0.0;
  double seconds = 0.0;
};

struct EcgSettings {
  int size = 60;
  int sweeps = 2;
  std::uint64_t seed = 1;
};

EcgRun solve_ecg(const SystemSpec& system, const EcgSettings& settings) {
  const auto start = std::chrono::steady_clock::now();
  const EcgModel model(system);
  OptimizerConfig config;
  config.seed = settings.seed;
  StochasticOptimizer optimizer(model, config);
  EcgRun run;
  run.system = system;
  optimizer.grow(run.basis, settings.size);
  if (settings.sweeps > 0) optimizer.refine(run.basis, settings.sweeps);
  run.spectrum = optimizer.spectrum(run.basis);
  run.energy = run.spectrum.ground_energy();
  run.seconds = seconds_since(start);
  trajectories().emplace_back(label(system), optimizer.trace());
  return run;
}

// Wide enough for every trap used below; densities are evaluated on it.
GridDensity density_of(const EcgRun& run, double half_width, double spacing) {
  const EcgModel model(run.system);
  const ManyBodyState state = ManyBodyState::from_spectrum(model, run.basis, run.spectrum);
  const int points = static_cast<int>(std::lround(2.0 * half_width / spacing)) + 1;
  return reduced_density(state, GridDensity::uniform(points, spacing).x);
}

double half_width_for(double omega, int n) {
  // classical turning region of the outermost electron with some margin
  return std::max(6.0, 4.0 * std::sqrt((2.0 * n + 1.0) / omega));
}

// ---------------------------------------------------------------------------

Outcome exact_limits() {
  Outcome out;
  double worst = 0.0;
  {
    const EcgRun r = solve_ecg(electrons(1, 0.5, 1.0), {10, 0, 5});
    const double err = std::abs(r.energy - 0.5);
    detail("N=1 w=1: E=%.12f |E-0.5|=%.1e (%.2fs)", r.energy, err, r.seconds);
    if (!(err <= 1e-8)) out.pass = false;
    if (r.seconds >= 1.0) out.pass = false;
    worst = err;
  }
  const EcgSettings settings[] = {{60, 0, 7}, {80, 5, 7}, {120, 5, 7}};
  for (int n = 2; n <= 4; ++n) {
    const EcgRun r = solve_ecg(electrons(n, 0.5 * n, 1.0, false), settings[n - 2]);
    const double exact = 0.5 * n * n;
    const double err = std::abs(r.energy - exact);
    detail("N=%d polarized, no Coulomb: E=%.10f exact %.1f |dE|=%.1e K=%d (%.2fs)", n, r.energy,
           exact, err, r.basis.size(), r.seconds);
    if (!(err <= 1e-6) || r.seconds >= 1.0) out.pass = false;
    worst = std::max(worst, err);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "exact limits, largest |E - E_exact| = %.1e", worst);
  out.summary = buf;
  return out;
}

// ---------------------------------------------------------------------------

struct ContributionRow {
  double spin, omega, t, v, vc, e;
};

const ContributionRow kTwoElectronContributions[] = {
    {0, 0.01, 0.007, 0.032, 0.025, 0.0691}, {0, 0.1, 0.07, 0.017, 0.014, 0.39},
    {0, 1.0, 0.44, 0.76, 0.57, 1.77},       {0, 20.0, 9.99, 0.97, 10.01, 20.97},
    {1, 0.01, 0.007, 0.032, 0.025, 0.0691}, {1, 0.1, 0.07, 0.017, 0.014, 0.39},
    {1, 1.0, 0.92, 0.54, 1.09, 2.55},       {1, 20.0, 20.0, 0.94, 20.00, 40.94},
};

Outcome energy_contributions() {
  Outcome out;
  int failed_cells = 0;
  for (const auto& row : kTwoElectronContributions) {
    const EcgRun r = solve_ecg(electrons(2, row.spin, row.omega), {80, 2, 11});
    const EnergyBreakdown e = energy_decomposition(r.basis, r.spectrum.ground_state());
    auto component_ok = [](double value, double reference) {
      return std::abs(value - reference) <= std::max(0.02, 0.02 * std::abs(reference));
    };
    const bool e_ok = std::abs(e.total - row.e) <= 0.01 * row.e;
    const bool t_ok = component_ok(e.kinetic, row.t);
    const bool v_ok = component_ok(e.coulomb, row.v);
    const bool c_ok = component_ok(e.confinement, row.vc);
    const bool ok = e_ok && t_ok && v_ok && c_ok;
    detail("%s S=%g w=%-5g T=%.4f(%s) V=%.4f(%s) Vc=%.4f(%s) E=%.5f(%s) vs %g/%g/%g/%g K=%d %.1fs",
           ok ? "ok  " : "MISS", row.spin, row.omega, e.kinetic, t_ok ? "ok" : "x", e.coulomb,
           v_ok ? "ok" : "x", e.confinement, c_ok ? "ok" : "x", e.total, e_ok ? "ok" : "x", row.t,
           row.v, row.vc, row.e, r.basis.size(), r.seconds);
    if (!ok) ++failed_cells;
  }
  out.pass = failed_cells == 0;
  out.summary = "two-electron energy contributions, " + std::to_string(8 - failed_cells) +
                "/8 cells within tolerance";
  return out;
}

// ---------------------------------------------------------------------------

struct ReferenceEnergyRow {
  int n;
  double spin, omega, ecg, dft;
};

const ReferenceEnergyRow kReferenceEnergies[] = {
    {2, 0, 0.1, 0.392, 0.005},     {2, 0, 1, 1.774, 1.111},       {2, 1, 0.1, 0.396, -0.1},
    {2, 1, 1, 2.554, 1.827},       {3, 0.5, 0.1, 1.009, 0.256},   {3, 0.5, 1, 4.481, 3.385},
    {3, 1.5, 0.1, 1.016, 0.246},   {3, 1.5, 1, 6.078, 4.872},     {4, 0, 0.1, 1.877, 0.982},
    {4, 0, 1, 7.808, 6.261},       {4, 1, 0.1, 1.887, 0.846},     {4, 1, 1, 8.589, 7.005},
    {4, 2, 0.1, 1.894, 0.837},     {4, 2, 1, 11.024, 9.293},      {5, 0.5, 0.1, 2.999, 1.678},
    {5, 0.5, 1, 12.490, 10.443},   {5, 1.5, 0.1, 2.985, 1.671},   {5, 1.5, 1, 14.069, 11.955},
    {5, 2.5, 0.1, 3.020, 1.663},   {5, 2.5, 1, 17.379, 15.064},   {6, 0, 0.1, 4.362, 2.822},
    {6, 0, 1, 17.733, 15.164},     {6, 1, 0.1, 4.357, 2.715},     {6, 1, 1, 18.566, 15.919},
    {6, 2, 0.1, 4.336, 2.716},     {6, 2, 1, 20.911, 18.221},     {6, 3, 0.1, 4.413, 2.716},
    {6, 3, 1, 25.099, 22.167},
};

EcgSettings reference_settings(int n) {
  switch (n) {
    case 2: return {80, 2, 13};
    case 3: return {120, 2, 13};
    case 4: return {150, 2, 13};
    case 5: return {200, 2, 13};
    default: return {250, 2, 13};
  }
}

Outcome ecg_energies(int lo, int hi, double tolerance) {
  Outcome out;
  int cells = 0, failed = 0;
  double worst = 0.0;
  for (const auto& row : kReferenceEnergies) {
    if (row.n < lo || row.n > hi) continue;
    ++cells;
    const EcgRun r = solve_ecg(electrons(row.n, row.spin, row.omega), reference_settings(row.n));
    const double rel = (r.energy - row.ecg) / std::abs(row.ecg);
    const bool within = std::abs(rel) <= tolerance;
    const bool sane = r.energy >= row.ecg - 0.02 * std::abs(row.ecg);
    detail("%s N=%d S=%-3g w=%-4g E=%.6f ref %.3f rel %+.2f%% K=%d %.0fs",
           within && sane ? "ok  " : "MISS", row.n, row.spin, row.omega, r.energy, row.ecg,
           100 * rel, r.basis.size(), r.seconds);
    if (!within || !sane) ++failed;
    worst = std::max(worst, std::abs(rel));
  }
  out.pass = failed == 0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "ECG total energies N=%d..%d, %d/%d within %.0f%% (largest %.2f%%)", lo, hi,
                cells - failed, cells, 100 * tolerance, 100 * worst);
  out.summary = buf;
  return out;
}

// ---------------------------------------------------------------------------

Outcome dft_energies() {
  Outcome out;
  int failed = 0;
  double worst = 0.0, negative = 0.0;
  for (const auto& row : kReferenceEnergies) {
    const auto start = std::chrono::steady_clock::now();
    const dft::ScfResult r = dft::scf(electrons(row.n, row.spin, row.omega));
    const double diff = r.energy - row.dft;
    const bool ok = std::abs(diff) <= 0.05;
    detail("%s N=%d S=%-3g w=%-4g E=%+.5f ref %+.3f diff %+.4f (mixing %.3g, %d it, %.1fs)",
           ok ? "ok  " : "MISS", row.n, row.spin, row.omega, r.energy, row.dft, diff, r.mixing,
           r.iterations, seconds_since(start));
    if (!ok) ++failed;
    worst = std::max(worst, std::abs(diff));
    if (row.n == 2 && row.spin == 1 && row.omega == 0.1) negative = r.energy;
  }
  const bool sign = negative < 0.0;
  detail("N=2 S=1 w=0.1 LDA energy %+.5f (%s)", negative, sign ? "negative" : "not negative");
  out.pass = failed == 0 && sign;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "LSDA energies, %d/28 rows within 0.05 (largest %.3f), N=2 S=1 w=0.1 sign %s",
                28 - failed, worst, sign ? "reproduced" : "wrong");
  out.summary = buf;
  return out;
}

// ---------------------------------------------------------------------------

EcgSettings polarized_settings(int n) {
  switch (n) {
    case 2: return {60, 1, 17};
    case 3: return {80, 1, 17};
    case 4: return {100, 1, 17};
    default: return {100, 0, 17};
  }
}

Outcome peak_counts() {
  Outcome out;
  int checks = 0, failed = 0;
  auto record = [&](const char* method, const SystemSpec& s, int peaks, int expected,
                    double seconds) {
    ++checks;
    const bool ok = peaks == expected;
    if (!ok) ++failed;
    detail("%s %-3s %s: %d peaks, expected %d (%.0fs)", ok ? "ok  " : "MISS", method,
           label(s).c_str(), peaks, expected, seconds);
  };
  for (int n = 2; n <= 6; ++n) {
    for (double omega : {0.1, 1.0}) {
      const SystemSpec s = electrons(n, 0.5 * n, omega);
      auto start = std::chrono::steady_clock::now();
      const dft::ScfResult d = dft::scf(s);
      record("DFT", s, density_diagnostics(d.state.density, n).peak_count, n,
             seconds_since(start));
      start = std::chrono::steady_clock::now();
      const EcgRun r = solve_ecg(s, polarized_settings(n));
      const GridDensity rho = density_of(r, half_width_for(omega, n), 0.02 / std::sqrt(omega));
      record("ECG", s, density_diagnostics(rho, n).peak_count, n, seconds_since(start));
    }
  }
  for (double omega : {1.0, 0.1}) {
    const SystemSpec s = electrons(2, 0.0, omega);
    const auto start = std::chrono::steady_clock::now();
    const EcgRun r = solve_ecg(s, {80, 2, 17});
    const GridDensity rho = density_of(r, half_width_for(omega, 2), 0.02 / std::sqrt(omega));
    record("ECG", s, density_diagnostics(rho, 2).peak_count, omega == 1.0 ? 1 : 2,
           seconds_since(start));
  }
  out.pass = failed == 0;
  out.summary = "density peak counts, " + std::to_string(checks - failed) + "/" +
                std::to_string(checks) + " as expected";
  return out;
}

// ---------------------------------------------------------------------------

// Same evenly spaced single-electron Gaussians in every photon block, sized
// from the classical normal-mode width of the electron coordinate.
struct GridPolariton {
  double energy = 0.0;
  BasisSet basis;
  Vec ground;
};

double electron_width(double omega, const CavitySpec& cavity) {
  Eigen::Matrix2d k;
  k << omega * omega + cavity.lambda * cavity.lambda, cavity.lambda * cavity.omega_p,
      cavity.lambda * cavity.omega_p, cavity.omega_p * cavity.omega_p;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(k);
  const Eigen::Matrix2d inverse_root = es.eigenvectors() *
                                       es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                       es.eigenvectors().transpose();
  return std::sqrt(0.5 * inverse_root(0, 0));
}

GridPolariton grid_polariton(double omega, CavitySpec cavity, int n_max, int centres = 40) {
  cavity.n_max = n_max;
  const double half = 8.0 * electron_width(omega, cavity);
  const double h = 2.0 * half / (centres - 1);
  std::vector<GaussianBasisFunction> set;
  for (int i = 0; i < centres; ++i) {
    GaussianBasisFunction g;
    g.alpha = SmallMat::Zero(1, 1);
    g.beta = SmallVec::Constant(1, 0.4 / (h * h));
    g.shift = SmallVec::Constant(1, -half + i * h);
    set.push_back(g);
  }
  SystemSpec system = electrons(1, 0.5, omega);
  system.cavity = cavity;
  GridPolariton out;
  out.basis = assemble_polaritonic(system, cavity,
                                   std::vector<std::vector<GaussianBasisFunction>>(n_max + 1, set));
  const SpectrumResult r = solve_generalized(out.basis.hamiltonian(), out.basis.overlap());
  out.energy = r.ground_energy();
  out.ground = r.ground_state();
  return out;
}

// Grows n_max until the energy settles to 1e-9 relative.
GridPolariton converged_grid_polariton(double omega, const CavitySpec& cavity, int* n_used) {
  GridPolariton previous = grid_polariton(omega, cavity, 10);
  for (int n_max : {20, 30, 45, 60, 80}) {
    GridPolariton next = grid_polariton(omega, cavity, n_max);
    const bool settled = std::abs(next.energy - previous.energy) <= 1e-9 * std::abs(next.energy);
    previous = std::move(next);
    *n_used = n_max;
    if (settled) break;
  }
  return previous;
}

CavitySpec mode(double omega_p, double lambda, int n_max = 0) {
  CavitySpec c;
  c.omega_p = omega_p;
  c.lambda = lambda;
  c.n_max = n_max;
  return c;
}

Outcome cavity_oracle() {
  Outcome out;
  double worst = 0.0;
  for (double omega : {0.1, 1.0}) {
    for (double omega_p : {0.1, 0.5, 1.0}) {
      for (double lambda : {0.01, 0.1, 1.0}) {
        const auto start = std::chrono::steady_clock::now();
        int n_used = 0;
        const CavitySpec c = mode(omega_p, lambda);
        const GridPolariton g = converged_grid_polariton(omega, c, &n_used);
        const double exact = exact_one_electron_polariton(omega, c);
        const double rel = std::abs(g.energy - exact) / exact;
        detail("%s w=%-3g wp=%-3g lambda=%-4g E=%.10f exact %.10f rel %.1e n_max=%d %.1fs",
               rel <= 1e-6 ? "ok  " : "MISS", omega, omega_p, lambda, g.energy, exact, rel, n_used,
               seconds_since(start));
        worst = std::max(worst, rel);
      }
    }
  }
  if (!(worst <= 1e-6)) out.pass = false;

  // lambda = 0: the cavity adds omega_p / 2 to an optimized electronic basis
  double decoupling = 0.0;
  for (double omega_p : {0.1, 1.0}) {
    const SystemSpec bare = electrons(2, 0.0, 1.0);
    const EcgRun r = solve_ecg(bare, {40, 1, 19});
    std::vector<GaussianBasisFunction> spatial;
    for (const auto& t : r.basis.terms()) spatial.push_back(t.term.gaussian);
    const CavitySpec c = mode(omega_p, 0.0, 2);
    SystemSpec coupled = bare;
    coupled.cavity = c;
    const BasisSet b = assemble_polaritonic(coupled, c, {spatial, spatial, spatial});
    const double e = solve_generalized(b.hamiltonian(), b.overlap()).ground_energy();
    const double diff = std::abs(e - (r.energy + 0.5 * omega_p));
    detail("lambda=0 wp=%g: E=%.14f E_elec+wp/2=%.14f diff %.1e", omega_p, e,
           r.energy + 0.5 * omega_p, diff);
    decoupling = std::max(decoupling, diff);
  }
  if (!(decoupling <= 1e-12 * 4.0)) out.pass = false;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "one-electron polariton, largest relative error %.1e over 18 cases, "
                "lambda=0 decoupling error %.1e",
                worst, decoupling);
  out.summary = buf;
  return out;
}

// ---------------------------------------------------------------------------

Outcome vacuum_weight() {
  Outcome out;
  const double omega = 0.1;
  const CavitySpec c = mode(0.1, 0.1, 30);
  SystemSpec s = electrons(1, 0.5, omega);
  s.cavity = c;
  OptimizerConfig config;
  config.seed = 23;
  TruncationOptions options;
  options.tolerance = 1e-8;
  options.initial_terms = 20;
  options.terms_per_block = 10;
  const auto start = std::chrono::steady_clock::now();
  const TruncationResult t = converge_photon_truncation(s, c, config, options);
  const SpectrumResult r = solve_generalized(t.basis.hamiltonian(), t.basis.overlap());
  const PolaritonicState state = polaritonic_state(t.basis, r.ground_state(), t.n_max + 1);
  const auto p = photon_number_distribution(state);
  detail("SVM: w=%g wp=0.1 lambda=0.1 n_max=%d E=%.10f (exact %.10f) %.1fs", omega, t.n_max,
         r.ground_energy(), exact_one_electron_polariton(omega, c), seconds_since(start));
  detail("P(0..3) = %.5f %.5f %.5f %.5f", p[0], p.size() > 1 ? p[1] : 0.0,
         p.size() > 2 ? p[2] : 0.0, p.size() > 3 ? p[3] : 0.0);

  // weaker traps for reference: the vacuum weight only drops below 1/2 near w = 0.01
  for (double weak : {0.01, 0.001}) {
    int n_used = 0;
    const GridPolariton g = converged_grid_polariton(weak, mode(0.1, 0.1), &n_used);
    const PolaritonicState ws = polaritonic_state(g.basis, g.ground, n_used);
    detail("reference grid basis: w=%g wp=0.1 lambda=0.1 P(0)=%.4f (n_max=%d)", weak,
           ws.block_norms[0], n_used);
  }
  out.pass = p[0] < 0.5;
  char buf[160];
  std::snprintf(buf, sizeof buf, "photon vacuum weight at w=%g wp=0.1 lambda=0.1: P(0)=%.4f", omega,
                p[0]);
  out.summary = buf;
  return out;
}

// ---------------------------------------------------------------------------

struct CavityRun {
  double energy = 0.0;
  int n_max = 0;
  GridDensity density;
};

CavityRun cavity_ecg(int n, double lambda) {
  const double omega = 0.001;
  SystemSpec s = electrons(n, 0.5 * n, omega);
  const double half = 400.0, spacing = 0.1;
  OptimizerConfig config;
  config.seed = 29;
  CavityRun out;
  const auto start = std::chrono::steady_clock::now();
  if (lambda == 0.0) {
    const EcgRun r = solve_ecg(s, {200, 2, 29});
    out.energy = r.energy;
    out.density = density_of(r, half, spacing);
  } else {
    const CavitySpec c = mode(0.5, lambda, 40);
    s.cavity = c;
    TruncationOptions options;
    options.tolerance = 1e-5;
    options.initial_terms = 200;
    options.terms_per_block = 40;
    const TruncationResult t = converge_photon_truncation(s, c, config, options);
    SystemSpec solved = s;
    solved.cavity->n_max = t.n_max + 1;
    const EcgModel model(solved);
    const SpectrumResult r = solve_generalized(t.basis.hamiltonian(), t.basis.overlap());
    const ManyBodyState state = ManyBodyState::from_spectrum(model, t.basis, r);
    out.energy = r.ground_energy();
    out.n_max = t.n_max;
    const int points = static_cast<int>(std::lround(2.0 * half / spacing)) + 1;
    out.density = reduced_density(state, GridDensity::uniform(points, spacing).x);
  }
  detail("N=%d lambda=%g: E=%.6f%s (%.0fs)", n, lambda, out.energy,
         lambda == 0.0 ? "" : (" n_max=" + std::to_string(out.n_max)).c_str(),
         seconds_since(start));
  return out;
}

Outcome light_localization() {
  Outcome out;
  std::string summary = "light-induced localization:";
  for (int n : {3, 4}) {
    const CavityRun free = cavity_ecg(n, 0.0);
    const CavityRun coupled = cavity_ecg(n, 1.0);
    // the trap is harmonic and the cavity sees only the dipole, so the centre
    // of mass separates; with it the coupled energy follows from the free one
    const double separable =
        free.energy - 0.5 * 0.001 +
        exact_one_electron_polariton(0.001, mode(0.5, std::sqrt(static_cast<double>(n))));
    detail("N=%d lambda=1: separable estimate E=%.6f, computed %.6f", n, separable,
           coupled.energy);
    const DensityDiagnostics a = density_diagnostics(free.density, n);
    const DensityDiagnostics b = density_diagnostics(coupled.density, n);
    const double ratio = a.rms_spread / b.rms_spread;
    const bool ok = ratio >= 5.0 && b.peak_count == n;
    detail("%s N=%d: rms spread %.3f -> %.3f (ratio %.3f), peaks %d -> %d", ok ? "ok  " : "MISS", n,
           a.rms_spread, b.rms_spread, ratio, a.peak_count, b.peak_count);
    if (!ok) out.pass = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, " N=%d ratio %.2f peaks %d;", n, ratio, b.peak_count);
    summary += buf;
  }
  summary.pop_back();
  out.summary = summary + " (needed ratio >= 5)";
  return out;
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome properties() {
  Outcome out;
  std::vector<std::string> broken;

  // matrix elements against direct quadrature
  {
    std::mt19937_64 rng(31);
    double worst = 0.0;
    const Confinement trap{ConfinementShape::kQuadratic, 0.7};
    for (int n = 1; n <= 3; ++n) {
      for (int sample = 0; sample < (n == 3 ? 2 : 4); ++sample) {
        const oracle::Ecg f = oracle::random_ecg(rng, n), g = oracle::random_ecg(rng, n);
        const QuadraticForm qf = build_quadratic_form(testing::to_library(f));
        const QuadraticForm qg = build_quadratic_form(testing::to_library(g));
        const double box = 12.0;
        auto quad = [&](auto&& weight) {
          return oracle::integrate(
              [&](std::span<const double> x) { return f(x) * g(x) * weight(x); }, n, -box, box,
              1e-12);
        };
        const double overlap = quad([](std::span<const double>) { return 1.0; });
        const double confinement = quad([&](std::span<const double> x) {
          double v = 0.0;
          for (double xi : x) v += trap.potential(xi);
          return v;
        });
        const double kinetic = oracle::integrate(
            [&](std::span<const double> x) {
              double t = 0.0;
              for (int k = 0; k < n; ++k) t += 0.5 * f.gradient(x, k) * g.gradient(x, k);
              return t;
            },
            n, -box, box, 1e-12);
        const double pairs[][2] = {
            {overlap, spatial_element({PairOperator::kOverlap, 0}, qf, qg)},
            {confinement, spatial_element({PairOperator::kConfineQuadratic, 0.7}, qf, qg)},
            {kinetic, spatial_element({PairOperator::kKinetic, 0}, qf, qg)},
        };
        for (const auto& p : pairs) worst = std::max(worst, testing::relative_error(p[1], p[0]));
        if (n >= 2) {
          const double coulomb = quad([&](std::span<const double> x) {
            double v = 0.0;
            for (int i = 0; i < n; ++i) {
              for (int j = i + 1; j < n; ++j) v += 1.0 / std::sqrt((x[i] - x[j]) * (x[i] - x[j]) + 1);
            }
            return v;
          });
          worst = std::max(worst, testing::relative_error(
                                      spatial_element({PairOperator::kSoftCoulomb, 0}, qf, qg), coulomb));
        }
      }
    }
    detail("matrix elements vs quadrature (N<=3): largest relative deviation %.1e", worst);
    if (!(worst <= 1e-9)) broken.push_back("matrix elements");
  }

  // antisymmetrization against the explicit double permutation sum
  {
    std::mt19937_64 rng(37);
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
      for (int two_s = n % 2; two_s <= n; two_s += 2) {
        const SpinFunction chi = make_spin_function(n, 0.5 * two_s);
        const oracle::Ecg f = testing::conditioned_ecg(rng, chi);
        const oracle::Ecg g = testing::conditioned_ecg(rng, chi);
        for (PairOperator op : {PairOperator::kOverlap, PairOperator::kKinetic,
                                PairOperator::kSoftCoulomb}) {
          const double reference = testing::brute_force(op, 1.0, f, g, chi);
          const double value =
              testing::factorial(n) * antisymmetrized_element({op, 1.0}, testing::to_library(f),
                                                              chi, testing::to_library(g), chi);
          worst = std::max(worst, std::abs(value - reference) / std::max(1.0, std::abs(reference)));
        }
      }
    }
    detail("antisymmetrizer vs brute-force N!^2 sum (N<=4): largest deviation %.1e", worst);
    if (!(worst <= 1e-12)) broken.push_back("antisymmetry");
  }

  // variational monotonicity and density normalization
  {
    for (int n = 1; n <= 4; ++n) {
      const SystemSpec s = electrons(n, n % 2 ? 0.5 : 0.0, 1.0);
      const EcgRun r = solve_ecg(s, {10 + 5 * n, 1, 41});
      const GridDensity rho = density_of(r, 12.0, 0.01);
      const double err = std::abs(rho.integral() - n);
      detail("density normalization %s: |int rho - N| = %.1e", label(s).c_str(), err);
      if (!(err <= 1e-8)) broken.push_back("normalization");
    }
    int bad = 0;
    for (const auto& [name, trace] : trajectories()) {
      if (!non_increasing(trace)) {
        ++bad;
        detail("energy rose along the trajectory of %s", name.c_str());
      }
    }
    detail("variational monotonicity: %zu trajectories, %d violations", trajectories().size(), bad);
    if (bad) broken.push_back("monotonicity");
  }

  // seed determinism of the complete pipeline
  {
    std::istringstream text(
        "[run]\nmethod = ecg\nseed = 43\n[system]\nelectrons = 3\nspin = 0.5\nomega = 1\n"
        "[optimizer]\nbasis_size = 20\nsweeps = 1\n");
    io::RunConfig config = io::parse_run_config(text, "determinism");
    const fs::path dir = fs::temp_directory_path() / "wigner1d_acceptance_determinism";
    std::vector<std::string> first;
    bool identical = true;
    for (int pass = 0; pass < 2; ++pass) {
      fs::remove_all(dir);
      config.output_dir = dir.string();
      app::run(config);
      int i = 0;
      for (const char* file : {"summary.json", "density.csv", "checkpoint.json"}) {
        const std::string bytes = slurp(dir / file);
        if (pass == 0) first.push_back(bytes);
        else identical = identical && bytes == first[i++];
      }
    }
    fs::remove_all(dir);
    detail("repeated run with seed 43: artifacts %s", identical ? "byte-identical" : "DIFFER");
    if (!identical) broken.push_back("determinism");
  }

  out.pass = broken.empty();
  out.summary = "property suites";
  if (!broken.empty()) {
    out.summary += ", failing:";
    for (const auto& b : broken) out.summary += " " + b;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"wigner1d acceptance checks"};
  std::vector<int> selected;
  bool extended = false;
  cli.add_option("criteria", selected, "Criteria to run (default: all)")
      ->check(CLI::Range(1, 9));
  cli.add_flag("--extended", extended, "Run the N = 5, 6 reference energies (hours)");
  CLI11_PARSE(cli, argc, argv);

  const std::map<int, std::function<Outcome()>> criteria = {
      {1, exact_limits},
      {2, energy_contributions},
      {3, [] { return ecg_energies(2, 4, 0.01); }},
      {4, dft_energies},
      {5, peak_counts},
      {6, cavity_oracle},
      {7, vacuum_weight},
      {8, light_localization},
      {9, properties},
  };
  std::set<int> run(selected.begin(), selected.end());
  if (run.empty() && !extended) {
    for (const auto& [id, f] : criteria) run.insert(id);
  }

  int failures = 0;
  auto report = [&](const std::string& id, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("aborted: ") + e.what()};
    }
    std::printf("%s  %-3s %s [%.0fs]\n", o.pass ? "PASS" : "FAIL", id.c_str(), o.summary.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  for (int id : run) report(std::to_string(id), criteria.at(id));
  if (extended) report("3x", [] { return ecg_energies(5, 6, 0.02); });
  return failures == 0 ? 0 : 1;
}
