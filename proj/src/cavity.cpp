// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/cavity.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

constexpr double kEmptyBlock = 1e-14;

SystemSpec with_cavity(SystemSpec system, const CavitySpec& cavity) {
  if (system.cavity) {
    const auto& c = *system.cavity;
    if (c.omega_p != cavity.omega_p || c.lambda != cavity.lambda) {
      throw UsageError("system cavity parameters disagree with the requested cavity");
    }
  }
  system.cavity = cavity;
  system.validate();
  return system;
}

}  // namespace

double exact_one_electron_polariton(double omega, const CavitySpec& cavity) {
  const double l = cavity.lambda;
  const double wp = cavity.omega_p;
  Eigen::Matrix2d m;
  m << omega * omega + l * l, l * wp, l * wp, wp * wp;
  const Eigen::Vector2d mu = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
  return 0.5 * (std::sqrt(std::max(0.0, mu(0))) + std::sqrt(std::max(0.0, mu(1))));
}

BasisSet assemble_polaritonic(const SystemSpec& system, const CavitySpec& cavity,
                              const std::vector<std::vector<GaussianBasisFunction>>& per_block_bases) {
  cavity.validate();
  if (static_cast<int>(per_block_bases.size()) != cavity.n_max + 1) {
    std::ostringstream msg;
    msg << "expected " << cavity.n_max + 1 << " photon blocks, got " << per_block_bases.size();
    throw UsageError(msg.str());
  }
  const SystemSpec spec = with_cavity(system, cavity);
  std::vector<BasisTerm> terms;
  for (int n = 0; n <= cavity.n_max; ++n) {
    for (const auto& g : per_block_bases[n]) {
      if (g.beta.size() != spec.electrons) {
        throw UsageError("photon block basis function has the wrong particle count");
      }
      terms.push_back({g, n});
    }
  }
  return BasisSet::assemble(EcgModel(spec), terms);
}

PolaritonicState polaritonic_state(const BasisSet& basis, const Vec& c, int n_max) {
  if (c.size() != basis.size()) throw UsageError("coefficient vector length mismatch");
  const double norm = c.dot(basis.overlap() * c);
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "polaritonic state is not normalized (norm " << norm << ")";
    throw UsageError(msg.str());
  }
  PolaritonicState state;
  state.block_norms.assign(n_max + 1, 0.0);
  state.block_energies.assign(n_max + 1, 0.0);
  for (int i = 0; i < basis.size(); ++i) {
    const int n = basis.term(i).term.photon;
    if (n > n_max) throw UsageError("basis term beyond the photon truncation");
    for (int j = 0; j < basis.size(); ++j) {
      if (basis.term(j).term.photon != n) continue;
      state.block_norms[n] += c(i) * basis.overlap()(i, j) * c(j);
      state.block_energies[n] += c(i) * basis.hamiltonian()(i, j) * c(j);
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    if (state.block_norms[n] > kEmptyBlock) state.block_energies[n] /= state.block_norms[n];
    else state.block_energies[n] = 0.0;
  }
  state.energy = c.dot(basis.hamiltonian() * c);
  return state;
}

std::vector<double> photon_number_distribution(const PolaritonicState& state) {
  return state.block_norms;
}

TruncationResult converge_photon_truncation(const SystemSpec& system, const CavitySpec& cavity,
                                            const OptimizerConfig& config,
                                            const TruncationOptions& options) {
  if (!(options.tolerance > 0.0)) throw UsageError("truncation tolerance must be positive");
  if (options.ceiling < 0 || options.initial_terms < 1 || options.terms_per_block < 1) {
    throw UsageError("invalid photon truncation options");
  }
  TruncationResult result;
  for (int n_max = 0; n_max <= options.ceiling + 1; ++n_max) {
    CavitySpec stage = cavity;
    stage.n_max = n_max;
    const EcgModel model(with_cavity(system, stage));
    OptimizerConfig stage_config = config;
    stage_config.seed = config.seed + static_cast<std::uint64_t>(n_max);
    StochasticOptimizer optimizer(model, stage_config);
    optimizer.restrict_photons(n_max, n_max);
    const int target =
        result.basis.size() + (n_max == 0 ? options.initial_terms : options.terms_per_block);
    optimizer.grow(result.basis, target);
    result.energies.push_back(optimizer.spectrum(result.basis).ground_energy());
    if (n_max > 0) {
      const double gain = result.energies[n_max - 1] - result.energies[n_max];
      if (gain < options.tolerance) {
        result.n_max = n_max - 1;
        return result;
      }
    }
  }
  std::ostringstream msg;
  msg.precision(12);
  msg << "photon truncation not converged up to n_max=" << options.ceiling << "; E0 trace:";
  for (double e : result.energies) msg << ' ' << e;
  throw ConvergenceError(msg.str());
}

}  // namespace wigner
