// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "wigner/basis.hpp"
#include "wigner/svm.hpp"

namespace wigner {

/// Closed-form ground energy of one electron in a harmonic trap coupled to a
/// single cavity mode: 1/2 (sqrt(mu_1) + sqrt(mu_2)) with mu_i the eigenvalues
/// of [[omega^2 + lambda^2, lambda omega_p], [lambda omega_p, omega_p^2]].
double exact_one_electron_polariton(double omega, const CavitySpec& cavity);

/// Basis over photon blocks 0..n_max; per_block_bases[n] holds the spatial
/// functions attached to |n>. The system's cavity must match `cavity`.
BasisSet assemble_polaritonic(const SystemSpec& system, const CavitySpec& cavity,
                              const std::vector<std::vector<GaussianBasisFunction>>& per_block_bases);

/// Photon-resolved view of a normalized polaritonic state. Different photon
/// blocks are orthogonal, so the block norms are probabilities.
struct PolaritonicState {
  std::vector<double> block_norms;
  /// <psi_n|H_nn|psi_n> / P(n), or 0 where P(n) <= 1e-14 and the ratio is noise
  std::vector<double> block_energies;
  double energy = 0.0;
};

/// coefficients must be S-normalized (UsageError beyond 1e-10).
PolaritonicState polaritonic_state(const BasisSet& basis, const Vec& coefficients, int n_max);

std::vector<double> photon_number_distribution(const PolaritonicState& state);

struct TruncationOptions {
  double tolerance = 1e-6;
  int ceiling = 30;           // largest n_max tried
  int initial_terms = 60;     // basis size of the n_max = 0 problem
  int terms_per_block = 20;   // terms added with each new photon block
};

struct TruncationResult {
  int n_max = 0;
  /// E0 of the problems with n_max = 0, 1, ..., n_max + 1
  std::vector<double> energies;
  /// basis of the largest problem solved (photon blocks 0..n_max + 1)
  BasisSet basis;
};

/// Smallest n_max for which adding block n_max + 1 lowers E0 by less than
/// `tolerance`. Each stage keeps the previous basis and grows only the new
/// block, so the energy sequence is non-increasing. Throws ConvergenceError
/// (with the energy trace) when the ceiling is reached.
TruncationResult converge_photon_truncation(const SystemSpec& system, const CavitySpec& cavity,
                                            const OptimizerConfig& config,
                                            const TruncationOptions& options);

}  // namespace wigner
