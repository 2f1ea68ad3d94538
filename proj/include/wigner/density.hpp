// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "wigner/basis.hpp"
#include "wigner/eigensolver.hpp"

namespace wigner {

/// Per-spin and total one-body densities on a uniform 1D grid.
struct GridDensity {
  std::vector<double> x;
  std::vector<double> total;
  std::vector<double> up;
  std::vector<double> down;

  /// n points with the given spacing, symmetric about the origin.
  static GridDensity uniform(int points, double spacing);

  int size() const { return static_cast<int>(x.size()); }
  double spacing() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
  /// sum_k rho_k * dx
  double integral() const;
  bool same_grid(const GridDensity& other, double tolerance = 1e-12) const;
};

/// Linear combination of normalized antisymmetrized basis terms. For cavity
/// systems the terms carry their photon block.
struct ManyBodyState {
  EcgModel model;
  std::vector<PreparedTerm> terms;
  Vec coefficients;

  /// Eigenvector `index` of the spectrum, rescaled to unit norm.
  static ManyBodyState from_spectrum(const EcgModel& model, const BasisSet& basis,
                                     const SpectrumResult& spectrum, int index = 0);
  double norm(const BasisSet& basis) const;
};

/// rho(x) = N int |Psi(x, x_2, ..., x_N)|^2, spin-resolved, summed over photon
/// blocks. Every (bra, ket, permutation) product contributes one Gaussian in
/// x per particle, obtained by marginalizing the merged Gaussian.
/// Throws UsageError if the state norm differs from 1 by more than 1e-10.
GridDensity reduced_density(const ManyBodyState& state, std::span<const double> grid);

}  // namespace wigner
