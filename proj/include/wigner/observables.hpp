// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "wigner/basis.hpp"
#include "wigner/density.hpp"

namespace wigner {

/// Expectation values of the three terms of the electronic Hamiltonian.
struct EnergyBreakdown {
  double kinetic = 0.0;
  double coulomb = 0.0;
  double confinement = 0.0;
  double total = 0.0;  // <H> of the full (possibly polaritonic) Hamiltonian
};

/// coefficients must satisfy c^T S c = 1 (UsageError otherwise, 1e-10).
EnergyBreakdown energy_decomposition(const BasisSet& basis, const Vec& coefficients);

struct DensityDiagnostics {
  std::vector<double> peak_positions;
  int peak_count = 0;
  double rms_spread = 0.0;
  double symmetry_defect = 0.0;  // max |rho(x) - rho(-x)|
  double integral = 0.0;
};

/// Peak finder and moments. Peaks are strict interior local maxima above
/// 1e-6 max(rho), located to sub-grid accuracy by a parabola through the
/// three surrounding points. If expected_count > 0 the density must integrate
/// to it within 1e-6 relative.
DensityDiagnostics density_diagnostics(const GridDensity& rho, double expected_count = 0.0);

struct PeakMatch {
  double first = 0.0;
  double second = 0.0;
  double displacement = 0.0;
};

struct ComparisonReport {
  double l1_distance = 0.0;
  int first_peaks = 0;
  int second_peaks = 0;
  std::vector<PeakMatch> matches;
};

/// L1 distance and peak alignment of two densities on the same grid.
ComparisonReport compare_report(const GridDensity& first, const GridDensity& second);

}  // namespace wigner
