// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/observables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {

EnergyBreakdown energy_decomposition(const BasisSet& basis, const Vec& c) {
  if (c.size() != basis.size()) throw UsageError("coefficient vector length mismatch");
  const double norm = c.dot(basis.overlap() * c);
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "energy decomposition needs a normalized state (norm " << norm << ")";
    throw UsageError(msg.str());
  }
  EnergyBreakdown e;
  e.kinetic = c.dot(basis.kinetic() * c);
  e.coulomb = c.dot(basis.coulomb() * c);
  e.confinement = c.dot(basis.confinement() * c);
  e.total = c.dot(basis.hamiltonian() * c);
  return e;
}

namespace {

double interpolate(const GridDensity& rho, double x) {
  const double x0 = rho.x.front();
  const double dx = rho.spacing();
  const double pos = (x - x0) / dx;
  if (pos < 0.0 || pos > rho.size() - 1) return 0.0;
  const int k = std::min(rho.size() - 2, static_cast<int>(pos));
  const double f = pos - k;
  return (1.0 - f) * rho.total[k] + f * rho.total[k + 1];
}

}  // namespace

DensityDiagnostics density_diagnostics(const GridDensity& rho, double expected_count) {
  const int n = rho.size();
  if (n < 3 || static_cast<int>(rho.total.size()) != n) {
    throw UsageError("density diagnostics need at least three grid points");
  }
  DensityDiagnostics d;
  d.integral = rho.integral();
  if (!(d.integral > 0.0)) throw UsageError("empty density");
  if (expected_count > 0.0 && std::abs(d.integral - expected_count) > 1e-6 * expected_count) {
    std::ostringstream msg;
    msg << "density integrates to " << d.integral << ", expected " << expected_count;
    throw UsageError(msg.str());
  }
  const double dx = rho.spacing();
  const double peak_floor = 1e-6 * *std::max_element(rho.total.begin(), rho.total.end());
  for (int k = 1; k + 1 < n; ++k) {
    const double l = rho.total[k - 1], c = rho.total[k], r = rho.total[k + 1];
    if (c > l && c > r && c > peak_floor) {
      const double curvature = l - 2.0 * c + r;
      const double offset = curvature != 0.0 ? 0.5 * (l - r) / curvature : 0.0;
      d.peak_positions.push_back(rho.x[k] + offset * dx);
    }
  }
  d.peak_count = static_cast<int>(d.peak_positions.size());

  double m1 = 0.0, m2 = 0.0;
  for (int k = 0; k < n; ++k) {
    m1 += rho.x[k] * rho.total[k];
    m2 += rho.x[k] * rho.x[k] * rho.total[k];
  }
  m1 *= dx / d.integral;
  m2 *= dx / d.integral;
  d.rms_spread = std::sqrt(std::max(0.0, m2 - m1 * m1));

  for (int k = 0; k < n; ++k) {
    d.symmetry_defect = std::max(d.symmetry_defect, std::abs(rho.total[k] - interpolate(rho, -rho.x[k])));
  }
  return d;
}

ComparisonReport compare_report(const GridDensity& first, const GridDensity& second) {
  if (!first.same_grid(second, 1e-9)) throw UsageError("densities live on different grids");
  ComparisonReport report;
  for (int k = 0; k < first.size(); ++k) {
    report.l1_distance += std::abs(first.total[k] - second.total[k]);
  }
  report.l1_distance *= first.spacing();

  const auto a = density_diagnostics(first).peak_positions;
  const auto b = density_diagnostics(second).peak_positions;
  report.first_peaks = static_cast<int>(a.size());
  report.second_peaks = static_cast<int>(b.size());
  if (a.size() == b.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) report.matches.push_back({a[i], b[i], b[i] - a[i]});
  } else if (!b.empty()) {
    for (double p : a) {
      const auto nearest = std::min_element(b.begin(), b.end(), [p](double u, double v) {
        return std::abs(u - p) < std::abs(v - p);
      });
      report.matches.push_back({p, *nearest, *nearest - p});
    }
  }
  return report;
}

}  // namespace wigner
