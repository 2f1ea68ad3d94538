// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/dft.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner::dft {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDensityFloor = 1e-14;

struct PzParameters {
  double gamma, beta1, beta2, a, b, c, d;
};

constexpr PzParameters kUnpolarized{-0.1423, 1.0529, 0.3334, 0.0311, -0.048, 0.0020, -0.0116};
constexpr PzParameters kPolarized{-0.0843, 1.3981, 0.2611, 0.01555, -0.0269, 0.0007, -0.0048};

struct Channel {
  Mat orbitals;
  std::vector<double> eigenvalues;
  std::vector<double> density;
};

// Lowest `count` eigenpairs of -1/2 d^2/dx^2 + v with a three-point stencil
// and Dirichlet walls just outside the grid.
Channel solve_channel(const std::vector<double>& v, double h, int count) {
  const int n = static_cast<int>(v.size());
  Channel out;
  out.density.assign(n, 0.0);
  if (count == 0) return out;
  std::vector<double> diag(n), off(n - 1, -0.5 / (h * h));
  for (int k = 0; k < n; ++k) diag[k] = 1.0 / (h * h) + v[k];
  std::vector<double> w(n);
  Mat z(n, count);
  std::vector<lapack_int> support(2 * count);
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), off.data(), 0.0, 0.0, 1, count,
                     0.0, &found, w.data(), z.data(), n, support.data());
  if (info != 0 || found != count) {
    std::ostringstream msg;
    msg << "tridiagonal eigensolver failed (info " << info << ")";
    throw NumericalError(msg.str());
  }
  const double scale = 1.0 / std::sqrt(h);
  out.orbitals = z * scale;
  for (int i = 0; i < count; ++i) {
    // fixed sign convention: largest-magnitude entry positive
    Eigen::Index arg = 0;
    out.orbitals.col(i).cwiseAbs().maxCoeff(&arg);
    if (out.orbitals(arg, i) < 0.0) out.orbitals.col(i) *= -1.0;
    out.eigenvalues.push_back(w[i]);
    for (int k = 0; k < n; ++k) out.density[k] += out.orbitals(k, i) * out.orbitals(k, i);
  }
  return out;
}

struct Potentials {
  std::vector<double> up;
  std::vector<double> down;
  std::vector<double> hartree;
  XcResult xc;
};

Potentials build_potentials(const std::vector<double>& trap, const std::vector<double>& rho_up,
                            const std::vector<double>& rho_down, double h, bool interacting) {
  const int n = static_cast<int>(trap.size());
  Potentials p;
  p.up = trap;
  p.down = trap;
  if (!interacting) {
    p.hartree.assign(n, 0.0);
    p.xc.v_up.assign(n, 0.0);
    p.xc.v_down.assign(n, 0.0);
    p.xc.energy_density.assign(n, 0.0);
    return p;
  }
  std::vector<double> rho(n);
  for (int k = 0; k < n; ++k) rho[k] = rho_up[k] + rho_down[k];
  p.hartree = hartree_potential(rho, h);
  p.xc = lda_xc(rho_up, rho_down, h);
  for (int k = 0; k < n; ++k) {
    p.up[k] += p.hartree[k] + p.xc.v_up[k];
    p.down[k] += p.hartree[k] + p.xc.v_down[k];
  }
  return p;
}

struct Attempt {
  bool converged = false;
  ScfResult result;
};

Attempt run_scf(const SystemSpec& system, const Grid1D& grid, const ScfOptions& options,
                double mixing) {
  const auto x = grid.coordinates();
  const int n = grid.points;
  const double h = grid.spacing;
  const int n_up = system.spin_up();
  const int n_down = system.spin_down();
  const bool interacting = system.coulomb;

  std::vector<double> trap(n);
  for (int k = 0; k < n; ++k) trap[k] = system.confinement.potential(x[k]);

  Attempt attempt;
  ScfResult& r = attempt.result;
  r.mixing = mixing;

  // start from the non-interacting density
  std::vector<double> rho_up = solve_channel(trap, h, n_up).density;
  std::vector<double> rho_down = solve_channel(trap, h, n_down).density;

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const Potentials pot = build_potentials(trap, rho_up, rho_down, h, interacting);
    Channel up = solve_channel(pot.up, h, n_up);
    Channel down = solve_channel(pot.down, h, n_down);
    double residual = 0.0;
    for (int k = 0; k < n; ++k) {
      residual = std::max({residual, std::abs(up.density[k] - rho_up[k]),
                           std::abs(down.density[k] - rho_down[k])});
    }
    r.residuals.push_back(residual);
    r.iterations = iter;
    if (!std::isfinite(residual)) return attempt;
    if (residual < options.tolerance) {
      double band = 0.0;
      for (double e : up.eigenvalues) band += e;
      for (double e : down.eigenvalues) band += e;
      double double_counting = 0.0;
      for (int k = 0; k < n; ++k) {
        const double rho = rho_up[k] + rho_down[k];
        double_counting += 0.5 * rho * pot.hartree[k] + rho_up[k] * pot.xc.v_up[k] +
                           rho_down[k] * pot.xc.v_down[k];
      }
      r.energy = band - double_counting * h + pot.xc.energy;

      r.state.orbitals_up = std::move(up.orbitals);
      r.state.orbitals_down = std::move(down.orbitals);
      r.state.eigenvalues_up = std::move(up.eigenvalues);
      r.state.eigenvalues_down = std::move(down.eigenvalues);
      GridDensity& d = r.state.density;
      d.x = x;
      d.up = std::move(up.density);
      d.down = std::move(down.density);
      d.total.resize(n);
      for (int k = 0; k < n; ++k) d.total[k] = d.up[k] + d.down[k];
      attempt.converged = true;
      return attempt;
    }
    for (int k = 0; k < n; ++k) {
      rho_up[k] += mixing * (up.density[k] - rho_up[k]);
      rho_down[k] += mixing * (down.density[k] - rho_down[k]);
    }
  }
  return attempt;
}

}  // namespace

std::vector<double> Grid1D::coordinates() const {
  validate();
  std::vector<double> x(points);
  const double centre = 0.5 * (points - 1);
  for (int k = 0; k < points; ++k) x[k] = (k - centre) * spacing;
  return x;
}

void Grid1D::validate() const {
  if (points < 3) throw UsageError("grid needs at least three points");
  if (!(spacing > 0.0)) throw UsageError("grid spacing must be positive");
}

std::vector<double> hartree_potential(std::span<const double> rho, double spacing) {
  const int n = static_cast<int>(rho.size());
  std::vector<double> kernel(n);
  for (int d = 0; d < n; ++d) {
    const double r = d * spacing;
    kernel[d] = spacing / std::sqrt(r * r + 1.0);
  }
  std::vector<double> v(n, 0.0);
  for (int k = 0; k < n; ++k) {
    double sum = 0.0;
    for (int l = 0; l < n; ++l) sum += kernel[std::abs(k - l)] * rho[l];
    v[k] = sum;
  }
  return v;
}

CorrelationPoint pz_correlation(double rs, bool polarized) {
  const PzParameters& p = polarized ? kPolarized : kUnpolarized;
  CorrelationPoint c;
  if (rs >= 1.0) {
    const double sq = std::sqrt(rs);
    const double denom = 1.0 + p.beta1 * sq + p.beta2 * rs;
    c.energy = p.gamma / denom;
    c.potential = p.gamma * (1.0 + 7.0 / 6.0 * p.beta1 * sq + 4.0 / 3.0 * p.beta2 * rs) / (denom * denom);
  } else {
    const double lr = std::log(rs);
    c.energy = p.a * lr + p.b + p.c * rs * lr + p.d * rs;
    c.potential = p.a * lr + (p.b - p.a / 3.0) + 2.0 / 3.0 * p.c * rs * lr +
                  (2.0 * p.d - p.c) / 3.0 * rs;
  }
  return c;
}

double lsda_exchange_per_particle(double rho_up, double rho_down) {
  const double rho = rho_up + rho_down;
  if (rho <= kDensityFloor) return 0.0;
  const double cx = 0.75 * std::cbrt(3.0 / kPi);
  return -cx * (std::pow(2.0 * rho_up, 4.0 / 3.0) + std::pow(2.0 * rho_down, 4.0 / 3.0)) / (2.0 * rho);
}

XcResult lda_xc(std::span<const double> rho_up, std::span<const double> rho_down, double spacing) {
  if (rho_up.size() != rho_down.size()) throw UsageError("spin densities differ in length");
  const int n = static_cast<int>(rho_up.size());
  XcResult out;
  out.v_up.assign(n, 0.0);
  out.v_down.assign(n, 0.0);
  out.energy_density.assign(n, 0.0);
  const double f_norm = std::pow(2.0, 4.0 / 3.0) - 2.0;
  for (int k = 0; k < n; ++k) {
    const double up = std::max(0.0, rho_up[k]);
    const double down = std::max(0.0, rho_down[k]);
    const double rho = up + down;
    if (rho <= kDensityFloor) continue;
    const double rs = std::cbrt(3.0 / (4.0 * kPi * rho));
    const double zeta = std::clamp((up - down) / rho, -1.0, 1.0);
    const CorrelationPoint u = pz_correlation(rs, false);
    const CorrelationPoint p = pz_correlation(rs, true);
    const double f = (std::pow(1.0 + zeta, 4.0 / 3.0) + std::pow(1.0 - zeta, 4.0 / 3.0) - 2.0) / f_norm;
    const double df = 4.0 / 3.0 * (std::cbrt(1.0 + zeta) - std::cbrt(1.0 - zeta)) / f_norm;
    const double eps_c = u.energy + f * (p.energy - u.energy);
    const double common = u.potential + f * (p.potential - u.potential);
    const double dzeta = df * (p.energy - u.energy);

    out.v_up[k] = -std::cbrt(6.0 * up / kPi) + common - (zeta - 1.0) * dzeta;
    out.v_down[k] = -std::cbrt(6.0 * down / kPi) + common - (zeta + 1.0) * dzeta;
    out.energy_density[k] = rho * (lsda_exchange_per_particle(up, down) + eps_c);
    out.energy += out.energy_density[k];
  }
  out.energy *= spacing;
  return out;
}

ScfResult scf(const SystemSpec& system, const Grid1D& grid, const ScfOptions& options) {
  system.validate();
  grid.validate();
  if (system.cavity) throw UsageError("the Kohn-Sham solver has no cavity coupling");
  if (!(options.mixing > 0.0 && options.mixing <= 1.0)) throw UsageError("mixing must be in (0, 1]");
  if (!(options.tolerance > 0.0) || options.max_iterations < 1 || options.mixing_retries < 0) {
    throw UsageError("invalid SCF options");
  }
  if (std::max(system.spin_up(), system.spin_down()) > grid.points) {
    throw UsageError("more orbitals than grid points");
  }
  double mixing = options.mixing;
  Attempt attempt;
  for (int tries = 0; tries <= options.mixing_retries; ++tries, mixing *= 0.5) {
    attempt = run_scf(system, grid, options, mixing);
    if (attempt.converged) return std::move(attempt.result);
  }
  std::ostringstream msg;
  msg << "SCF not converged after " << options.max_iterations << " iterations at mixing "
      << 2.0 * mixing << "; residual history (every 100th):";
  const auto& res = attempt.result.residuals;
  for (std::size_t i = 0; i < res.size(); i += 100) msg << ' ' << res[i];
  if (!res.empty()) msg << " last " << res.back();
  throw ConvergenceError(msg.str());
}

}  // namespace wigner::dft
