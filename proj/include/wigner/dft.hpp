// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "wigner/density.hpp"
#include "wigner/linalg.hpp"
#include "wigner/system.hpp"

namespace wigner::dft {

/// Uniform grid centred on the origin: x_k = (k - (n-1)/2) h. The box edges
/// act as hard walls.
struct Grid1D {
  int points = 400;
  double spacing = 0.1;

  std::vector<double> coordinates() const;
  void validate() const;
};

/// V_H(x_k) = sum_l rho_l / sqrt((x_k - x_l)^2 + 1) h
std::vector<double> hartree_potential(std::span<const double> rho, double spacing);

/// Perdew-Zunger correlation energy per particle and its potential
/// eps_c - (r_s/3) d eps_c / d r_s for the unpolarized or fully polarized gas.
struct CorrelationPoint {
  double energy = 0.0;
  double potential = 0.0;
};
CorrelationPoint pz_correlation(double rs, bool polarized);

/// Exchange energy per particle of the local spin density.
double lsda_exchange_per_particle(double rho_up, double rho_down);

struct XcResult {
  std::vector<double> v_up;
  std::vector<double> v_down;
  std::vector<double> energy_density;  // rho * eps_xc
  double energy = 0.0;                 // sum_k energy_density_k h
};

/// Local spin-density exchange plus spin-interpolated Perdew-Zunger
/// correlation, evaluated pointwise. Zero density gives zero potential.
XcResult lda_xc(std::span<const double> rho_up, std::span<const double> rho_down, double spacing);

struct KohnShamState {
  Mat orbitals_up;  // columns normalized so that sum_k phi_k^2 h = 1
  Mat orbitals_down;
  std::vector<double> eigenvalues_up;
  std::vector<double> eigenvalues_down;
  GridDensity density;
};

struct ScfOptions {
  double mixing = 0.3;
  double tolerance = 1e-8;  // on max |rho_out - rho_in|
  int max_iterations = 5000;
  /// attempts with the mixing halved after a non-converged run
  int mixing_retries = 2;
};

struct ScfResult {
  double energy = 0.0;
  KohnShamState state;
  int iterations = 0;
  double mixing = 0.0;  // value that converged
  std::vector<double> residuals;
};

/// Spin-polarized Kohn-Sham LDA ground state. With system.coulomb false the
/// Hartree and exchange-correlation terms are dropped. Throws ConvergenceError
/// carrying the residual history when every mixing attempt fails.
ScfResult scf(const SystemSpec& system, const Grid1D& grid = {}, const ScfOptions& options = {});

}  // namespace wigner::dft
