// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "wigner/linalg.hpp"

namespace wigner {

struct SpectrumResult {
  Vec energies;       // ascending
  Mat coefficients;   // columns are S-orthonormal eigenvectors
  int discarded = 0;  // overlap directions dropped by the cutoff

  double ground_energy() const { return energies(0); }
  Vec ground_state() const { return coefficients.col(0); }
};

/// Solves H c = E S c by canonical orthogonalization: overlap eigenvectors
/// with eigenvalue below cutoff * max are discarded before diagonalizing
/// the transformed H. Throws NumericalError if nothing survives.
SpectrumResult solve_generalized(const Mat& h, const Mat& s, double cutoff = 1e-10);

/// max_i |H c_i - E_i S c_i| / |H c_i| over the lowest `states` eigenpairs
/// (all of them when negative).
double generalized_residual(const Mat& h, const Mat& s, const SpectrumResult& result,
                            int states = -1);

/// Lowest eigenvalue after bordering a solved problem with one extra
/// normalized-or-not function. Exact rank-one extension: the new function is
/// orthogonalized against the current eigenvectors and the resulting
/// arrowhead matrix is solved through its secular equation.
class BorderedSpectrum {
 public:
  explicit BorderedSpectrum(const SpectrumResult& base);
  BorderedSpectrum() = default;

  /// h_col / s_col: couplings to the current basis; h_self / s_self: diagonal.
  /// Returns nullopt when the residual norm of the new function falls below
  /// dependence_cutoff * s_self.
  std::optional<double> lowest(const Vec& h_col, const Vec& s_col, double h_self,
                               double s_self, double dependence_cutoff) const;

 private:
  Vec energies_;
  Mat coefficients_;
};

}  // namespace wigner
