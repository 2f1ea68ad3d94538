// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wigner/permutation.hpp"

namespace wigner {

/// Total-spin eigenfunction with S_z = S, expanded over primitive up/down
/// products. A configuration is a bitmask: bit i set means electron i is up.
struct SpinFunction {
  int n_electrons = 0;
  double total_spin = 0.0;
  double sz = 0.0;
  std::vector<std::pair<std::uint32_t, double>> terms;

  /// Dense coefficient vector over all 2^N configurations.
  std::vector<double> dense() const;
  double norm_squared() const;
};

/// Intermediate spins s_1..s_N of the fixed coupling path used for (N, S):
/// the first N - 2S electrons are paired into successive singlets
/// (1/2, 0, 1/2, 0, ...), the rest are stacked to the maximal spin.
std::vector<double> coupling_path(int n_electrons, double total_spin);

/// Builds chi_S by sequential Clebsch-Gordan coupling along coupling_path.
SpinFunction make_spin_function(int n_electrons, double total_spin);

/// Applies the total S^2 operator, written as 3N/4 - N(N-1)/4 + sum_{i<j} P_ij.
std::vector<double> apply_s_squared(const SpinFunction& chi);

/// <chi_bra | P chi_ket>, contracted in the orthonormal primitive basis.
double spin_overlap(const SpinFunction& bra, const Permutation& perm,
                    const SpinFunction& ket);

/// <chi_bra | n_up(slot) P chi_ket>: same contraction restricted to bra
/// configurations where electron `slot` is up.
double spin_overlap_up(const SpinFunction& bra, const Permutation& perm,
                       const SpinFunction& ket, int slot);

}  // namespace wigner
