// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "wigner/gaussian.hpp"
#include "wigner/spin.hpp"
#include "wigner/system.hpp"

namespace wigner {

enum class PairOperator {
  kOverlap,
  kKinetic,
  kConfineQuadratic,
  kConfineQuartic,
  kSoftCoulomb,
  kDipole,         // X = sum_i q_i x_i with q_i = -1
  kDipoleSquared,  // X^2
};

struct PairOperatorKind {
  PairOperator op = PairOperator::kOverlap;
  double omega = 0.0;  // confinement strength for the two trap kinds
};

/// One permutation of the antisymmetrizer together with its spin factor.
struct PermutationTerm {
  Permutation perm;
  /// sign(P) <chi | P chi>
  double coefficient = 0.0;
  /// sign(P) <chi | n_up(i) P chi>; sums to coefficient over a full
  /// up+down split and drives the spin-resolved densities.
  SmallVec up_weight;
};

/// Antisymmetrizer restricted to permutations with a nonzero spin factor.
/// Antisymmetrization is applied to the ket only; with a symmetric operator
/// O, <A f chi | O | A g chi> = N! <f chi | O | A g chi>, and the constant is
/// absorbed by normalizing every basis term.
class Antisymmetrizer {
 public:
  explicit Antisymmetrizer(SpinFunction chi);

  const SpinFunction& spin() const { return spin_; }
  int particles() const { return spin_.n_electrons; }
  std::span<const PermutationTerm> terms() const { return terms_; }

 private:
  SpinFunction spin_;
  std::vector<PermutationTerm> terms_;
};

/// Which pieces antisymmetrized_bundle should compute.
struct ElementRequest {
  bool kinetic = true;
  bool confinement = true;
  bool coulomb = true;
  bool dipole = false;
  bool dipole_squared = false;
  Confinement trap;
};

/// Antisymmetrized matrix elements scaled by exp(-log_scale). The electron
/// repulsion and the trap are summed over all pairs and particles.
struct ElementBundle {
  double overlap = 0.0;
  double kinetic = 0.0;
  double confinement = 0.0;
  double coulomb = 0.0;
  double dipole = 0.0;
  double dipole_squared = 0.0;
};

ElementBundle antisymmetrized_bundle(const QuadraticForm& bra, const QuadraticForm& ket,
                                     const Antisymmetrizer& antisym,
                                     const ElementRequest& request, double log_scale);

/// log of the direct (identity permutation) overlap; a convenient scale.
double log_direct_overlap(const QuadraticForm& bra, const QuadraticForm& ket);

/// Single operator between antisymmetrized, spin-coupled terms, unnormalized:
///   sum_P sign(P) <chi_bra | P chi_ket> <f_bra | O | P f_ket>.
double antisymmetrized_element(const PairOperatorKind& kind,
                               const GaussianBasisFunction& bra,
                               const SpinFunction& bra_spin,
                               const GaussianBasisFunction& ket,
                               const SpinFunction& ket_spin);

/// Spatial (non-antisymmetrized) element of one operator kind.
double spatial_element(const PairOperatorKind& kind, const QuadraticForm& bra,
                       const QuadraticForm& ket);

}  // namespace wigner
