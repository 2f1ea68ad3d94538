// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "wigner/antisymmetrizer.hpp"
#include "wigner/system.hpp"

namespace wigner {

/// A spatial ECG plus the photon number of the Fock block it lives in
/// (always 0 for purely electronic runs).
struct BasisTerm {
  GaussianBasisFunction gaussian;
  int photon = 0;
};

/// Basis term with its cached quadratic form and log normalization, so that
/// the antisymmetrized term divided by exp(log_norm) has unit self-overlap.
struct PreparedTerm {
  BasisTerm term;
  QuadraticForm form;
  double log_norm = 0.0;
};

/// Pieces of one Hamiltonian matrix element between normalized terms.
struct MatrixElements {
  double overlap = 0.0;
  double kinetic = 0.0;
  double confinement = 0.0;
  double coulomb = 0.0;
  double dipole_self = 0.0;  // 1/2 lambda^2 X^2
  double photon = 0.0;       // omega_p (n + 1/2) on the diagonal blocks
  double coupling = 0.0;     // bilinear n <-> n+-1 term

  double hamiltonian() const {
    return kinetic + confinement + coulomb + dipole_self + photon + coupling;
  }
};

/// Electronic (optionally polaritonic) Hamiltonian over antisymmetrized,
/// spin-coupled ECG terms.
class EcgModel {
 public:
  /// Antisymmetrized self-overlap relative to the direct one below which a
  /// term counts as Pauli-vanishing.
  static constexpr double kDefaultMinNormRatio = 1e-8;

  explicit EcgModel(SystemSpec system);

  const SystemSpec& system() const { return system_; }
  const Antisymmetrizer& antisymmetrizer() const { return antisym_; }
  int particles() const { return system_.electrons; }
  int photon_max() const { return system_.cavity ? system_.cavity->n_max : 0; }

  /// Throws RejectedTerm for terms that cannot be normalized.
  PreparedTerm prepare(BasisTerm term,
                       double min_norm_ratio = kDefaultMinNormRatio) const;

  MatrixElements element(const PreparedTerm& bra, const PreparedTerm& ket) const;

 private:
  SystemSpec system_;
  Antisymmetrizer antisym_;
};

/// Ordered basis with the cached normalized matrices it induces.
class BasisSet {
 public:
  int size() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }
  const std::vector<PreparedTerm>& terms() const { return terms_; }
  const PreparedTerm& term(int k) const { return terms_[k]; }

  const Mat& overlap() const { return overlap_; }
  const Mat& hamiltonian() const { return hamiltonian_; }
  const Mat& kinetic() const { return kinetic_; }
  const Mat& confinement() const { return confinement_; }
  const Mat& coulomb() const { return coulomb_; }

  /// Elements of `candidate` against every current term.
  std::vector<MatrixElements> column(const EcgModel& model,
                                     const PreparedTerm& candidate) const;

  void append(PreparedTerm term, std::span<const MatrixElements> column,
              const MatrixElements& self);
  /// column[index] is ignored; self supplies the diagonal.
  void replace(int index, PreparedTerm term, std::span<const MatrixElements> column,
               const MatrixElements& self);
  void remove(int index);

  /// Prepares every term and evaluates all matrices from scratch.
  static BasisSet assemble(const EcgModel& model, const std::vector<BasisTerm>& terms);

  /// Largest difference between the cached H, S and a fresh rebuild; H
  /// differences are taken relative to max(1, max |H_ij|).
  double rebuild_deviation(const EcgModel& model) const;

 private:
  void set_entry(int i, int j, const MatrixElements& e);

  std::vector<PreparedTerm> terms_;
  Mat overlap_;
  Mat hamiltonian_;
  Mat kinetic_;
  Mat confinement_;
  Mat coulomb_;
};

}  // namespace wigner
