// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/basis.hpp"

#include <cmath>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {

EcgModel::EcgModel(SystemSpec system)
    : system_(std::move(system)),
      antisym_(make_spin_function(system_.electrons, system_.total_spin)) {
  system_.validate();
}

PreparedTerm EcgModel::prepare(BasisTerm term, double min_norm_ratio) const {
  if (term.gaussian.size() != system_.electrons) {
    throw UsageError("basis term has the wrong particle count");
  }
  if (term.photon < 0 || term.photon > photon_max()) {
    throw UsageError("basis term photon index outside [0, n_max]");
  }
  PreparedTerm out;
  out.form = build_quadratic_form(term.gaussian);
  const double scale = log_direct_overlap(out.form, out.form);
  ElementRequest request;
  request.kinetic = request.confinement = request.coulomb = false;
  const double ratio = antisymmetrized_bundle(out.form, out.form, antisym_, request, scale).overlap;
  if (!(ratio > min_norm_ratio)) {
    std::ostringstream msg;
    msg << "antisymmetrized norm vanishes (ratio " << ratio << ")";
    throw RejectedTerm(msg.str());
  }
  out.log_norm = 0.5 * (scale + std::log(ratio));
  out.term = std::move(term);
  return out;
}

MatrixElements EcgModel::element(const PreparedTerm& bra, const PreparedTerm& ket) const {
  MatrixElements out;
  const int n_bra = bra.term.photon;
  const int n_ket = ket.term.photon;
  const int gap = std::abs(n_bra - n_ket);
  if (gap > 1) return out;
  const double scale = bra.log_norm + ket.log_norm;
  const auto& cavity = system_.cavity;

  ElementRequest request;
  request.trap = system_.confinement;
  if (gap == 1) {
    request.kinetic = request.confinement = request.coulomb = false;
    request.dipole = true;
    const ElementBundle b = antisymmetrized_bundle(bra.form, ket.form, antisym_, request, scale);
    // <n+1| (a + a^+) |n> = sqrt(n + 1)
    out.coupling = -cavity->lambda * std::sqrt(0.5 * cavity->omega_p) *
                   std::sqrt(static_cast<double>(std::max(n_bra, n_ket))) * b.dipole;
    return out;
  }
  request.coulomb = system_.coulomb && system_.electrons > 1;
  request.dipole_squared = cavity.has_value() && cavity->lambda != 0.0;
  const ElementBundle b = antisymmetrized_bundle(bra.form, ket.form, antisym_, request, scale);
  out.overlap = b.overlap;
  out.kinetic = b.kinetic;
  out.confinement = b.confinement;
  out.coulomb = b.coulomb;
  if (cavity) {
    out.dipole_self = 0.5 * cavity->lambda * cavity->lambda * b.dipole_squared;
    out.photon = cavity->omega_p * (n_bra + 0.5) * b.overlap;
  }
  return out;
}

std::vector<MatrixElements> BasisSet::column(const EcgModel& model,
                                             const PreparedTerm& candidate) const {
  std::vector<MatrixElements> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(model.element(t, candidate));
  return out;
}

void BasisSet::set_entry(int i, int j, const MatrixElements& e) {
  overlap_(i, j) = overlap_(j, i) = e.overlap;
  hamiltonian_(i, j) = hamiltonian_(j, i) = e.hamiltonian();
  kinetic_(i, j) = kinetic_(j, i) = e.kinetic;
  confinement_(i, j) = confinement_(j, i) = e.confinement;
  coulomb_(i, j) = coulomb_(j, i) = e.coulomb;
}

void BasisSet::append(PreparedTerm term, std::span<const MatrixElements> column,
                      const MatrixElements& self) {
  const int k = size();
  if (static_cast<int>(column.size()) != k) throw UsageError("column length mismatch");
  for (Mat* m : {&overlap_, &hamiltonian_, &kinetic_, &confinement_, &coulomb_}) {
    m->conservativeResize(k + 1, k + 1);
  }
  terms_.push_back(std::move(term));
  for (int j = 0; j < k; ++j) set_entry(j, k, column[j]);
  set_entry(k, k, self);
}

void BasisSet::replace(int index, PreparedTerm term, std::span<const MatrixElements> column,
                       const MatrixElements& self) {
  if (index < 0 || index >= size() || static_cast<int>(column.size()) != size()) {
    throw UsageError("replace: bad index or column length");
  }
  terms_[index] = std::move(term);
  for (int j = 0; j < size(); ++j) {
    if (j != index) set_entry(j, index, column[j]);
  }
  set_entry(index, index, self);
}

void BasisSet::remove(int index) {
  if (index < 0 || index >= size()) throw UsageError("remove: bad index");
  const int k = size();
  for (Mat* m : {&overlap_, &hamiltonian_, &kinetic_, &confinement_, &coulomb_}) {
    Mat reduced(k - 1, k - 1);
    for (int i = 0, ri = 0; i < k; ++i) {
      if (i == index) continue;
      for (int j = 0, rj = 0; j < k; ++j) {
        if (j == index) continue;
        reduced(ri, rj++) = (*m)(i, j);
      }
      ++ri;
    }
    *m = std::move(reduced);
  }
  terms_.erase(terms_.begin() + index);
}

BasisSet BasisSet::assemble(const EcgModel& model, const std::vector<BasisTerm>& terms) {
  BasisSet out;
  out.terms_.reserve(terms.size());
  for (const auto& t : terms) out.terms_.push_back(model.prepare(t, 0.0));
  const int k = out.size();
  for (Mat* m : {&out.overlap_, &out.hamiltonian_, &out.kinetic_, &out.confinement_, &out.coulomb_}) {
    m->setZero(k, k);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) out.set_entry(i, j, model.element(out.terms_[i], out.terms_[j]));
  }
  return out;
}

double BasisSet::rebuild_deviation(const EcgModel& model) const {
  if (empty()) return 0.0;
  std::vector<BasisTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) raw.push_back(t.term);
  const BasisSet fresh = assemble(model, raw);
  const double scale = std::max(1.0, hamiltonian_.cwiseAbs().maxCoeff());
  return std::max((fresh.hamiltonian_ - hamiltonian_).cwiseAbs().maxCoeff() / scale,
                  (fresh.overlap_ - overlap_).cwiseAbs().maxCoeff());
}

}  // namespace wigner
