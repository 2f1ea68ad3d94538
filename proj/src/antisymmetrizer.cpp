// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/antisymmetrizer.hpp"

#include <cmath>

#include "wigner/errors.hpp"
#include "wigner/soft_coulomb.hpp"

namespace wigner {
namespace {

constexpr double kSpinFactorFloor = 1e-14;
// Permutation terms whose scaled overlap is below this contribute nothing
// measurable to any element and are skipped.
constexpr double kNegligibleOverlap = 1e-17;

double trap_expectation(const GaussianProduct& g, const Confinement& trap) {
  const double w2 = 0.5 * trap.omega * trap.omega;
  double sum = 0.0;
  const int power = trap.shape == ConfinementShape::kQuadratic ? 2 : 4;
  for (int i = 0; i < g.size(); ++i) {
    sum += normal_moment(g.mean()(i), g.covariance()(i, i), power);
  }
  return w2 * sum;
}

double repulsion_expectation(const GaussianProduct& g) {
  double sum = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      sum += soft_coulomb_expectation(g.pair_mean(i, j), g.pair_variance(i, j));
    }
  }
  return sum;
}

SmallVec dipole_weights(int n) { return SmallVec::Constant(n, -1.0); }

}  // namespace

Antisymmetrizer::Antisymmetrizer(SpinFunction chi) : spin_(std::move(chi)) {
  const int n = spin_.n_electrons;
  for (const auto& perm : Permutation::all(n)) {
    const double sign = perm.sign();
    const double factor = sign * spin_overlap(spin_, perm, spin_);
    if (std::abs(factor) < kSpinFactorFloor) continue;
    PermutationTerm term;
    term.perm = perm;
    term.coefficient = factor;
    term.up_weight.resize(n);
    for (int i = 0; i < n; ++i) term.up_weight(i) = sign * spin_overlap_up(spin_, perm, spin_, i);
    terms_.push_back(std::move(term));
  }
}

double log_direct_overlap(const QuadraticForm& bra, const QuadraticForm& ket) {
  return GaussianProduct(bra, ket).log_overlap();
}

ElementBundle antisymmetrized_bundle(const QuadraticForm& bra, const QuadraticForm& ket,
                                     const Antisymmetrizer& antisym,
                                     const ElementRequest& request, double log_scale) {
  if (bra.size() != antisym.particles() || ket.size() != antisym.particles()) {
    throw UsageError("basis function size does not match the spin function");
  }
  ElementBundle out;
  const SmallVec w = dipole_weights(bra.size());
  for (const PermutationTerm& term : antisym.terms()) {
    const QuadraticForm moved = ket.permuted(term.perm);
    const GaussianProduct g(bra, moved);
    const double overlap = term.coefficient * std::exp(g.log_overlap() - log_scale);
    if (std::abs(overlap) < kNegligibleOverlap) continue;
    out.overlap += overlap;
    if (request.kinetic) out.kinetic += overlap * g.kinetic_ratio(bra, moved);
    if (request.confinement) out.confinement += overlap * trap_expectation(g, request.trap);
    if (request.coulomb) out.coulomb += overlap * repulsion_expectation(g);
    if (request.dipole || request.dipole_squared) {
      const double mu = g.linear_mean(w);
      if (request.dipole) out.dipole += overlap * mu;
      if (request.dipole_squared) {
        out.dipole_squared += overlap * normal_moment(mu, g.linear_variance(w), 2);
      }
    }
  }
  return out;
}

double spatial_element(const PairOperatorKind& kind, const QuadraticForm& bra,
                       const QuadraticForm& ket) {
  const GaussianProduct g(bra, ket);
  const double overlap = std::exp(g.log_overlap());
  const SmallVec w = dipole_weights(bra.size());
  switch (kind.op) {
    case PairOperator::kOverlap:
      return overlap;
    case PairOperator::kKinetic:
      return overlap * g.kinetic_ratio(bra, ket);
    case PairOperator::kConfineQuadratic:
      return overlap * trap_expectation(g, {ConfinementShape::kQuadratic, kind.omega});
    case PairOperator::kConfineQuartic:
      return overlap * trap_expectation(g, {ConfinementShape::kQuartic, kind.omega});
    case PairOperator::kSoftCoulomb:
      return overlap * repulsion_expectation(g);
    case PairOperator::kDipole:
      return overlap * g.linear_mean(w);
    case PairOperator::kDipoleSquared:
      return overlap * normal_moment(g.linear_mean(w), g.linear_variance(w), 2);
  }
  return 0.0;
}

double antisymmetrized_element(const PairOperatorKind& kind,
                               const GaussianBasisFunction& bra,
                               const SpinFunction& bra_spin,
                               const GaussianBasisFunction& ket,
                               const SpinFunction& ket_spin) {
  if (bra.size() != ket.size() || bra_spin.n_electrons != ket_spin.n_electrons ||
      bra.size() != bra_spin.n_electrons || std::abs(bra_spin.sz - ket_spin.sz) > 1e-12 ||
      std::abs(bra_spin.total_spin - ket_spin.total_spin) > 1e-12) {
    throw UsageError("antisymmetrized element between incompatible terms");
  }
  const QuadraticForm bra_form = build_quadratic_form(bra);
  const QuadraticForm ket_form = build_quadratic_form(ket);
  double sum = 0.0;
  for (const auto& perm : Permutation::all(bra.size())) {
    const double factor = perm.sign() * spin_overlap(bra_spin, perm, ket_spin);
    if (std::abs(factor) < kSpinFactorFloor) continue;
    sum += factor * spatial_element(kind, bra_form, ket_form.permuted(perm));
  }
  return sum;
}

}  // namespace wigner
