// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/density.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {

GridDensity GridDensity::uniform(int points, double spacing) {
  if (points < 2 || !(spacing > 0.0)) throw UsageError("grid needs >= 2 points and spacing > 0");
  GridDensity g;
  g.x.resize(points);
  for (int k = 0; k < points; ++k) g.x[k] = (k - 0.5 * (points - 1)) * spacing;
  g.total.assign(points, 0.0);
  g.up.assign(points, 0.0);
  g.down.assign(points, 0.0);
  return g;
}

double GridDensity::integral() const {
  double sum = 0.0;
  for (double v : total) sum += v;
  return sum * spacing();
}

bool GridDensity::same_grid(const GridDensity& other, double tolerance) const {
  if (x.size() != other.x.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x[k] - other.x[k]) > tolerance) return false;
  }
  return true;
}

ManyBodyState ManyBodyState::from_spectrum(const EcgModel& model, const BasisSet& basis,
                                           const SpectrumResult& spectrum, int index) {
  if (index < 0 || index >= spectrum.energies.size()) throw UsageError("no such eigenstate");
  ManyBodyState s{model, basis.terms(), spectrum.coefficients.col(index)};
  const double n = std::sqrt(s.coefficients.dot(basis.overlap() * s.coefficients));
  s.coefficients /= n;
  return s;
}

double ManyBodyState::norm(const BasisSet& basis) const {
  return coefficients.dot(basis.overlap() * coefficients);
}

GridDensity reduced_density(const ManyBodyState& state, std::span<const double> grid) {
  const int points = static_cast<int>(grid.size());
  if (points < 2) throw UsageError("density grid needs at least two points");
  const double x0 = grid[0];
  const double dx = grid[1] - grid[0];
  for (int k = 1; k < points; ++k) {
    if (std::abs(grid[k] - (x0 + k * dx)) > 1e-9 * (1.0 + std::abs(grid[k]))) {
      throw UsageError("density grid must be uniform");
    }
  }
  GridDensity out;
  out.x.assign(grid.begin(), grid.end());
  out.total.assign(points, 0.0);
  out.up.assign(points, 0.0);
  out.down.assign(points, 0.0);

  const int n = state.model.particles();
  const auto& terms = state.terms;
  const int k_terms = static_cast<int>(terms.size());
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  double norm = 0.0;

  for (int a = 0; a < k_terms; ++a) {
    for (int b = a; b < k_terms; ++b) {
      if (terms[a].term.photon != terms[b].term.photon) continue;
      const double pair_weight =
          (a == b ? 1.0 : 2.0) * state.coefficients(a) * state.coefficients(b);
      if (pair_weight == 0.0) continue;
      const double scale = terms[a].log_norm + terms[b].log_norm;
      for (const PermutationTerm& p : state.model.antisymmetrizer().terms()) {
        const QuadraticForm moved = terms[b].form.permuted(p.perm);
        const GaussianProduct g(terms[a].form, moved);
        const double weight = pair_weight * std::exp(g.log_overlap() - scale);
        norm += weight * p.coefficient;
        if (std::abs(weight) < 1e-18) continue;
        for (int i = 0; i < n; ++i) {
          const double mean = g.mean()(i);
          const double var = g.covariance()(i, i);
          const double sigma = std::sqrt(var);
          const double amp = weight * inv_sqrt_2pi / sigma;
          const double w_total = amp * p.coefficient;
          const double w_up = amp * p.up_weight(i);
          // exp(-81/2) is far below the accuracy of interest
          const int lo = std::max(0, static_cast<int>(std::floor((mean - 9.0 * sigma - x0) / dx)));
          const int hi =
              std::min(points - 1, static_cast<int>(std::ceil((mean + 9.0 * sigma - x0) / dx)));
          const double inv_2var = 0.5 / var;
          for (int k = lo; k <= hi; ++k) {
            const double d = grid[k] - mean;
            const double e = std::exp(-d * d * inv_2var);
            out.total[k] += w_total * e;
            out.up[k] += w_up * e;
          }
        }
      }
    }
  }
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "reduced_density needs a normalized state (norm " << norm << ")";
    throw UsageError(msg.str());
  }
  for (int k = 0; k < points; ++k) out.down[k] = out.total[k] - out.up[k];
  return out;
}

}  // namespace wigner
