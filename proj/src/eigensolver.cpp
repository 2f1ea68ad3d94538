// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/eigensolver.hpp"

#include <cmath>
#include <limits>

#include "wigner/errors.hpp"

namespace wigner {

SpectrumResult solve_generalized(const Mat& h, const Mat& s, double cutoff) {
  const Eigen::Index k = s.rows();
  if (k == 0 || h.rows() != k || h.cols() != k || s.cols() != k) {
    throw UsageError("solve_generalized: H and S must be square and of equal size");
  }
  Eigen::SelfAdjointEigenSolver<Mat> overlap_solver(s);
  if (overlap_solver.info() != Eigen::Success) {
    throw NumericalError("overlap diagonalization failed");
  }
  const Vec& sval = overlap_solver.eigenvalues();
  const double threshold = cutoff * sval(k - 1);
  Eigen::Index first = 0;
  while (first < k && !(sval(first) > threshold)) ++first;
  if (first == k || !(sval(k - 1) > 0.0)) {
    throw NumericalError("degenerate basis: every overlap eigenvalue is below the cutoff");
  }
  const Eigen::Index kept = k - first;
  Mat x = overlap_solver.eigenvectors().rightCols(kept);
  for (Eigen::Index j = 0; j < kept; ++j) x.col(j) /= std::sqrt(sval(first + j));

  Mat transformed = x.transpose() * h * x;
  transformed = 0.5 * (transformed + transformed.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Mat> solver(transformed);
  if (solver.info() != Eigen::Success) throw NumericalError("Hamiltonian diagonalization failed");

  SpectrumResult out;
  out.energies = solver.eigenvalues();
  out.coefficients = x * solver.eigenvectors();
  out.discarded = static_cast<int>(first);
  return out;
}

double generalized_residual(const Mat& h, const Mat& s, const SpectrumResult& result,
                            int states) {
  double worst = 0.0;
  const Eigen::Index count =
      states < 0 ? result.energies.size() : std::min<Eigen::Index>(states, result.energies.size());
  for (Eigen::Index i = 0; i < count; ++i) {
    const Vec c = result.coefficients.col(i);
    const Vec hc = h * c;
    const double scale = hc.norm();
    const double r = (hc - result.energies(i) * (s * c)).norm();
    worst = std::max(worst, scale > 0.0 ? r / scale : r);
  }
  return worst;
}

BorderedSpectrum::BorderedSpectrum(const SpectrumResult& base)
    : energies_(base.energies), coefficients_(base.coefficients) {}

std::optional<double> BorderedSpectrum::lowest(const Vec& h_col, const Vec& s_col,
                                               double h_self, double s_self,
                                               double dependence_cutoff) const {
  if (energies_.size() == 0) {
    if (!(s_self > 0.0)) return std::nullopt;
    return h_self / s_self;
  }
  const Vec p = coefficients_.transpose() * s_col;
  const Vec q = coefficients_.transpose() * h_col;
  const double residual = s_self - p.squaredNorm();
  if (!(residual > dependence_cutoff * s_self)) return std::nullopt;

  const double inv = 1.0 / std::sqrt(residual);
  const Vec b = (q - energies_.cwiseProduct(p)) * inv;
  const double corner =
      (h_self - 2.0 * p.dot(q) + p.cwiseProduct(p).dot(energies_)) / residual;

  // lowest root of g(x) = corner - x - sum b_i^2 / (E_i - x) below E_0;
  // g is strictly decreasing there
  const double e0 = energies_(0);
  const Vec b2 = b.cwiseProduct(b);
  auto g = [&](double x) {
    return corner - x - (b2.array() / (energies_.array() - x)).sum();
  };
  const double spread = std::sqrt(b2.sum());
  double lo = std::min(e0, corner) - spread - 1e-12 * (1.0 + std::abs(e0));
  double hi = e0;
  // no root below E_0 when the coupling to the lowest state vanishes and
  // g stays positive up to E_0
  if (b2(0) <= std::numeric_limits<double>::min()) {
    const double just_below = e0 - 1e-14 * (1.0 + std::abs(e0));
    if (g(just_below) >= 0.0) return e0;
  }
  while (g(lo) < 0.0) lo -= (hi - lo) + 1.0;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double gx = g(x);
    if (gx > 0.0) lo = x; else hi = x;
    const double dg = -1.0 - (b2.array() / (energies_.array() - x).square()).sum();
    double next = x - gx / dg;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace wigner
