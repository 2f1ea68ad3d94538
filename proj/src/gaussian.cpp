// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "wigner/errors.hpp"

namespace wigner {

void GaussianBasisFunction::validate() const {
  const int n = size();
  if (n < 1 || n > kMaxParticles) throw UsageError("basis function size out of range");
  if (shift.size() != n || alpha.rows() != n || alpha.cols() != n) {
    throw UsageError("basis function parameter sizes disagree");
  }
  for (int i = 0; i < n; ++i) {
    if (!(beta(i) > 0.0) || !std::isfinite(beta(i))) {
      throw UsageError("basis width beta must be positive and finite");
    }
    if (!std::isfinite(shift(i))) throw UsageError("basis shift must be finite");
    for (int j = i + 1; j < n; ++j) {
      if (!(alpha(i, j) >= 0.0) || alpha(i, j) != alpha(j, i) || !std::isfinite(alpha(i, j))) {
        throw UsageError("pair exponents must be symmetric, finite and >= 0");
      }
    }
  }
}

GaussianBasisFunction GaussianBasisFunction::permuted(const Permutation& perm) const {
  return {perm.apply(alpha), perm.apply(beta), perm.apply(shift)};
}

double GaussianBasisFunction::evaluate(std::span<const double> x) const {
  const int n = size();
  double exponent = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = x[i] - shift(i);
    exponent -= beta(i) * d * d;
    for (int j = i + 1; j < n; ++j) {
      const double r = x[i] - x[j];
      exponent -= 0.5 * alpha(i, j) * r * r;
    }
  }
  return std::exp(exponent);
}

QuadraticForm QuadraticForm::permuted(const Permutation& perm) const {
  return {perm.apply(a), perm.apply(b), c};
}

double QuadraticForm::evaluate(std::span<const double> x) const {
  const int n = size();
  double exponent = -c;
  for (int i = 0; i < n; ++i) {
    exponent += b(i) * x[i];
    for (int j = 0; j < n; ++j) exponent -= 0.5 * x[i] * a(i, j) * x[j];
  }
  return std::exp(exponent);
}

QuadraticForm build_quadratic_form(const GaussianBasisFunction& f) {
  f.validate();
  const int n = f.size();
  QuadraticForm q;
  q.a = SmallMat::Zero(n, n);
  q.b.resize(n);
  q.c = 0.0;
  for (int i = 0; i < n; ++i) {
    q.a(i, i) = 2.0 * f.beta(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      q.a(i, i) += f.alpha(i, j);
      q.a(i, j) = -f.alpha(i, j);
    }
    q.b(i) = 2.0 * f.beta(i) * f.shift(i);
    q.c += f.beta(i) * f.shift(i) * f.shift(i);
  }
  Eigen::LLT<SmallMat> llt(q.a);
  if (llt.info() != Eigen::Success) {
    throw RejectedTerm("basis function quadratic form is not positive definite");
  }
  return q;
}

GaussianProduct::GaussianProduct(const QuadraticForm& bra, const QuadraticForm& ket) {
  const int n = bra.size();
  const SmallMat precision = bra.a + ket.a;
  const SmallVec linear = bra.b + ket.b;
  Eigen::LLT<SmallMat> llt(precision);
  if (llt.info() != Eigen::Success) {
    throw IllConditionedPair("merged Gaussian has no Cholesky factorization");
  }
  const SmallMat l = llt.matrixL();
  double log_det = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(l(i, i) > 0.0)) throw IllConditionedPair("merged Gaussian is singular");
    log_det += 2.0 * std::log(l(i, i));
  }
  covariance_ = llt.solve(SmallMat::Identity(n, n));
  mean_ = llt.solve(linear);
  log_overlap_ = 0.5 * n * std::log(2.0 * std::numbers::pi) - 0.5 * log_det +
                 0.5 * linear.dot(mean_) - bra.c - ket.c;
}

double GaussianProduct::kinetic_ratio(const QuadraticForm& bra,
                                      const QuadraticForm& ket) const {
  // grad f = (b - A x) f; average (b1 - A1 x).(b2 - A2 x) over N(mean, cov)
  const SmallVec g_bra = bra.b - bra.a * mean_;
  const SmallVec g_ket = ket.b - ket.a * mean_;
  const double trace = (bra.a * covariance_ * ket.a).trace();
  return 0.5 * (trace + g_bra.dot(g_ket));
}

double normal_moment(double mean, double variance, int power) {
  const double m2 = mean * mean;
  switch (power) {
    case 0: return 1.0;
    case 1: return mean;
    case 2: return m2 + variance;
    case 3: return mean * (m2 + 3.0 * variance);
    case 4: return m2 * m2 + 6.0 * m2 * variance + 3.0 * variance * variance;
    default: throw UsageError("moment power must be in [0, 4]");
  }
}

double gaussian_moment_element(const QuadraticForm& bra, const QuadraticForm& ket,
                               const SmallVec& w, int power) {
  if (power != 0 && power != 1 && power != 2 && power != 4) {
    throw UsageError("moment power must be 0, 1, 2 or 4");
  }
  const GaussianProduct product(bra, ket);
  return std::exp(product.log_overlap()) *
         normal_moment(product.linear_mean(w), product.linear_variance(w), power);
}

double kinetic_element(const QuadraticForm& bra, const QuadraticForm& ket) {
  const GaussianProduct product(bra, ket);
  return std::exp(product.log_overlap()) * product.kinetic_ratio(bra, ket);
}

}  // namespace wigner
