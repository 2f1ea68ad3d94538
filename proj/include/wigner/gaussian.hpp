// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "wigner/linalg.hpp"
#include "wigner/permutation.hpp"

namespace wigner {

/// One explicitly correlated Gaussian
///   exp(-1/2 sum_{i<j} alpha_ij (x_i - x_j)^2) * exp(-sum_i beta_i (x_i - s_i)^2).
/// alpha is stored as a full symmetric matrix; its diagonal is ignored.
struct GaussianBasisFunction {
  SmallMat alpha;
  SmallVec beta;
  SmallVec shift;

  int size() const { return static_cast<int>(beta.size()); }
  /// Throws UsageError on beta <= 0, negative or asymmetric alpha, size mismatch.
  void validate() const;
  /// Same function with particle labels moved by perm.
  GaussianBasisFunction permuted(const Permutation& perm) const;
  double evaluate(std::span<const double> x) const;
};

/// exp(-1/2 x^T a x + b^T x - c)
struct QuadraticForm {
  SmallMat a;
  SmallVec b;
  double c = 0.0;

  int size() const { return static_cast<int>(b.size()); }
  QuadraticForm permuted(const Permutation& perm) const;
  double evaluate(std::span<const double> x) const;
};

/// A_ii = sum_{j!=i} alpha_ij + 2 beta_i, A_ij = -alpha_ij, b_i = 2 beta_i s_i,
/// c = sum_i beta_i s_i^2. Throws RejectedTerm if A is not positive definite.
QuadraticForm build_quadratic_form(const GaussianBasisFunction& f);

/// Product bra * ket, viewed as an unnormalized multivariate normal with
/// precision C = A_bra + A_ket and mean C^{-1} (b_bra + b_ket).
class GaussianProduct {
 public:
  /// Throws IllConditionedPair when C has no Cholesky factorization.
  GaussianProduct(const QuadraticForm& bra, const QuadraticForm& ket);

  int size() const { return static_cast<int>(mean_.size()); }
  /// log of the overlap integral over R^N.
  double log_overlap() const { return log_overlap_; }
  const SmallVec& mean() const { return mean_; }
  const SmallMat& covariance() const { return covariance_; }

  double linear_mean(const SmallVec& w) const { return w.dot(mean_); }
  double linear_variance(const SmallVec& w) const { return w.dot(covariance_ * w); }

  /// Mean and variance of x_i - x_j.
  double pair_mean(int i, int j) const { return mean_(i) - mean_(j); }
  double pair_variance(int i, int j) const {
    return covariance_(i, i) + covariance_(j, j) - 2.0 * covariance_(i, j);
  }

  /// <bra| -1/2 sum d^2/dx_i^2 |ket> divided by the overlap.
  double kinetic_ratio(const QuadraticForm& bra, const QuadraticForm& ket) const;

 private:
  SmallVec mean_;
  SmallMat covariance_;
  double log_overlap_ = 0.0;
};

/// E[t^power] for t ~ N(mean, variance), power in {0, 1, 2, 3, 4}.
double normal_moment(double mean, double variance, int power);

/// Integral of bra * ket * (w^T x)^power over R^N, power in {0, 1, 2, 4}.
double gaussian_moment_element(const QuadraticForm& bra, const QuadraticForm& ket,
                               const SmallVec& w, int power);

/// Integral of bra * (-1/2 Laplacian) ket.
double kinetic_element(const QuadraticForm& bra, const QuadraticForm& ket);

}  // namespace wigner
