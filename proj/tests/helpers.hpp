// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "oracles.hpp"
#include "wigner/gaussian.hpp"

namespace testing {

inline wigner::GaussianBasisFunction to_library(const oracle::Ecg& g) {
  const int n = g.size();
  wigner::GaussianBasisFunction f;
  f.alpha = wigner::SmallMat::Zero(n, n);
  f.beta.resize(n);
  f.shift.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) f.alpha(i, j) = g.alpha[i][j];
    }
    f.beta(i) = g.beta[i];
    f.shift(i) = g.shift[i];
  }
  return f;
}

inline double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

}  // namespace testing
