// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace wigner {

/// Largest electron count the fixed-capacity small matrices support.
inline constexpr int kMaxParticles = 6;

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Heap-free containers for per-particle quantities.
using SmallVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxParticles, 1>;
using SmallMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0,
                               kMaxParticles, kMaxParticles>;

}  // namespace wigner
