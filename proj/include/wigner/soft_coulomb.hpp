// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wigner/gaussian.hpp"

namespace wigner {

/// E[1 / sqrt(xi^2 + 1)] for xi ~ N(mean, variance).
///
/// Uses 1/sqrt(a) = pi^{-1/2} int_0^inf t^{-1/2} e^{-a t} dt, which turns the
/// Gaussian average into
///   pi^{-1/2} int_0^inf t^{-1/2} e^{-t} (1 + 2 v t)^{-1/2} exp(-t mu^2 / (1 + 2 v t)) dt.
/// With t = e^y the integrand is analytic in a strip of half-width pi/2 and
/// decays double exponentially for y -> +inf, so a uniform trapezoid rule in y
/// converges geometrically. The region t < e^{y_min} is integrated
/// analytically. Agreement of the two interleaved half-rules is checked and a
/// NumericalError is thrown if they disagree. Negative variances (rounding
/// noise) are treated as zero.
double soft_coulomb_expectation(double mean, double variance);

/// Integral of bra * 1/sqrt((x_i - x_j)^2 + 1) * ket.
double soft_coulomb_element(const QuadraticForm& bra, const QuadraticForm& ket, int i,
                            int j);

}  // namespace wigner
