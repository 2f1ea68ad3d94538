// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/system.hpp"

#include <cmath>

#include "wigner/errors.hpp"
#include "wigner/linalg.hpp"

namespace wigner {

std::string_view to_string(ConfinementShape shape) {
  return shape == ConfinementShape::kQuadratic ? "quadratic" : "quartic";
}

ConfinementShape confinement_from_string(std::string_view name) {
  if (name == "quadratic") return ConfinementShape::kQuadratic;
  if (name == "quartic") return ConfinementShape::kQuartic;
  throw UsageError("unknown confinement '" + std::string(name) +
                   "' (expected quadratic or quartic)");
}

double CavitySpec::coupling_strength() const {
  return std::abs(lambda) * std::sqrt(omega_p / 2.0);
}

void CavitySpec::validate() const {
  if (!(omega_p > 0.0)) throw UsageError("cavity omega_p must be positive");
  if (n_max < 0) throw UsageError("cavity n_max must be >= 0");
  if (!std::isfinite(lambda)) throw UsageError("cavity lambda must be finite");
}

int SystemSpec::spin_up() const {
  return static_cast<int>(std::lround(electrons / 2.0 + total_spin));
}

int SystemSpec::spin_down() const { return electrons - spin_up(); }

void SystemSpec::validate() const {
  if (electrons < 1 || electrons > kMaxParticles) {
    throw UsageError("electron count must be in [1, " + std::to_string(kMaxParticles) +
                     "]");
  }
  const double two_s = 2.0 * total_spin;
  if (total_spin < 0.0 || std::abs(two_s - std::round(two_s)) > 1e-12 ||
      two_s > electrons + 1e-12 ||
      (static_cast<long>(std::lround(two_s)) % 2) != (electrons % 2)) {
    throw UsageError("total spin " + std::to_string(total_spin) +
                     " is not reachable with " + std::to_string(electrons) + " electrons");
  }
  if (!(confinement.omega >= 0.0) || !std::isfinite(confinement.omega)) {
    throw UsageError("confinement omega must be finite and >= 0");
  }
  if (cavity) {
    cavity->validate();
    if (!(confinement.omega > 0.0)) {
      throw UsageError("cavity runs need a confining potential with omega > 0");
    }
  }
}

}  // namespace wigner
