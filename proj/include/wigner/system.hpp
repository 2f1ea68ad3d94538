// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace wigner {

enum class ConfinementShape { kQuadratic, kQuartic };

std::string_view to_string(ConfinementShape shape);
ConfinementShape confinement_from_string(std::string_view name);

/// External trap V_c(x) = 1/2 omega^2 x^2 or 1/2 omega^2 x^4 (a.u.).
struct Confinement {
  ConfinementShape shape = ConfinementShape::kQuadratic;
  double omega = 1.0;

  double potential(double x) const {
    const double x2 = x * x;
    return shape == ConfinementShape::kQuadratic ? 0.5 * omega * omega * x2
                                                 : 0.5 * omega * omega * x2 * x2;
  }
};

/// Single cavity mode. The effective coupling g is derived, never stored.
struct CavitySpec {
  double omega_p = 1.0;
  double lambda = 0.0;
  int n_max = 0;

  double coupling_strength() const;  // g = |lambda| sqrt(omega_p / 2)
  void validate() const;
};

struct SystemSpec {
  int electrons = 1;
  double total_spin = 0.5;
  Confinement confinement;
  bool coulomb = true;
  std::optional<CavitySpec> cavity;

  int spin_up() const;
  int spin_down() const;
  /// Throws UsageError when N and S are incompatible or out of range.
  void validate() const;
};

}  // namespace wigner
