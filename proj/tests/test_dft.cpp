// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wigner/dft.hpp"
#include "wigner/errors.hpp"

using namespace wigner;
using namespace wigner::dft;

namespace {

SystemSpec trap(int n, double spin, double omega, bool coulomb = true) {
  SystemSpec s;
  s.electrons = n;
  s.total_spin = spin;
  s.confinement.omega = omega;
  s.coulomb = coulomb;
  return s;
}

std::vector<double> gaussian_density(const std::vector<double>& x, double weight, double centre) {
  std::vector<double> rho(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    rho[k] = weight * std::exp(-(x[k] - centre) * (x[k] - centre)) / std::sqrt(M_PI);
  }
  return rho;
}

}  // namespace

TEST_CASE("Hartree potential") {
  const Grid1D grid{300, 0.05};
  const auto x = grid.coordinates();
  const std::vector<double> zero(x.size(), 0.0);
  for (double v : hartree_potential(zero, grid.spacing)) CHECK(v == 0.0);

  std::vector<double> spike(x.size(), 0.0);
  spike[100] = 1.0 / grid.spacing;
  const auto kernel = hartree_potential(spike, grid.spacing);
  for (int k : {0, 100, 157, 299}) {
    const double d = x[k] - x[100];
    CHECK(kernel[k] == doctest::Approx(1.0 / std::sqrt(d * d + 1.0)).epsilon(1e-14));
  }

  const auto rho = gaussian_density(x, 2.0, 0.4);
  const auto v = hartree_potential(rho, grid.spacing);
  for (int k : {20, 150, 200, 280}) {
    const double reference = oracle::integrate(
        [&](std::span<const double> y) {
          const double d = x[k] - y[0];
          return 2.0 * std::exp(-(y[0] - 0.4) * (y[0] - 0.4)) / std::sqrt(M_PI) /
                 std::sqrt(d * d + 1.0);
        },
        1, -20, 20);
    CHECK(v[k] == doctest::Approx(reference).epsilon(1e-6));
  }
}

TEST_CASE("Perdew-Zunger correlation") {
  CHECK(pz_correlation(1.0, false).energy ==
        doctest::Approx(-0.1423 / (1.0 + 1.0529 + 0.3334)).epsilon(1e-14));
  CHECK(pz_correlation(1.0, true).energy ==
        doctest::Approx(-0.0843 / (1.0 + 1.3981 + 0.2611)).epsilon(1e-14));
  // high-density branch at r_s = 0.5
  CHECK(pz_correlation(0.5, false).energy ==
        doctest::Approx(0.0311 * std::log(0.5) - 0.048 + 0.0020 * 0.5 * std::log(0.5) -
                        0.0116 * 0.5)
            .epsilon(1e-14));
  // the two branches nearly meet at r_s = 1
  for (bool polarized : {false, true}) {
    CHECK(std::abs(pz_correlation(1.0 - 1e-12, polarized).energy -
                   pz_correlation(1.0, polarized).energy) < 1e-3);
  }
  for (bool polarized : {false, true}) {
    for (double rs : {0.3, 0.8, 2.0, 7.0}) {
      const double d = 1e-5 * rs;
      const double slope =
          (pz_correlation(rs + d, polarized).energy - pz_correlation(rs - d, polarized).energy) /
          (2 * d);
      const CorrelationPoint c = pz_correlation(rs, polarized);
      CHECK(c.potential == doctest::Approx(c.energy - rs / 3.0 * slope).epsilon(1e-8));
    }
  }
}

TEST_CASE("local spin-density exchange") {
  const double rho = 0.3;
  const double unpolarized = lsda_exchange_per_particle(0.5 * rho, 0.5 * rho);
  CHECK(unpolarized == doctest::Approx(-0.75 * std::cbrt(3.0 * rho / M_PI)).epsilon(1e-14));
  CHECK(lsda_exchange_per_particle(rho, 0.0) ==
        doctest::Approx(std::cbrt(2.0) * unpolarized).epsilon(1e-14));
  CHECK(lsda_exchange_per_particle(0.0, 0.0) == 0.0);
}

TEST_CASE("exchange-correlation potential is the functional derivative") {
  const Grid1D grid{200, 0.1};
  const auto x = grid.coordinates();
  const auto up = gaussian_density(x, 2.0, 0.5);
  const auto down = gaussian_density(x, 1.0, -0.8);
  const XcResult xc = lda_xc(up, down, grid.spacing);
  for (int k : {85, 95, 104, 115}) {
    auto energy_with = [&](double du, double dd) {
      auto u = up, d = down;
      u[k] += du;
      d[k] += dd;
      return lda_xc(u, d, grid.spacing).energy;
    };
    const double du = 1e-4 * up[k], dd = 1e-4 * down[k];
    const double dv_up = (energy_with(du, 0) - energy_with(-du, 0)) / (2 * du * grid.spacing);
    const double dv_down = (energy_with(0, dd) - energy_with(0, -dd)) / (2 * dd * grid.spacing);
    CAPTURE(k);
    CHECK(xc.v_up[k] == doctest::Approx(dv_up).epsilon(1e-6));
    CHECK(xc.v_down[k] == doctest::Approx(dv_down).epsilon(1e-6));
  }
  const std::vector<double> zero(x.size(), 0.0);
  const XcResult none = lda_xc(zero, zero, grid.spacing);
  CHECK(none.energy == 0.0);
  for (double v : none.v_up) CHECK(v == 0.0);
}

TEST_CASE("non-interacting Kohn-Sham limit") {
  const ScfResult r = scf(trap(1, 0.5, 1.0, false));
  CHECK(r.energy == doctest::Approx(0.5).epsilon(1e-3));
  const ScfResult two = scf(trap(2, 1.0, 1.0, false));
  CHECK(two.energy == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("self-consistent energies of small dots") {
  const ScfResult singlet = scf(trap(2, 0.0, 1.0));
  CHECK(std::abs(singlet.energy - 1.111) < 0.05);
  const ScfResult doublet = scf(trap(3, 0.5, 1.0));
  CHECK(std::abs(doublet.energy - 3.385) < 0.05);
  const ScfResult dilute = scf(trap(2, 1.0, 0.1));
  CHECK(dilute.energy < 0.0);

  const KohnShamState& s = doublet.state;
  const double h = s.density.spacing();
  const Mat gram = s.orbitals_up.transpose() * s.orbitals_up * h;
  CHECK((gram - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(s.orbitals_down.cols() == 1);
  CHECK(s.density.integral() == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(s.eigenvalues_up[0] < s.eigenvalues_up[1]);
  for (std::size_t i = 1; i < doublet.residuals.size(); ++i) CHECK(doublet.residuals[i] >= 0.0);
}

TEST_CASE("converged energy does not depend on the mixing") {
  ScfOptions slow;
  slow.mixing = 0.15;
  const ScfResult a = scf(trap(2, 0.0, 1.0));
  const ScfResult b = scf(trap(2, 0.0, 1.0), {}, slow);
  CHECK(a.energy == doctest::Approx(b.energy).epsilon(1e-8));
  CHECK(b.mixing == 0.15);
}

TEST_CASE("SCF failures and invalid input") {
  ScfOptions hopeless;
  hopeless.max_iterations = 3;
  hopeless.mixing_retries = 1;
  try {
    scf(trap(2, 0.0, 1.0), {}, hopeless);
    FAIL("expected a convergence failure");
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).size() > 0);
  }
  CHECK_THROWS_AS(Grid1D({2, 0.1}).validate(), UsageError);
  CHECK_THROWS_AS(Grid1D({100, -0.1}).validate(), UsageError);
  SystemSpec cavity = trap(1, 0.5, 1.0);
  cavity.cavity = CavitySpec{};
  CHECK_THROWS_AS(scf(cavity), UsageError);
  ScfOptions bad;
  bad.mixing = 0.0;
  CHECK_THROWS_AS(scf(trap(1, 0.5, 1.0), {}, bad), UsageError);
}
