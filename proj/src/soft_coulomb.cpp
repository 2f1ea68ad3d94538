// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/soft_coulomb.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

constexpr int kNodes = 280;       // y from 3.9 down to about -80
constexpr double kStep = 0.3;
constexpr double kTopNode = 3.9;  // e^{-e^3.9} ~ 1e-22
// Below a t <= kSeriesCut the integrand is replaced by its second-order
// small-t expansion; the dropped cubic term stays below 1e-12 absolute.
constexpr double kSeriesCut = 2e-4;

using NodeArray = Eigen::Array<double, kNodes, 1>;

struct NodeTable {
  NodeArray t;
  NodeArray weight;  // h sqrt(t) e^{-t} / sqrt(pi)
};

const NodeTable& nodes() {
  static const NodeTable table = [] {
    NodeTable out;
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    for (int k = 0; k < kNodes; ++k) {
      const double t = std::exp(kTopNode - kStep * k);
      out.t(k) = t;
      out.weight(k) = kStep * std::sqrt(t) * std::exp(-t) * inv_sqrt_pi;
    }
    return out;
  }();
  return table;
}

// sum_{j>=0} t_j^p over nodes t_j = t0 e^{-j stride h}
double geometric(double t0, double p, int stride) {
  return std::pow(t0, p) / (1.0 - std::exp(-stride * kStep * p));
}

[[noreturn]] void fail(const char* what, double mean, double variance, double extra) {
  std::ostringstream msg;
  msg << "soft-Coulomb quadrature " << what << " (mean " << mean << ", variance " << variance
      << ", " << extra << ")";
  throw NumericalError(msg.str());
}

}  // namespace

double soft_coulomb_expectation(double mean, double variance) {
  const NodeTable& table = nodes();
  const double mu2 = mean * mean;
  const double v = std::max(variance, 0.0);
  const double v2 = 2.0 * v;
  // log G(t) = -a t + c t^2 + O(t^3) for the non-singular factor
  // G(t) = e^{-t} (1 + 2vt)^{-1/2} exp(-mu^2 t / (1 + 2vt))
  const double a = 1.0 + v + mu2;
  const double c = v * v + 2.0 * v * mu2;
  const double b = c + 0.5 * a * a;
  if (!std::isfinite(a) || !std::isfinite(b)) fail("got non-finite input", mean, variance, a);

  const double t_cut = kSeriesCut / a;
  int cut = static_cast<int>(std::ceil((kTopNode - std::log(t_cut)) / kStep));
  cut = std::max(cut, 0);
  if (cut >= kNodes - 1) fail("range exceeded", mean, variance, a);

  double even = 0.0;
  double odd = 0.0;
  if (cut > 0) {
    const auto t = table.t.head(cut);
    const Eigen::ArrayXd inv_q = (1.0 + v2 * t).inverse();
    const Eigen::ArrayXd f = table.weight.head(cut) * inv_q.sqrt() * (-(mu2 * t) * inv_q).exp();
    for (int k = 0; k < cut; ++k) (k % 2 == 0 ? even : odd) += f(k);
  }
  // nodes k >= cut: h/sqrt(pi) sum sqrt(t) (1 - a t + b t^2)
  const double scale = kStep / std::sqrt(std::numbers::pi);
  auto series = [&](double t0, int stride) {
    return scale * (geometric(t0, 0.5, stride) - a * geometric(t0, 1.5, stride) +
                    b * geometric(t0, 2.5, stride));
  };
  const double t_first = table.t(cut);
  const double t_second = table.t(cut + 1);
  (cut % 2 == 0 ? even : odd) += series(t_first, 2);
  (cut % 2 == 0 ? odd : even) += series(t_second, 2);

  // each parity class alone is a trapezoid rule of step 2h; the full
  // step-h rule is much more accurate than their spread
  if (!(std::abs(even - odd) <= 1e-5)) fail("did not converge", mean, variance, even - odd);
  return even + odd;
}

double soft_coulomb_element(const QuadraticForm& bra, const QuadraticForm& ket, int i,
                            int j) {
  if (i == j) throw UsageError("soft-Coulomb element needs two distinct particles");
  const GaussianProduct product(bra, ket);
  return std::exp(product.log_overlap()) *
         soft_coulomb_expectation(product.pair_mean(i, j), product.pair_variance(i, j));
}

}  // namespace wigner
