// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/svm.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

std::vector<int> indices_without(int size, int skip) {
  std::vector<int> idx;
  idx.reserve(size);
  for (int i = 0; i < size; ++i) {
    if (i != skip) idx.push_back(i);
  }
  return idx;
}

// Accepted steps may not raise the energy by more than rounding noise.
double monotonic_slack(double energy) { return 1e-11 * (1.0 + std::abs(energy)); }

}  // namespace

void OptimizerConfig::validate() const {
  if (target_size < 1) throw UsageError("basis size must be >= 1");
  if (candidates_per_step < 1) throw UsageError("candidates per step must be >= 1");
  if (refinement_sweeps < 0) throw UsageError("refinement sweeps must be >= 0");
  if (!(exponent_min > 0.0) || !(exponent_max > exponent_min)) {
    throw UsageError("exponent range must satisfy 0 < min < max");
  }
  if (!(local_fraction >= 0.0 && local_fraction <= 1.0)) {
    throw UsageError("local fraction must be in [0, 1]");
  }
  if (!(overlap_cutoff > 0.0 && overlap_cutoff < 1.0)) {
    throw UsageError("overlap cutoff must be in (0, 1)");
  }
  if (!(min_norm_ratio >= 0.0 && min_norm_ratio < 1.0)) {
    throw UsageError("minimum norm ratio must be in [0, 1)");
  }
}

double OptimizerConfig::effective_shift_range(const SystemSpec& system) const {
  if (shift_range > 0.0) return shift_range;
  const double omega = system.confinement.omega;
  if (!(omega > 0.0)) return 5.0;
  return std::max(5.0, 4.0 / std::sqrt(omega));
}

StochasticOptimizer::StochasticOptimizer(const EcgModel& model, OptimizerConfig config)
    : model_(model), config_(config), rng_(config.seed) {
  config_.validate();
  shift_range_ = config_.effective_shift_range(model_.system());
  photon_hi_ = model_.photon_max();
}

void StochasticOptimizer::restrict_photons(int lo, int hi) {
  if (lo < 0 || hi < lo || hi > model_.photon_max()) {
    throw UsageError("photon block range outside [0, n_max]");
  }
  photon_lo_ = lo;
  photon_hi_ = hi;
}

int StochasticOptimizer::draw_photon() {
  const int blocks = photon_hi_ - photon_lo_ + 1;
  if (blocks == 1) return photon_lo_;
  return photon_lo_ + std::min(blocks - 1, static_cast<int>(uniform() * blocks));
}

double StochasticOptimizer::uniform() {
  // 53 random bits -> [0, 1); independent of the standard library's
  // distribution implementations
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

BasisTerm StochasticOptimizer::draw_global(double widen) {
  const int n = model_.particles();
  const double lo = std::log(config_.exponent_min / widen);
  const double hi = std::log(config_.exponent_max * widen);
  const double range = shift_range_ * widen;
  auto exponent = [&] { return std::exp(lo + (hi - lo) * uniform()); };

  BasisTerm t;
  t.gaussian.alpha = SmallMat::Zero(n, n);
  t.gaussian.beta.resize(n);
  t.gaussian.shift.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) t.gaussian.alpha(i, j) = t.gaussian.alpha(j, i) = exponent();
  }
  for (int i = 0; i < n; ++i) t.gaussian.beta(i) = exponent();
  for (int i = 0; i < n; ++i) t.gaussian.shift(i) = range * (2.0 * uniform() - 1.0);
  t.photon = draw_photon();
  return t;
}

BasisTerm StochasticOptimizer::draw_local(const BasisSet& basis) {
  const int k = std::min(basis.size() - 1, static_cast<int>(uniform() * basis.size()));
  BasisTerm t = basis.term(k).term;
  const int n = model_.particles();
  const double lo = config_.exponent_min;
  const double hi = config_.exponent_max;
  // multiplicative factor in [1/3, 3]
  auto scale = [&](double x) {
    return std::clamp(x * std::exp(std::log(3.0) * (2.0 * uniform() - 1.0)), lo, hi);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      t.gaussian.alpha(i, j) = t.gaussian.alpha(j, i) = scale(t.gaussian.alpha(i, j));
    }
  }
  for (int i = 0; i < n; ++i) t.gaussian.beta(i) = scale(t.gaussian.beta(i));
  for (int i = 0; i < n; ++i) {
    const double step = 0.2 * shift_range_ * (2.0 * uniform() - 1.0);
    t.gaussian.shift(i) = std::clamp(t.gaussian.shift(i) + step, -shift_range_, shift_range_);
  }
  if (t.photon < photon_lo_ || t.photon > photon_hi_ ||
      (photon_hi_ > photon_lo_ && uniform() < 0.5)) {
    t.photon = draw_photon();
  }
  return t;
}

SpectrumResult StochasticOptimizer::spectrum(const BasisSet& basis) const {
  return solve_generalized(basis.hamiltonian(), basis.overlap(), config_.overlap_cutoff);
}

bool StochasticOptimizer::best_candidate(const BasisSet& basis, int skip,
                                         const SpectrumResult& reduced, bool widened,
                                         Candidate& best) {
  const BorderedSpectrum bordered = reduced.energies.size() > 0 ? BorderedSpectrum(reduced)
                                                                : BorderedSpectrum();
  const int k = basis.size();
  const auto kept = indices_without(k, skip);
  Vec h_col(static_cast<Eigen::Index>(kept.size()));
  Vec s_col(static_cast<Eigen::Index>(kept.size()));
  bool found = false;
  for (int c = 0; c < config_.candidates_per_step; ++c) {
    const bool local = !widened && !basis.empty() && uniform() < config_.local_fraction;
    BasisTerm raw = local ? draw_local(basis) : draw_global(widened ? 10.0 : 1.0);
    try {
      PreparedTerm prepared = model_.prepare(std::move(raw), config_.min_norm_ratio);
      std::vector<MatrixElements> column(k);
      for (int j : kept) column[j] = model_.element(basis.term(j), prepared);
      const MatrixElements self = model_.element(prepared, prepared);
      for (std::size_t r = 0; r < kept.size(); ++r) {
        h_col(static_cast<Eigen::Index>(r)) = column[kept[r]].hamiltonian();
        s_col(static_cast<Eigen::Index>(r)) = column[kept[r]].overlap;
      }
      const auto energy =
          bordered.lowest(h_col, s_col, self.hamiltonian(), self.overlap, config_.overlap_cutoff);
      if (!energy || !std::isfinite(*energy)) continue;
      if (!found || *energy < best.energy) {
        best.term = std::move(prepared);
        best.column = std::move(column);
        best.self = self;
        best.energy = *energy;
        found = true;
      }
    } catch (const NumericalError&) {
      // rejected or ill-conditioned candidate: simply not admissible
    }
  }
  return found;
}

void StochasticOptimizer::grow(BasisSet& basis, int target) {
  SpectrumResult current;
  if (!basis.empty()) current = spectrum(basis);
  while (basis.size() < target) {
    Candidate best;
    bool found = best_candidate(basis, -1, current, false, best);
    if (!found) {
      log("no admissible candidate; retrying with widened ranges");
      found = best_candidate(basis, -1, current, true, best);
    }
    if (!found) {
      std::ostringstream msg;
      msg << "basis growth stalled at K=" << basis.size() << ": no admissible candidate in "
          << 2 * config_.candidates_per_step << " draws (normal and widened ranges)";
      throw ConvergenceError(msg.str());
    }
    const double previous =
        current.energies.size() > 0 ? current.ground_energy() : std::numeric_limits<double>::infinity();
    basis.append(std::move(best.term), best.column, best.self);
    SpectrumResult updated = spectrum(basis);
    if (updated.ground_energy() > previous + monotonic_slack(previous)) {
      // full solve disagrees with the bordered estimate; drop the term
      basis.remove(basis.size() - 1);
      log("rejected a step that raised the energy after the full solve");
      continue;
    }
    current = std::move(updated);
    trace_.push_back(current.ground_energy());
    if (basis.size() % 10 == 0) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "K=" << basis.size() << " E0=" << current.ground_energy();
      log(msg.str());
    }
  }
}

void StochasticOptimizer::refine(BasisSet& basis, int sweeps) {
  if (basis.size() < 2) throw UsageError("refinement needs at least two basis terms");
  const int k = basis.size();
  SpectrumResult current = spectrum(basis);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int index = next_refine_index_; index < k; ++index) {
      next_refine_index_ = index;
      const auto kept = indices_without(k, index);
      const SpectrumResult reduced =
          solve_generalized(basis.hamiltonian()(kept, kept), basis.overlap()(kept, kept),
                            config_.overlap_cutoff);
      Candidate best;
      if (!best_candidate(basis, index, reduced, false, best)) continue;
      const double before = current.ground_energy();
      if (!(best.energy < before)) continue;

      const PreparedTerm old_term = basis.term(index);
      std::vector<MatrixElements> old_column(k);
      for (int j = 0; j < k; ++j) {
        if (j != index) old_column[j] = model_.element(basis.term(j), old_term);
      }
      const MatrixElements old_self = model_.element(old_term, old_term);

      basis.replace(index, std::move(best.term), best.column, best.self);
      SpectrumResult updated = spectrum(basis);
      if (updated.ground_energy() > before + monotonic_slack(before)) {
        basis.replace(index, old_term, old_column, old_self);
        continue;
      }
      current = std::move(updated);
      trace_.push_back(current.ground_energy());
    }
    next_refine_index_ = 0;
    ++sweeps_done_;
    std::ostringstream msg;
    msg.precision(12);
    msg << "sweep " << sweeps_done_ << " E0=" << current.ground_energy();
    log(msg.str());
  }
}

OptimizerProgress StochasticOptimizer::progress() const {
  std::ostringstream state;
  state << rng_;
  return {state.str(), sweeps_done_, next_refine_index_};
}

void StochasticOptimizer::restore(const OptimizerProgress& progress) {
  std::istringstream state(progress.rng_state);
  state >> rng_;
  if (state.fail()) throw UsageError("corrupt random generator state");
  sweeps_done_ = progress.sweeps_done;
  next_refine_index_ = progress.next_refine_index;
}

void StochasticOptimizer::log(const std::string& message) const {
  if (logger_) logger_(message);
}

BasisSet grow_basis(const SystemSpec& system, const OptimizerConfig& config) {
  const EcgModel model(system);
  StochasticOptimizer optimizer(model, config);
  BasisSet basis;
  optimizer.grow(basis, config.target_size);
  return basis;
}

BasisSet refine_basis(const SystemSpec& system, BasisSet basis, const OptimizerConfig& config) {
  const EcgModel model(system);
  OptimizerConfig shifted = config;
  shifted.seed = config.seed ^ 0x9e3779b97f4a7c15ULL;
  StochasticOptimizer optimizer(model, shifted);
  optimizer.refine(basis, config.refinement_sweeps);
  return basis;
}

}  // namespace wigner
