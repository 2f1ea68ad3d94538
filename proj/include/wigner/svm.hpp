// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wigner/basis.hpp"
#include "wigner/eigensolver.hpp"

namespace wigner {

struct OptimizerConfig {
  int target_size = 60;
  int candidates_per_step = 40;
  int refinement_sweeps = 5;
  /// log-uniform range for alpha_ij and beta_i (a.u.^-2)
  double exponent_min = 1e-3;
  double exponent_max = 10.0;
  /// half-width L of the uniform shift range; <= 0 means max(5, 4/sqrt(omega))
  double shift_range = 0.0;
  /// share of candidates drawn as perturbations of an existing term
  double local_fraction = 0.5;
  /// relative overlap-eigenvalue cutoff; also the minimum squared residual
  /// norm a candidate must keep after projecting out the current basis
  double overlap_cutoff = 1e-10;
  double min_norm_ratio = EcgModel::kDefaultMinNormRatio;
  std::uint64_t seed = 1;

  void validate() const;
  double effective_shift_range(const SystemSpec& system) const;
};

/// Everything needed to continue an optimization bit-identically.
struct OptimizerProgress {
  std::string rng_state;
  int sweeps_done = 0;
  int next_refine_index = 0;
};

/// Stochastic variational basis optimizer. Candidates compete on the ground
/// energy of the enlarged problem; only energy-lowering ones are kept.
class StochasticOptimizer {
 public:
  using Logger = std::function<void(std::string_view)>;

  StochasticOptimizer(const EcgModel& model, OptimizerConfig config);

  /// Adds the best of `candidates_per_step` random trials until the basis
  /// holds `target` terms. Throws ConvergenceError when a step finds no
  /// admissible candidate even with widened ranges.
  void grow(BasisSet& basis, int target);

  /// Cyclic replacement sweeps; never raises the ground energy.
  void refine(BasisSet& basis, int sweeps);

  SpectrumResult spectrum(const BasisSet& basis) const;

  /// Ground energy after every accepted step (growth and replacement).
  const std::vector<double>& trace() const { return trace_; }
  const OptimizerConfig& config() const { return config_; }

  OptimizerProgress progress() const;
  void restore(const OptimizerProgress& progress);

  void set_logger(Logger logger) { logger_ = std::move(logger); }

  /// Limits the photon block of new candidates to [lo, hi] (cavity runs).
  void restrict_photons(int lo, int hi);

 private:
  struct Candidate {
    PreparedTerm term;
    std::vector<MatrixElements> column;
    MatrixElements self;
    double energy = 0.0;
  };

  double uniform();
  BasisTerm draw_global(double widen);
  BasisTerm draw_local(const BasisSet& basis);
  int draw_photon();
  /// Best candidate against `basis` with term `skip` excluded (-1: none).
  bool best_candidate(const BasisSet& basis, int skip, const SpectrumResult& reduced,
                      bool widened, Candidate& best);
  void log(const std::string& message) const;

  const EcgModel& model_;
  OptimizerConfig config_;
  std::mt19937_64 rng_;
  double shift_range_ = 5.0;
  int photon_lo_ = 0;
  int photon_hi_ = 0;
  std::vector<double> trace_;
  int sweeps_done_ = 0;
  int next_refine_index_ = 0;
  Logger logger_;
};

/// Grows a basis from scratch to config.target_size.
BasisSet grow_basis(const SystemSpec& system, const OptimizerConfig& config);

/// Runs config.refinement_sweeps replacement sweeps over an existing basis.
BasisSet refine_basis(const SystemSpec& system, BasisSet basis, const OptimizerConfig& config);

}  // namespace wigner
