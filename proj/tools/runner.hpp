// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wigner/io/checkpoint.hpp"
#include "wigner/io/config.hpp"

namespace wigner::app {

using Logger = std::function<void(std::string_view)>;

struct RunOptions {
  bool stop_after_growth = false;
  Logger log;
};

struct RunResult {
  bool complete = false;  // false when stopped early on request
  nlohmann::json summary;
};

/// Runs one configuration and writes its artifacts into config.output_dir:
/// summary.json and density.csv always, checkpoint.json for ECG methods,
/// photons.csv for cavity runs.
RunResult run(const io::RunConfig& config, const RunOptions& options = {});

/// Continues an ECG run from a checkpoint; a finished checkpoint just
/// regenerates the artifacts. The rebuilt basis must reproduce the stored
/// ground energy to 1e-12 (relative to max(1, |E0|)), else NumericalError.
RunResult resume(const io::Checkpoint& checkpoint, const std::string& output_dir,
                 const RunOptions& options = {});

enum class SweepParameter { kOmega, kLambda, kOmegaP };
SweepParameter sweep_parameter_from_string(std::string_view name);

struct SweepPoint {
  double value = 0.0;
  std::string status;  // "ok", "config-error: ..." or "solver-failure: ..."
  nlohmann::json summary;
};

/// One run per value in <output_dir>/<param>_<index>/, collated into
/// <output_dir>/sweep.csv. Failing points are recorded and skipped.
std::vector<SweepPoint> sweep(const io::RunConfig& base, SweepParameter parameter,
                              const std::vector<double>& values, const std::string& output_dir,
                              const RunOptions& options = {});

}  // namespace wigner::app
