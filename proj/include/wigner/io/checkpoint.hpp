// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wigner/io/config.hpp"

namespace wigner::io {

enum class Stage { kGrow, kRefine, kDone };

std::string_view to_string(Stage stage);
Stage stage_from_string(std::string_view name);

/// Resumable state of an ECG optimization.
struct Checkpoint {
  static constexpr int kVersion = 1;

  RunConfig config;
  int photon_blocks = 1;  // n_max + 1 of the basis (1 without a cavity)
  std::vector<BasisTerm> terms;
  OptimizerProgress progress;
  Stage stage = Stage::kGrow;
  double energy = 0.0;  // E0 of the stored basis
  std::vector<double> trace;
  /// E0 per n_max from an automatic photon truncation search, if one ran
  std::vector<double> photon_energies;
};

/// JSON text; doubles are written in shortest round-trip form.
std::string checkpoint_to_json(const Checkpoint& checkpoint);
/// Throws UsageError on malformed input or an unsupported version.
Checkpoint checkpoint_from_json(const std::string& text);

void save_checkpoint(const Checkpoint& checkpoint, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace wigner::io
