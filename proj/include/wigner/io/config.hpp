// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wigner/cavity.hpp"
#include "wigner/dft.hpp"
#include "wigner/errors.hpp"
#include "wigner/svm.hpp"

namespace wigner::io {

enum class Method { kEcg, kDft, kEcgCavity };

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);

/// Raised for malformed or inconsistent run configurations. `line` is 0 when
/// the problem is not tied to a single line.
class ConfigError : public UsageError {
 public:
  ConfigError(std::string source, int line, std::string field, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  int line_;
  std::string field_;
};

struct RunConfig {
  Method method = Method::kEcg;
  SystemSpec system;  // system.cavity is set exactly for kEcgCavity
  OptimizerConfig optimizer;
  /// > 0: pick n_max with the truncation search, cavity n_max is its ceiling
  double photon_tolerance = 0.0;
  int photon_terms_per_block = 20;
  dft::Grid1D grid;  // density export grid and Kohn-Sham grid
  dft::ScfOptions scf;
  std::string output_dir = "out";

  void validate() const;
  /// Basis-set methods need omega > 0 (the grid of the DFT path is a box).
  void require_bound_states() const;
};

/// Sectioned key = value text. Every key is optional except [system]
/// electrons/spin/omega and, for ECG methods, [run] seed.
RunConfig parse_run_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_run_config(const std::filesystem::path& path);

/// Canonical text form with every field spelled out; parsing it gives back
/// an identical configuration.
std::string serialize_run_config(const RunConfig& config);

/// 64-bit FNV-1a of the canonical text (output_dir excluded), as 16 hex digits.
std::string config_hash(const RunConfig& config);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

}  // namespace wigner::io
