// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wigner/cavity.hpp"
#include "wigner/density.hpp"

namespace wigner::io {

/// Header line "x,rho_total,rho_up,rho_down" followed by one row per point.
void write_density_csv(std::ostream& out, const GridDensity& density);
/// Inverse of write_density_csv; UsageError (with the line number) on bad input.
GridDensity read_density_csv(std::istream& in, const std::string& source = "<csv>");
GridDensity load_density_csv(const std::filesystem::path& path);

/// "n,probability,block_energy"
void write_photon_csv(std::ostream& out, const PolaritonicState& state);

/// Writes `text` to `path` in binary mode, creating parent directories.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace wigner::io
