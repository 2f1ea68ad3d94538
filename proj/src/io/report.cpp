// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/io/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wigner/errors.hpp"
#include "wigner/io/config.hpp"

namespace wigner::io {

void write_density_csv(std::ostream& out, const GridDensity& d) {
  out << "x,rho_total,rho_up,rho_down\n";
  for (int k = 0; k < d.size(); ++k) {
    out << format_double(d.x[k]) << ',' << format_double(d.total[k]) << ','
        << format_double(d.up[k]) << ',' << format_double(d.down[k]) << '\n';
  }
}

GridDensity read_density_csv(std::istream& in, const std::string& source) {
  GridDensity d;
  std::string line;
  int number = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << source << ':' << number << ": " << what;
    throw UsageError(msg.str());
  };
  if (!std::getline(in, line)) {
    number = 1;
    fail("empty density file");
  }
  ++number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,rho_total,rho_up,rho_down") fail("unexpected header '" + line + "'");
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v[4];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int c = 0; c < 4; ++c) {
      const auto [next, ec] = std::from_chars(p, end, v[c]);
      if (ec != std::errc()) fail("expected four numeric columns");
      p = next;
      if (c < 3) {
        if (p == end || *p != ',') fail("expected four numeric columns");
        ++p;
      }
    }
    if (p != end) fail("trailing characters after four columns");
    d.x.push_back(v[0]);
    d.total.push_back(v[1]);
    d.up.push_back(v[2]);
    d.down.push_back(v[3]);
  }
  if (d.size() < 2) fail("density needs at least two rows");
  const double h = d.spacing();
  for (int k = 1; k < d.size(); ++k) {
    if (std::abs(d.x[k] - d.x[k - 1] - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw UsageError(source + ": grid is not uniform");
    }
  }
  return d;
}

GridDensity load_density_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  return read_density_csv(in, path.string());
}

void write_photon_csv(std::ostream& out, const PolaritonicState& state) {
  out << "n,probability,block_energy\n";
  for (std::size_t n = 0; n < state.block_norms.size(); ++n) {
    out << n << ',' << format_double(state.block_norms[n]) << ','
        << format_double(state.block_energies[n]) << '\n';
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!out) throw UsageError("failed writing " + path.string());
}

}  // namespace wigner::io
