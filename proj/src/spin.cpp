// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/spin.hpp"

#include <cmath>
#include <map>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

using Dense = std::vector<double>;

// Highest-weight-path state of the first k electrons with projection m.
Dense coupled_state(const std::vector<double>& path, int k, double m,
                    std::map<std::pair<int, long>, Dense>& memo) {
  const double j = path[k - 1];
  Dense out(std::size_t{1} << k, 0.0);
  if (std::abs(m) > j + 1e-12) return out;
  const auto key = std::make_pair(k, std::lround(2.0 * m));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  if (k == 1) {
    out[m > 0 ? 1 : 0] = 1.0;
    memo.emplace(key, out);
    return out;
  }
  const double j1 = path[k - 2];
  const std::uint32_t up_bit = 1u << (k - 1);
  double c_up = 0.0;
  double c_down = 0.0;
  if (std::abs(j - (j1 + 0.5)) < 1e-12) {
    c_up = std::sqrt((j1 + m + 0.5) / (2.0 * j1 + 1.0));
    c_down = std::sqrt(std::max(0.0, (j1 - m + 0.5) / (2.0 * j1 + 1.0)));
  } else {
    c_up = -std::sqrt(std::max(0.0, (j1 - m + 0.5) / (2.0 * j1 + 1.0)));
    c_down = std::sqrt(std::max(0.0, (j1 + m + 0.5) / (2.0 * j1 + 1.0)));
  }
  if (c_up != 0.0) {
    const Dense lower = coupled_state(path, k - 1, m - 0.5, memo);
    for (std::size_t c = 0; c < lower.size(); ++c) out[c | up_bit] += c_up * lower[c];
  }
  if (c_down != 0.0) {
    const Dense lower = coupled_state(path, k - 1, m + 0.5, memo);
    for (std::size_t c = 0; c < lower.size(); ++c) out[c] += c_down * lower[c];
  }
  memo.emplace(key, out);
  return out;
}

void check_compatible(const SpinFunction& bra, const Permutation& perm,
                      const SpinFunction& ket) {
  if (bra.n_electrons != ket.n_electrons || perm.size() != ket.n_electrons) {
    throw UsageError("spin overlap between functions of different electron counts");
  }
}

}  // namespace

std::vector<double> SpinFunction::dense() const {
  std::vector<double> out(std::size_t{1} << n_electrons, 0.0);
  for (const auto& [config, coefficient] : terms) out[config] += coefficient;
  return out;
}

double SpinFunction::norm_squared() const {
  double sum = 0.0;
  for (const auto& term : terms) sum += term.second * term.second;
  return sum;
}

std::vector<double> coupling_path(int n_electrons, double total_spin) {
  const int paired = n_electrons - static_cast<int>(std::lround(2.0 * total_spin));
  if (paired < 0 || paired % 2 != 0 || n_electrons < 1) {
    throw UsageError("spin " + std::to_string(total_spin) + " impossible for " +
                     std::to_string(n_electrons) + " electrons");
  }
  std::vector<double> path;
  path.reserve(n_electrons);
  for (int k = 1; k <= n_electrons; ++k) {
    if (k <= paired) {
      path.push_back(k % 2 == 1 ? 0.5 : 0.0);
    } else {
      path.push_back(0.5 * (k - paired));
    }
  }
  return path;
}

SpinFunction make_spin_function(int n_electrons, double total_spin) {
  if (n_electrons > kMaxParticles) throw UsageError("too many electrons");
  const auto path = coupling_path(n_electrons, total_spin);
  std::map<std::pair<int, long>, Dense> memo;
  const Dense dense = coupled_state(path, n_electrons, total_spin, memo);

  SpinFunction chi;
  chi.n_electrons = n_electrons;
  chi.total_spin = total_spin;
  chi.sz = total_spin;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (std::abs(dense[c]) > 1e-15) chi.terms.emplace_back(static_cast<std::uint32_t>(c), dense[c]);
  }
  return chi;
}

std::vector<double> apply_s_squared(const SpinFunction& chi) {
  const int n = chi.n_electrons;
  const Dense in = chi.dense();
  Dense out(in.size(), 0.0);
  const double diagonal = 0.75 * n - 0.25 * n * (n - 1);
  for (std::size_t c = 0; c < in.size(); ++c) out[c] += diagonal * in[c];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto swap = Permutation::transposition(n, i, j);
      for (std::size_t c = 0; c < in.size(); ++c) {
        if (in[c] != 0.0) out[swap.apply(static_cast<std::uint32_t>(c))] += in[c];
      }
    }
  }
  return out;
}

double spin_overlap(const SpinFunction& bra, const Permutation& perm,
                    const SpinFunction& ket) {
  check_compatible(bra, perm, ket);
  const Dense target = bra.dense();
  double sum = 0.0;
  for (const auto& [config, coefficient] : ket.terms) {
    sum += coefficient * target[perm.apply(config)];
  }
  return sum;
}

double spin_overlap_up(const SpinFunction& bra, const Permutation& perm,
                       const SpinFunction& ket, int slot) {
  check_compatible(bra, perm, ket);
  const Dense target = bra.dense();
  double sum = 0.0;
  for (const auto& [config, coefficient] : ket.terms) {
    const std::uint32_t moved = perm.apply(config);
    if (moved & (1u << slot)) sum += coefficient * target[moved];
  }
  return sum;
}

}  // namespace wigner
