// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wigner/linalg.hpp"

namespace wigner {

/// Permutation p of {0..n-1}. Acting on an N-slot object it moves the
/// content of slot i into slot p(i); this convention is shared by the
/// spatial and the spin parts so the two always stay consistent.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  static Permutation from_images(const std::vector<int>& images);
  static Permutation transposition(int n, int i, int j);

  int size() const { return size_; }
  int operator()(int i) const { return image_[i]; }
  int sign() const;
  Permutation inverse() const;
  bool is_identity() const;

  /// out[p(i)] = in[i]
  SmallVec apply(const SmallVec& in) const;
  /// out(p(i), p(j)) = in(i, j)
  SmallMat apply(const SmallMat& in) const;
  /// Spin configuration bitmask (bit i = electron i up) moved the same way.
  std::uint32_t apply(std::uint32_t config) const;

  /// All n! permutations in lexicographic order of their image lists.
  static std::vector<Permutation> all(int n);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::int8_t, kMaxParticles> image_{};
  int size_ = 0;
};

}  // namespace wigner
