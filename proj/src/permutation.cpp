// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "wigner/errors.hpp"

namespace wigner {

Permutation::Permutation(int n) : size_(n) {
  if (n < 0 || n > kMaxParticles) throw UsageError("permutation size out of range");
  for (int i = 0; i < n; ++i) image_[i] = static_cast<std::int8_t>(i);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n || seen[images[i]]) {
      throw UsageError("not a permutation");
    }
    seen[images[i]] = true;
    p.image_[i] = static_cast<std::int8_t>(images[i]);
  }
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.image_[i], p.image_[j]);
  return p;
}

int Permutation::sign() const {
  // parity from the cycle decomposition
  std::array<bool, kMaxParticles> visited{};
  int transpositions = 0;
  for (int i = 0; i < size_; ++i) {
    if (visited[i]) continue;
    int length = 0;
    for (int j = i; !visited[j]; j = image_[j]) {
      visited[j] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const {
  Permutation p(size_);
  for (int i = 0; i < size_; ++i) p.image_[image_[i]] = static_cast<std::int8_t>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size_; ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

SmallVec Permutation::apply(const SmallVec& in) const {
  SmallVec out(size_);
  for (int i = 0; i < size_; ++i) out(image_[i]) = in(i);
  return out;
}

SmallMat Permutation::apply(const SmallMat& in) const {
  SmallMat out(size_, size_);
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out(image_[i], image_[j]) = in(i, j);
  }
  return out;
}

std::uint32_t Permutation::apply(std::uint32_t config) const {
  std::uint32_t out = 0;
  for (int i = 0; i < size_; ++i) {
    if (config & (1u << i)) out |= 1u << image_[i];
  }
  return out;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace wigner
