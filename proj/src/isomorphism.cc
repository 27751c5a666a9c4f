// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paving/isomorphism.h"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace paving {
namespace {

// Number of bases through each element.
std::vector<int> Degrees(const Matroid& m) {
  std::vector<int> degree(m.size(), 0);
  for (ElementSet b : m.bases()) {
    for (int e : ToElements(b)) ++degree[e];
  }
  return degree;
}

// Backtracking search for perm with perm(a) == b, matching element degrees.
bool Extend(const Matroid& a, const Matroid& b, const std::vector<int>& deg_a,
            const std::vector<int>& deg_b, std::vector<int>& perm,
            std::vector<bool>& used, int next) {
  if (next == a.size()) {
    std::vector<ElementSet> image;
    image.reserve(a.bases().size());
    for (ElementSet s : a.bases()) image.push_back(PermuteSet(s, perm));
    std::sort(image.begin(), image.end(), LexLess);
    return image == b.bases();
  }
  for (int target = 0; target < b.size(); ++target) {
    if (used[target] || deg_a[next] != deg_b[target]) continue;
    used[target] = true;
    perm[next] = target;
    if (Extend(a, b, deg_a, deg_b, perm, used, next + 1)) return true;
    used[target] = false;
  }
  return false;
}

}  // namespace

std::string CanonicalForm::Hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  mix(static_cast<std::uint64_t>(rank));
  for (ElementSet s : bases) mix(s);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ElementSet PermuteSet(ElementSet s, const std::vector<int>& perm) {
  ElementSet out = 0;
  while (s != 0) {
    out |= Singleton(perm[std::countr_zero(s)]);
    s &= s - 1;
  }
  return out;
}

Matroid Relabel(const Matroid& m, const std::vector<int>& perm) {
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(PermuteSet(b, perm));
  return Matroid::FromBasesUnchecked(m.size(), std::move(bases));
}

CanonicalForm CanonicalFormOf(const Matroid& m) {
  if (m.size() > kMaxCanonicalElements) {
    throw Error(ErrorCode::kCapExceeded,
                "canonical form limited to " +
                    std::to_string(kMaxCanonicalElements) + " elements");
  }
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{m.size(), m.rank(), {}};
  std::vector<ElementSet> image(m.bases().size());
  bool first = true;
  do {
    for (std::size_t i = 0; i < image.size(); ++i) {
      image[i] = PermuteSet(m.bases()[i], perm);
    }
    std::sort(image.begin(), image.end());
    if (first || image < best.bases) {
      best.bases = image;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool AreIsomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.num_bases() != b.num_bases()) {
    return false;
  }
  const std::vector<int> deg_a = Degrees(a);
  const std::vector<int> deg_b = Degrees(b);
  std::vector<int> sorted_a = deg_a, sorted_b = deg_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  std::vector<int> perm(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return Extend(a, b, deg_a, deg_b, perm, used, 0);
}

}  // namespace paving
