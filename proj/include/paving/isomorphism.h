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

#ifndef PAVING_ISOMORPHISM_H_
#define PAVING_ISOMORPHISM_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "paving/matroid.h"

namespace paving {

inline constexpr int kMaxCanonicalElements = 9;

// Isomorphism-invariant key: the lexicographically least sorted basis list
// over all relabelings of the ground set.
struct CanonicalForm {
  int n = 0;
  int rank = 0;
  std::vector<ElementSet> bases;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  // 64-bit FNV-1a digest, hex encoded; used for file names.
  std::string Hash() const;
};

// perm[i] is the new label of element i.
ElementSet PermuteSet(ElementSet s, const std::vector<int>& perm);
Matroid Relabel(const Matroid& m, const std::vector<int>& perm);

CanonicalForm CanonicalFormOf(const Matroid& m);
bool AreIsomorphic(const Matroid& a, const Matroid& b);

}  // namespace paving

#endif  // PAVING_ISOMORPHISM_H_
