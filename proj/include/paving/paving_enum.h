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

// Enumeration of small paving and sparse paving matroids up to isomorphism.
//
// A rank-r paving matroid (r >= 2) is determined by its hyperplanes, which
// form an (r-1)-partition of the ground set: blocks of size >= r-1 with every
// (r-1)-subset in exactly one block. Only the blocks of size >= r matter
// (the rest are the uncovered (r-1)-subsets), and those are exactly families
// of sets of size >= r meeting pairwise in at most r-2 elements. Families are
// generated orderly: each isomorphism class is visited once, through its
// lexicographically least labeled representative.
//
// Paving matroids of rank >= 2 are automatically loopless; the loopless flag
// only matters for rank 1, where the single hyperplane is the set of loops.

#ifndef PAVING_PAVING_ENUM_H_
#define PAVING_PAVING_ENUM_H_

#include <cstdint>
#include <vector>

#include "paving/isomorphism.h"
#include "paving/matroid.h"

namespace paving {

struct PartitionFamily {
  int n = 0;
  int r = 0;
  std::vector<ElementSet> blocks;

  // Every block has >= r-1 elements and each (r-1)-subset lies in exactly
  // one block.
  bool IsPartition() const;
};

// Adds the (r-1)-subsets not covered by any of `large_blocks`.
PartitionFamily CompletePartition(int n, int r,
                                  std::vector<ElementSet> large_blocks);

// Rank-r paving matroid whose bases are the r-subsets in no block. Throws
// InvalidArgument for a non-partition and NoBases when nothing remains.
Matroid MatroidFromPartition(const PartitionFamily& family);

struct EnumerationOptions {
  bool loopless = true;
  bool coloopless = true;
  // Refuse ground sets past the documented caps (n <= 7; n = 8 for r <= 3).
  bool enforce_caps = true;
};

// Pairwise non-isomorphic, sorted by canonical form.
std::vector<Matroid> EnumeratePaving(int r, int n,
                                     const EnumerationOptions& options = {});

// Sparse paving matroids of rank r on n elements up to isomorphism: stable
// sets of the Johnson graph J(n, r) taken as circuit-hyperplanes. Sorted by
// canonical form.
std::vector<Matroid> EnumerateSparsePaving(
    int r, int n, const EnumerationOptions& options = {});

struct GResult {
  std::int64_t value = 0;  // min b(M) - C(n-1, r-1)
  Matroid witness = Uniform(0, 0);
  std::int64_t class_size = 0;
};

// Minimum h_r over loopless, coloopless rank-r paving matroids on n
// elements. Throws InvalidArgument when that class is empty.
GResult G(int r, int n, const EnumerationOptions& options = {});

}  // namespace paving

#endif  // PAVING_PAVING_ENUM_H_
