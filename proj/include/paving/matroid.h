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

// Small matroids stored by their bases.
//
// A Matroid is an immutable value: ground set {0, ..., n-1} plus the set of
// bases, each a bit-indexed ElementSet. Bases are kept sorted in
// lexicographic order of their element lists, so two matroids are equal
// exactly when they have the same ground-set size and the same bases.
// Isomorphism lives in isomorphism.h.

#ifndef PAVING_MATROID_H_
#define PAVING_MATROID_H_

#include <cstdint>
#include <vector>

#include "paving/common.h"

namespace paving {

class Matroid {
 public:
  // Validates the basis axioms (nonempty, equicardinal, basis exchange) for
  // n <= kMaxCheckedElements. For larger ground sets up to
  // kMaxStoredElements only the cheap checks are run.
  static Matroid FromBases(int n, std::vector<ElementSet> bases);
  static Matroid FromBasisLists(int n,
                                const std::vector<std::vector<int>>& bases);

  // No validation beyond sorting; the caller guarantees the axioms. Used by
  // operations that derive a matroid from a valid one.
  static Matroid FromBasesUnchecked(int n, std::vector<ElementSet> bases);

  int size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return FullSet(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::int64_t num_bases() const {
    return static_cast<std::int64_t>(bases_.size());
  }

  bool IsBasis(ElementSet s) const;
  bool IsIndependent(ElementSet s) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int rank, std::vector<ElementSet> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
};

// Rank of every subset, tabulated once. Ground sets up to 20 elements.
class RankTable {
 public:
  explicit RankTable(const Matroid& m);

  int operator()(ElementSet s) const { return rank_[s]; }
  bool IsIndependent(ElementSet s) const {
    return rank_[s] == Cardinality(s);
  }

 private:
  std::vector<std::uint8_t> rank_;
};

Matroid Uniform(int r, int n);
Matroid Dual(const Matroid& m);

// Single-element minors. Remaining elements are relabeled 0..n-2 in their
// original order; if `origin` is given it receives the original label of
// each new element. Deleting a coloop is defined as contracting it and
// contracting a loop is defined as deleting it.
Matroid Delete(const Matroid& m, int e, std::vector<int>* origin = nullptr);
Matroid Contract(const Matroid& m, int e, std::vector<int>* origin = nullptr);

// M / contract \ remove for disjoint sets, relabeled as above.
Matroid Minor(const Matroid& m, ElementSet contract, ElementSet remove,
              std::vector<int>* origin = nullptr);

ElementSet Loops(const Matroid& m);
ElementSet Coloops(const Matroid& m);

int RankOf(const Matroid& m, ElementSet a);
ElementSet Closure(const Matroid& m, ElementSet a);
std::vector<ElementSet> Circuits(const Matroid& m);
std::vector<ElementSet> Hyperplanes(const Matroid& m);
bool IsConnected(const Matroid& m);

// Every circuit has at least rank(M) elements.
bool IsPaving(const Matroid& m);
// Paving, and any two circuits of size rank(M) differ in more than two
// elements.
bool IsSparsePaving(const Matroid& m);

// Elements of `b` are shifted up by a.size().
Matroid DirectSum(const Matroid& a, const Matroid& b);
// Element i gains a parallel copy labeled n + i.
Matroid TwoThickening(const Matroid& m);
// Element i gains a series copy labeled n + i; dual of the thickening of
// the dual.
Matroid TwoStretching(const Matroid& m);
// Adds element n freely: new bases are I + n for independent I of size r-1.
Matroid FreeExtension(const Matroid& m);
// Loopless rank-2 matroid on consecutive parallel classes of the given sizes.
Matroid Rank2FromParallelClasses(const std::vector<int>& sizes);

// True iff some minor of `m` is isomorphic to `minor`.
bool HasMinor(const Matroid& m, const Matroid& minor);

}  // namespace paving

#endif  // PAVING_MATROID_H_
