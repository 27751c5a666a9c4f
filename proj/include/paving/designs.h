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


// Sparse paving matroids from Steiner systems S(k-1, k, n), the basis lower
// bound and the closed-form Tutte polynomial of a sparse paving matroid.

#ifndef PAVING_DESIGNS_H_
#define PAVING_DESIGNS_H_

#include <vector>

#include "paving/common.h"
#include "paving/matroid.h"
#include "paving/tutte.h"

namespace paving {

struct BlockDesign {
  int n = 0;
  int k = 0;
  std::vector<ElementSet> blocks;

  int t() const { return k - 1; }
};

// Points 0..6, lines 013, 124, 235, 346, 450, 561, 602.
BlockDesign FanoPlane();

// True iff every (k-1)-subset of points lies in exactly one block. Throws
// UnequalBlockSizes when some block does not have k points.
bool VerifySteiner(const BlockDesign& design);

// Rank-k matroid whose bases are the k-subsets that are not blocks. Throws
// NotSteiner unless VerifySteiner holds.
Matroid SparseFromSteiner(const BlockDesign& design);

// (n - r) / r * C(n, r - 1), exact. Requires 1 <= r <= n.
Rational SparseBasisBound(int n, int r);

// Number of circuit-hyperplanes of m.
int CircuitHyperplaneCount(const Matroid& m);

// Tutte polynomial of a rank-r sparse paving matroid on n elements with
// `lambda` circuit-hyperplanes. Throws InvalidRank unless 1 <= r <= n - 1 and
// InvalidLambda unless 0 <= lambda <= C(n, r).
TuttePolynomial TutteSparseClosedForm(int n, int r, int lambda);

}  // namespace paving

#endif  // PAVING_DESIGNS_H_
