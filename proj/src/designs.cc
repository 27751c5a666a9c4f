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


#include "paving/designs.h"

#include <algorithm>
#include <string>

namespace paving {
namespace {

// Adds c * (x - 1)^a (y - 1)^b to t.
void AddShiftedPower(TuttePolynomial& t, const BigInt& c, int a, int b) {
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      BigInt term = c * Binomial(a, i) * Binomial(b, j);
      if ((a - i + b - j) % 2 != 0) term = -term;
      t.Add(i, j, term);
    }
  }
}

}  // namespace

BlockDesign FanoPlane() {
  BlockDesign fano{7, 3, {}};
  for (int i = 0; i < 7; ++i) {
    fano.blocks.push_back(FromElements({i, (i + 1) % 7, (i + 3) % 7}));
  }
  return fano;
}

bool VerifySteiner(const BlockDesign& design) {
  for (ElementSet block : design.blocks) {
    if (Cardinality(block) != design.k) {
      throw Error(ErrorCode::kUnequalBlockSizes,
                  "every block must have " + std::to_string(design.k) +
                      " points");
    }
    if ((block & ~FullSet(design.n)) != 0) return false;
  }
  if (design.k < 1 || design.k > design.n) return false;
  bool ok = true;
  ForEachSubsetOfSize(design.n, design.k - 1, [&](ElementSet s) {
    if (!ok) return;
    int hits = 0;
    for (ElementSet block : design.blocks) hits += (s & ~block) == 0 ? 1 : 0;
    ok = hits == 1;
  });
  if (ok && BigInt(design.blocks.size()) * design.k !=
                Binomial(design.n, design.k - 1)) {
    throw Error(ErrorCode::kNotSteiner, "block count disagrees with C(n,k-1)/k");
  }
  return ok;
}

Matroid SparseFromSteiner(const BlockDesign& design) {
  if (!VerifySteiner(design)) {
    throw Error(ErrorCode::kNotSteiner,
                "blocks do not form an S(k-1,k,n) Steiner system");
  }
  std::vector<ElementSet> blocks = design.blocks;
  std::sort(blocks.begin(), blocks.end());
  std::vector<ElementSet> bases;
  ForEachSubsetOfSize(design.n, design.k, [&](ElementSet s) {
    if (!std::binary_search(blocks.begin(), blocks.end(), s)) bases.push_back(s);
  });
  if (bases.empty()) {
    throw Error(ErrorCode::kNoBases, "every k-subset is a block");
  }
  return Matroid::FromBases(design.n, std::move(bases));
}

Rational SparseBasisBound(int n, int r) {
  if (r < 1 || r > n) {
    throw Error(ErrorCode::kInvalidRank, "need 1 <= r <= n");
  }
  return Rational(Binomial(n, r - 1) * (n - r), BigInt(r));
}

int CircuitHyperplaneCount(const Matroid& m) {
  const std::vector<ElementSet> circuits = Circuits(m);
  const std::vector<ElementSet> hyperplanes = Hyperplanes(m);
  int count = 0;
  for (ElementSet c : circuits) {
    if (std::find(hyperplanes.begin(), hyperplanes.end(), c) !=
        hyperplanes.end()) {
      ++count;
    }
  }
  return count;
}

TuttePolynomial TutteSparseClosedForm(int n, int r, int lambda) {
  if (r < 1 || r > n - 1) {
    throw Error(ErrorCode::kInvalidRank, "need 1 <= r <= n - 1");
  }
  if (lambda < 0 || Binomial(n, r) < lambda) {
    throw Error(ErrorCode::kInvalidLambda,
                "lambda must lie in [0, C(n, r)]");
  }
  TuttePolynomial t;
  for (int i = 0; i < r; ++i) AddShiftedPower(t, Binomial(n, i), r - i, 0);
  t.Add(0, 0, Binomial(n, r));
  t.Add(1, 1, lambda);
  t.Add(1, 0, -lambda);
  t.Add(0, 1, -lambda);
  for (int i = r + 1; i <= n; ++i) AddShiftedPower(t, Binomial(n, i), 0, i - r);
  return t;
}

}  // namespace paving
