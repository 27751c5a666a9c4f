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

#include <gtest/gtest.h>

#include "paving/isomorphism.h"
#include "paving/paving_enum.h"

namespace paving {
namespace {

// S(2, 3, 9): the affine plane of order 3.
BlockDesign AffinePlane() {
  BlockDesign design{9, 3, {}};
  auto point = [](int x, int y) { return 3 * x + y; };
  for (int x = 0; x < 3; ++x) {
    design.blocks.push_back(FromElements({point(x, 0), point(x, 1), point(x, 2)}));
  }
  for (int slope = 0; slope < 3; ++slope) {
    for (int c = 0; c < 3; ++c) {
      std::vector<int> line;
      for (int x = 0; x < 3; ++x) line.push_back(point(x, (slope * x + c) % 3));
      std::sort(line.begin(), line.end());
      design.blocks.push_back(FromElements(line));
    }
  }
  return design;
}

bool CircuitHyperplanesFormSteiner(const Matroid& m) {
  std::vector<ElementSet> blocks;
  for (ElementSet c : Circuits(m)) {
    if (Cardinality(c) == m.rank()) blocks.push_back(c);
  }
  return VerifySteiner(BlockDesign{m.size(), m.rank(), blocks});
}

TEST(SteinerTest, Fano) {
  const BlockDesign fano = FanoPlane();
  EXPECT_TRUE(VerifySteiner(fano));
  EXPECT_EQ(fano.blocks.size(), 7u);
  EXPECT_EQ(fano.t(), 2);
  const Matroid m = SparseFromSteiner(fano);
  EXPECT_EQ(m.num_bases(), 28);
  EXPECT_EQ(Rational(m.num_bases()), SparseBasisBound(7, 3));
  EXPECT_TRUE(IsSparsePaving(m));
}

TEST(SteinerTest, AffinePlane) {
  const BlockDesign design = AffinePlane();
  EXPECT_TRUE(VerifySteiner(design));
  const Matroid m = SparseFromSteiner(design);
  EXPECT_EQ(m.num_bases(), 72);
  EXPECT_EQ(Rational(72), SparseBasisBound(9, 3));
}

TEST(SteinerTest, Rejections) {
  BlockDesign all_triples{4, 3, {}};
  ForEachSubsetOfSize(4, 3, [&](ElementSet s) { all_triples.blocks.push_back(s); });
  EXPECT_FALSE(VerifySteiner(all_triples));
  EXPECT_FALSE(VerifySteiner(BlockDesign{3, 2, {}}));
  try {
    SparseFromSteiner(all_triples);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSteiner);
  }
  try {
    VerifySteiner(BlockDesign{4, 2, {FromElements({0, 1}), FromElements({1, 2, 3})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnequalBlockSizes);
  }
}

TEST(BoundTest, Values) {
  EXPECT_EQ(SparseBasisBound(7, 3), Rational(28));
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(SparseBasisBound(n, 1), Rational(n - 1));
  EXPECT_EQ(SparseBasisBound(4, 2), Rational(4));
  EXPECT_EQ(SparseBasisBound(5, 2), Rational(15, 2));
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(TutteSparseClosedForm(4, 2, 0), Tutte(Uniform(2, 4)));
  const TuttePolynomial fano = TutteSparseClosedForm(7, 3, 7);
  EXPECT_EQ(fano, Tutte(SparseFromSteiner(FanoPlane())));
  EXPECT_EQ(fano.Evaluate(1, 1), 28);
  EXPECT_EQ(TutteSparseClosedForm(4, 2, 1).Evaluate(1, 1), 5);
  EXPECT_THROW(TutteSparseClosedForm(4, 2, 7), Error);
  EXPECT_THROW(TutteSparseClosedForm(4, 4, 0), Error);
}

TEST(ClosedFormTest, EnumeratedSparsePaving) {
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r < n; ++r) {
      for (const Matroid& m : EnumerateSparsePaving(r, n, {false, false, true})) {
        const int lambda = CircuitHyperplaneCount(m);
        EXPECT_EQ(BigInt(lambda), Binomial(n, r) - m.num_bases());
        const TuttePolynomial closed = TutteSparseClosedForm(n, r, lambda);
        EXPECT_EQ(closed, Tutte(m));
        EXPECT_TRUE(closed.HasNonNegativeCoefficients());
      }
    }
  }
}

TEST(BoundTest, EqualityExactlyForSteinerSystems) {
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (const Matroid& m : EnumerateSparsePaving(r, n, {false, false, true})) {
        const Rational bound = SparseBasisBound(n, r);
        EXPECT_GE(Rational(m.num_bases()), bound);
        EXPECT_EQ(Rational(m.num_bases()) == bound, CircuitHyperplanesFormSteiner(m))
            << n << "," << r << " b=" << m.num_bases();
      }
    }
  }
}

}  // namespace
}  // namespace paving
