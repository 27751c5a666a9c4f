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


#include "paving/complex_hvec.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "paving/designs.h"
#include "paving/paving_enum.h"

namespace paving {
namespace {

std::vector<BigInt> V(std::initializer_list<int> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

HVector H(std::initializer_list<int> values) { return HVector{V(values)}; }

// f_{i-1} (x - 1)^(d - i) summed against h_k x^(d - k), at an integer x.
void ExpectShiftIdentity(const FVector& f, const HVector& h, int x) {
  const int d = f.dimension();
  BigInt left = 0;
  BigInt right = 0;
  for (int i = 0; i <= d; ++i) left += f.entries[i] * boost::multiprecision::pow(BigInt(x - 1), d - i);
  for (int k = 0; k <= d; ++k) right += h.entries[k] * boost::multiprecision::pow(BigInt(x), d - k);
  EXPECT_EQ(left, right);
}

std::vector<Matroid> SmallMatroids() {
  std::vector<Matroid> out;
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const Matroid& m : EnumeratePaving(r, n, {false, false, true})) {
        out.push_back(m);
      }
    }
  }
  out.push_back(DirectSum(Uniform(2, 2), Uniform(0, 1)));
  out.push_back(Rank2FromParallelClasses({2, 2, 3}));
  return out;
}

TEST(FVectorTest, Examples) {
  EXPECT_EQ(FVectorOf(Uniform(2, 4)).entries, V({1, 4, 6}));
  EXPECT_EQ(FVectorOf(DirectSum(Uniform(1, 2), Uniform(1, 2))).entries,
            V({1, 4, 4}));
  EXPECT_EQ(FVectorOf(SparseFromSteiner(FanoPlane())).entries,
            V({1, 7, 21, 28}));
}

TEST(FVectorTest, MatchesSubsetCount) {
  for (const Matroid& m : SmallMatroids()) {
    EXPECT_EQ(FVectorOf(m).entries, oracle::CountIndependentSets(m));
  }
}

TEST(HVectorTest, Examples) {
  EXPECT_EQ(HFromF(FVector{V({1, 4, 6})}), H({1, 2, 3}));
  const HVector odd = HFromF(FVector{V({1, 0})});
  EXPECT_EQ(odd, H({1, -1}));
  EXPECT_TRUE(odd.HasNegativeEntry());
  EXPECT_THROW(HFromF(FVector{V({2, 1})}), Error);
}

TEST(HVectorTest, ShiftIdentityRoundTripAndSum) {
  for (const Matroid& m : SmallMatroids()) {
    const FVector f = FVectorOf(m);
    const HVector h = HFromF(f);
    for (int x = 0; x <= 2; ++x) ExpectShiftIdentity(f, h, x);
    EXPECT_EQ(FFromH(h), f);
    EXPECT_EQ(h.Sum(), m.num_bases());
    EXPECT_EQ(h.entries.front(), 1);
  }
}

TEST(HVectorTest, AppendingColoopAppendsZero) {
  for (const Matroid& m : EnumeratePaving(3, 6)) {
    const HVector h = HFromF(FVectorOf(m));
    HVector expected = h;
    expected.entries.push_back(0);
    EXPECT_EQ(HFromF(FVectorOf(DirectSum(m, Uniform(1, 1)))), expected);
  }
}

TEST(PavingHVectorTest, Examples) {
  EXPECT_EQ(PavingHVector(4, 2, 6), H({1, 2, 3}));
  EXPECT_EQ(PavingHVector(7, 3, 28), H({1, 4, 10, 13}));
  try {
    PavingHVector(7, 3, 14);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBasisCountOutOfRange);
  }
}

TEST(PavingHVectorTest, UniformProposition) {
  for (int n = 1; n <= 9; ++n) {
    for (int r = 1; r <= n; ++r) {
      const HVector h = HFromF(FVectorOf(Uniform(r, n)));
      for (int k = 0; k <= r; ++k) {
        EXPECT_EQ(h.entries[k], Binomial(n - r + k - 1, k));
      }
    }
  }
}

TEST(PavingHVectorTest, MatchesEnumeratedPaving) {
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (const Matroid& m : EnumeratePaving(r, n, {false, false, true})) {
        EXPECT_EQ(PavingHVector(n, r, m.num_bases()), HFromF(FVectorOf(m)));
      }
    }
  }
}

TEST(HibiTest, Examples) {
  EXPECT_TRUE(HibiCheck(H({1, 2, 3})));
  EXPECT_TRUE(HibiCheck(H({1, 4, 2})));
  EXPECT_FALSE(HibiCheck(H({2, 1})));
  EXPECT_FALSE(HibiCheck(H({1, 3, 2, 2})));
}

TEST(HibiTest, HoldsForColooplessMatroids) {
  for (const Matroid& m : SmallMatroids()) {
    if (Coloops(m) != 0) continue;
    EXPECT_TRUE(HibiCheck(HFromF(FVectorOf(m))));
  }
}

TEST(BrownColbournTest, Examples) {
  EXPECT_TRUE(BrownColbournCheck(H({1, 2, 3})));
  EXPECT_FALSE(BrownColbournCheck(H({1, 4, 2})));
  EXPECT_TRUE(BrownColbournCheck(H({1})));
}

TEST(BrownColbournTest, HoldsForConnectedMatroids) {
  for (const Matroid& m : SmallMatroids()) {
    if (m.size() < 2 || !IsConnected(m)) continue;
    EXPECT_TRUE(BrownColbournCheck(HFromF(FVectorOf(m))));
  }
}

TEST(BrownColbournTest, SingleColoopFails) {
  EXPECT_FALSE(BrownColbournCheck(HFromF(FVectorOf(Uniform(1, 1)))));
}

TEST(BrownColbournTest, RationalSamples) {
  // h = (1, 4, 2): j = 2 gives 1 - 4b + 2b^2, negative for b in (0.29, 1.71).
  EXPECT_TRUE(BrownColbournCheck(H({1, 4, 2}), {Rational(2)}));
  EXPECT_FALSE(BrownColbournCheck(H({1, 4, 2}), {Rational(3, 2)}));
}

TEST(SBoundTest, Values) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(BrownColbournBound(1, n), 1);
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(BrownColbournBound(2, n), n - 3);
  EXPECT_EQ(BrownColbournBound(3, 6), 4);
  EXPECT_THROW(BrownColbournBound(0, 3), Error);
}

}  // namespace
}  // namespace paving
