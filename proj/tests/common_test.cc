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


#include "paving/common.h"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

namespace paving {
namespace {

TEST(BinomialTest, SmallValues) {
  EXPECT_EQ(Binomial(7, 3), 35);
  EXPECT_EQ(Binomial(0, 0), 1);
  EXPECT_EQ(Binomial(5, 6), 0);
  EXPECT_EQ(Binomial(5, -1), 0);
}

TEST(BinomialTest, ZeroBottomIsOneForAnyTop) {
  EXPECT_EQ(Binomial(-1, 0), 1);
  EXPECT_EQ(Binomial(-7, 0), 1);
}

TEST(BinomialTest, TopBelowPositiveBottomIsZero) {
  EXPECT_EQ(Binomial(-1, 1), 0);
  EXPECT_EQ(Binomial(2, 3), 0);
}

TEST(BinomialTest, PascalRule) {
  for (int n = 1; n < 40; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(Binomial(n, k), Binomial(n - 1, k) + Binomial(n - 1, k - 1));
    }
  }
}

TEST(BinomialTest, LargeValuesAreExact) {
  EXPECT_EQ(ToString(Binomial(100, 50)),
            "100891344545564193334812497256");
}

TEST(SubsetTest, FixedSizeEnumerationCountsAndOrder) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<ElementSet> seen;
      ForEachSubsetOfSize(n, k, [&](ElementSet s) { seen.push_back(s); });
      EXPECT_EQ(BigInt(seen.size()), Binomial(n, k));
      EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
      for (ElementSet s : seen) {
        EXPECT_EQ(Cardinality(s), k);
        EXPECT_EQ(s & ~FullSet(n), 0u);
      }
    }
  }
}

TEST(SubsetTest, AllSubsetsOfMask) {
  std::set<ElementSet> seen;
  ForEachSubsetOf(0b101101u, [&](ElementSet s) { seen.insert(s); });
  EXPECT_EQ(seen.size(), 16u);
  for (ElementSet s : seen) EXPECT_EQ(s & ~0b101101u, 0u);
}

TEST(LexLessTest, MatchesSortedElementLists) {
  for (ElementSet a = 0; a < 64; ++a) {
    for (ElementSet b = 0; b < 64; ++b) {
      if (Cardinality(a) != Cardinality(b)) continue;
      EXPECT_EQ(LexLess(a, b), ToElements(a) < ToElements(b)) << a << " " << b;
    }
  }
}

TEST(ElementListTest, RoundTrip) {
  EXPECT_EQ(ToElements(FromElements({0, 3, 5})), (std::vector<int>{0, 3, 5}));
  EXPECT_EQ(FromElements({}), 0u);
}

TEST(ErrorTest, CarriesCode) {
  try {
    throw Error(ErrorCode::kNotSteiner, "x");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSteiner);
    EXPECT_EQ(ErrorCodeName(e.code()), "NotSteiner");
  }
}

}  // namespace
}  // namespace paving
