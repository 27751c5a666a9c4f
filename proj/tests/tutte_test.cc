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


#include "paving/tutte.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "paving/designs.h"
#include "paving/paving_enum.h"

namespace paving {
namespace {

TEST(TutteTest, SmallExamples) {
  TuttePolynomial parallel_pair;
  parallel_pair.Add(1, 0, 1);
  parallel_pair.Add(0, 1, 1);
  EXPECT_EQ(Tutte(Uniform(1, 2)), parallel_pair);
  EXPECT_EQ(Tutte(Uniform(2, 4)).Evaluate(1, 1), 6);
  EXPECT_EQ(Tutte(SparseFromSteiner(FanoPlane())).Evaluate(1, 1), 28);
}

TEST(TutteTest, MatchesRankGeneratingFunction) {
  std::vector<Matroid> pool;
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const Matroid& m : EnumeratePaving(r, n, {false, false, true})) {
        pool.push_back(m);
      }
    }
  }
  pool.push_back(DirectSum(Uniform(2, 2), Uniform(0, 1)));
  pool.push_back(Rank2FromParallelClasses({2, 2, 3}));
  pool.push_back(TwoThickening(Uniform(2, 3)));
  for (const Matroid& m : pool) {
    const TuttePolynomial t = Tutte(m);
    EXPECT_EQ(t, oracle::RankGeneratingTutte(m));
    EXPECT_TRUE(t.HasNonNegativeCoefficients());
    EXPECT_EQ(t.Evaluate(1, 1), m.num_bases());
    EXPECT_EQ(t.Evaluate(2, 2), BigInt(1) << m.size());
  }
}

TEST(TutteTest, DualSwapsVariables) {
  const Matroid m = Rank2FromParallelClasses({1, 2, 3});
  const TuttePolynomial t = Tutte(m);
  const TuttePolynomial dual = Tutte(Dual(m));
  for (const auto& [exponents, c] : t.terms()) {
    EXPECT_EQ(dual.Coefficient(exponents.second, exponents.first), c);
  }
}

TEST(TuttePolynomialTest, Arithmetic) {
  TuttePolynomial t;
  t.Add(1, 0, 2);
  t.Add(1, 0, -2);
  EXPECT_TRUE(t.terms().empty());
  t.Add(2, 1, 3);
  const TuttePolynomial shifted = t.Shifted(1, 1);
  EXPECT_EQ(shifted.Coefficient(3, 2), 3);
  EXPECT_EQ(shifted.Evaluate(2, 3), 3 * 8 * 9);
}

}  // namespace
}  // namespace paving
