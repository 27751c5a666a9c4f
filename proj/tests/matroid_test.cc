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


#include "paving/matroid.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.h"
#include "paving/designs.h"
#include "paving/isomorphism.h"
#include "paving/paving_enum.h"

namespace paving {
namespace {

Matroid Fano() { return SparseFromSteiner(FanoPlane()); }

std::vector<Matroid> Zoo() {
  std::vector<Matroid> zoo;
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) zoo.push_back(Uniform(r, n));
  }
  zoo.push_back(Fano());
  zoo.push_back(DirectSum(Uniform(1, 2), Uniform(1, 2)));
  zoo.push_back(DirectSum(Uniform(2, 2), Uniform(0, 1)));
  zoo.push_back(DirectSum(Uniform(0, 2), Uniform(1, 1)));
  zoo.push_back(Rank2FromParallelClasses({1, 1, 3}));
  zoo.push_back(TwoThickening(Uniform(2, 3)));
  zoo.push_back(FreeExtension(DirectSum(Uniform(1, 2), Uniform(1, 2))));
  for (const Matroid& m : EnumeratePaving(3, 6, {false, false, true})) {
    zoo.push_back(m);
  }
  return zoo;
}

TEST(FromBasesTest, UniformFromAllPairs) {
  std::vector<ElementSet> bases;
  ForEachSubsetOfSize(4, 2, [&](ElementSet s) { bases.push_back(s); });
  EXPECT_EQ(Matroid::FromBases(4, bases), Uniform(2, 4));
}

TEST(FromBasesTest, ColoopExample) {
  const Matroid m = Matroid::FromBasisLists(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(Coloops(m), Singleton(0));
}

TEST(FromBasesTest, Errors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code([] { Matroid::FromBasisLists(3, {{0, 1}, {2}}); }),
            ErrorCode::kUnequalBasisSizes);
  EXPECT_EQ(code([] { Matroid::FromBases(3, {}); }), ErrorCode::kEmptyBases);
  EXPECT_EQ(code([] { Matroid::FromBasisLists(4, {{0, 1}, {2, 3}}); }),
            ErrorCode::kExchangeAxiomViolated);
  EXPECT_EQ(code([] { Matroid::FromBasisLists(2, {{0, 2}}); }),
            ErrorCode::kElementOutOfRange);
}

TEST(UniformTest, Counts) {
  EXPECT_EQ(Uniform(1, 3).num_bases(), 3);
  EXPECT_EQ(Uniform(0, 2).num_bases(), 1);
  EXPECT_EQ(Uniform(0, 2).bases().front(), 0u);
  EXPECT_EQ(Uniform(3, 7).num_bases(), 35);
  EXPECT_THROW(Uniform(3, 2), Error);
}

TEST(DualTest, Examples) {
  EXPECT_EQ(Dual(Uniform(2, 4)), Uniform(2, 4));
  const Matroid dual_fano = Dual(Fano());
  EXPECT_EQ(dual_fano.rank(), 4);
  EXPECT_EQ(dual_fano.num_bases(), 28);
}

TEST(DualTest, Involution) {
  for (const Matroid& m : Zoo()) EXPECT_EQ(Dual(Dual(m)), m);
}

TEST(MinorTest, DeleteAndContractUniform) {
  EXPECT_EQ(Delete(Uniform(2, 4), 3), Uniform(2, 3));
  EXPECT_EQ(Contract(Uniform(2, 4), 3), Uniform(1, 3));
  const Matroid u36 = Uniform(3, 6);
  EXPECT_EQ(Delete(u36, 0).num_bases(), 10);
  EXPECT_EQ(Contract(u36, 0).num_bases(), 10);
}

TEST(MinorTest, BasisCountSplits) {
  for (const Matroid& m : Zoo()) {
    for (int e = 0; e < m.size(); ++e) {
      if (Contains(Loops(m) | Coloops(m), e)) continue;
      EXPECT_EQ(m.num_bases(),
                Delete(m, e).num_bases() + Contract(m, e).num_bases());
    }
  }
}

TEST(MinorTest, LoopAndColoopFallThrough) {
  const Matroid m = DirectSum(Uniform(1, 1), Uniform(0, 1));
  EXPECT_EQ(Delete(m, 0), Contract(m, 0));
  EXPECT_EQ(Contract(m, 1), Delete(m, 1));
}

TEST(MinorTest, DualityExchangesDeleteAndContract) {
  for (const Matroid& m : Zoo()) {
    for (int e = 0; e < m.size(); ++e) {
      EXPECT_EQ(Dual(Delete(m, e)), Contract(Dual(m), e));
    }
  }
}

TEST(MinorTest, OriginLabels) {
  std::vector<int> origin;
  Minor(Uniform(3, 6), Singleton(1), Singleton(4), &origin);
  EXPECT_EQ(origin, (std::vector<int>{0, 2, 3, 5}));
}

TEST(LoopsTest, Examples) {
  EXPECT_EQ(Loops(Uniform(0, 2)), 0b11u);
  EXPECT_EQ(Coloops(Uniform(2, 2)), 0b11u);
  EXPECT_EQ(Coloops(DirectSum(Uniform(1, 2), Uniform(1, 2))), 0u);
}

TEST(CircuitTest, MatchesMinimalDependentSets) {
  for (const Matroid& m : Zoo()) {
    std::vector<ElementSet> got = Circuits(m);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::NaiveCircuits(m));
  }
}

TEST(CircuitTest, UniformCircuits) {
  std::vector<ElementSet> triples;
  ForEachSubsetOfSize(4, 3, [&](ElementSet s) { triples.push_back(s); });
  std::vector<ElementSet> got = Circuits(Uniform(2, 4));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, triples);
}

TEST(ClosureTest, MatchesCircuitDefinition) {
  for (const Matroid& m : Zoo()) {
    if (m.size() > 6) continue;
    for (ElementSet a = 0; a <= m.ground_set(); ++a) {
      EXPECT_EQ(Closure(m, a), oracle::ClosureFromCircuits(m, a));
      if (a == m.ground_set()) break;
    }
  }
  EXPECT_EQ(Closure(Uniform(2, 4), Singleton(0)), Singleton(0));
}

TEST(RankTest, TableMatchesBasisIntersection) {
  for (const Matroid& m : Zoo()) {
    const RankTable table(m);
    for (ElementSet a = 0; a <= m.ground_set(); ++a) {
      EXPECT_EQ(table(a), oracle::NaiveRank(m, a));
      EXPECT_EQ(RankOf(m, a), oracle::NaiveRank(m, a));
      if (a == m.ground_set()) break;
    }
  }
}

TEST(HyperplaneTest, ComplementsOfCocircuits) {
  for (const Matroid& m : Zoo()) {
    std::vector<ElementSet> got = Hyperplanes(m);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::HyperplanesFromCocircuits(m));
  }
}

TEST(HyperplaneTest, FanoLines) {
  std::vector<ElementSet> lines = FanoPlane().blocks;
  std::sort(lines.begin(), lines.end());
  std::vector<ElementSet> got = Hyperplanes(Fano());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, lines);
}

TEST(PavingTest, Predicates) {
  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) EXPECT_TRUE(IsPaving(Uniform(r, n)));
  }
  EXPECT_FALSE(IsPaving(DirectSum(Uniform(2, 2), Uniform(0, 1))));
  EXPECT_TRUE(IsSparsePaving(Fano()));
  EXPECT_FALSE(IsSparsePaving(Rank2FromParallelClasses({1, 1, 3})));
}

TEST(PavingTest, SparseDefinitionUsesSymmetricDifference) {
  // Two 3-circuits sharing two elements: paving but not sparse.
  const Matroid m = Matroid::FromBases(
      5, [] {
        std::vector<ElementSet> bases;
        ForEachSubsetOfSize(5, 3, [&](ElementSet s) {
          if (s != FromElements({0, 1, 2}) && s != FromElements({0, 1, 3}) &&
              s != FromElements({0, 2, 3}) && s != FromElements({1, 2, 3})) {
            bases.push_back(s);
          }
        });
        return bases;
      }());
  EXPECT_TRUE(IsPaving(m));
  EXPECT_FALSE(IsSparsePaving(m));
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(IsConnected(Uniform(2, 4)));
  EXPECT_FALSE(IsConnected(DirectSum(Uniform(1, 2), Uniform(1, 2))));
  EXPECT_TRUE(IsConnected(Fano()));
  EXPECT_FALSE(IsConnected(DirectSum(Uniform(1, 1), Uniform(1, 2))));
}

TEST(ConstructionTest, TwoStretchingOfUniform) {
  const Matroid s13 = TwoStretching(Uniform(1, 3));
  EXPECT_EQ(s13.rank(), 4);
  EXPECT_EQ(s13.size(), 6);
  const Matroid s24 = TwoStretching(Uniform(2, 4));
  EXPECT_EQ(s24.rank(), 6);
  EXPECT_EQ(s24.size(), 8);
  EXPECT_EQ(s24.num_bases(), 24);
}

TEST(ConstructionTest, DualOfThickenedUniform) {
  for (int m = 3; m <= 5; ++m) {
    const int n = 2 * m;
    EXPECT_EQ(Dual(TwoThickening(Uniform(2, m))).num_bases(), n * (n - 2) / 2);
  }
}

TEST(ConstructionTest, FreeExtensionAddsGenericElement) {
  const Matroid m = FreeExtension(Uniform(2, 3));
  EXPECT_EQ(m, Uniform(2, 4));
  const Matroid p = FreeExtension(DirectSum(Uniform(1, 2), Uniform(1, 2)));
  EXPECT_EQ(p.num_bases(), 8);
}

TEST(ConstructionTest, ParallelClasses) {
  const Matroid m = Rank2FromParallelClasses({1, 1, 3});
  EXPECT_EQ(m.num_bases(), 7);
  EXPECT_EQ(Loops(m), 0u);
  EXPECT_THROW(Rank2FromParallelClasses({4}), Error);
}

TEST(HasMinorTest, Examples) {
  const Matroid bad = DirectSum(Uniform(2, 2), Uniform(0, 1));
  EXPECT_TRUE(HasMinor(bad, bad));
  EXPECT_TRUE(HasMinor(Fano(), Uniform(2, 3)));
  EXPECT_FALSE(HasMinor(Fano(), Uniform(2, 4)));
  EXPECT_TRUE(HasMinor(Uniform(3, 6), Uniform(2, 4)));
  EXPECT_FALSE(HasMinor(Uniform(2, 4), bad));
}

TEST(HasMinorTest, PavingExcludesTheSmallObstruction) {
  const Matroid bad = DirectSum(Uniform(2, 2), Uniform(0, 1));
  for (const Matroid& m : Zoo()) {
    EXPECT_EQ(IsPaving(m), !HasMinor(m, bad));
  }
}

TEST(PavingTest, ClosedUnderSingleElementMinors) {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const Matroid& m : EnumerateSparsePaving(r, n, {false, false, true})) {
        for (int e = 0; e < n; ++e) {
          EXPECT_TRUE(IsSparsePaving(Delete(m, e)));
          EXPECT_TRUE(IsSparsePaving(Contract(m, e)));
          EXPECT_TRUE(IsPaving(Delete(m, e)));
        }
      }
    }
  }
}

TEST(PavingTest, SparseHyperplanesAreCircuitsOrSmall) {
  for (int n = 3; n <= 7; ++n) {
    for (int r = 2; r < n; ++r) {
      for (const Matroid& m : EnumerateSparsePaving(r, n, {false, false, true})) {
        const std::vector<ElementSet> circuits = Circuits(m);
        for (ElementSet h : Hyperplanes(m)) {
          const int size = Cardinality(h);
          EXPECT_TRUE(size == r || size == r - 1);
          if (size == r) {
            EXPECT_NE(std::find(circuits.begin(), circuits.end(), h),
                      circuits.end());
          }
        }
        for (ElementSet c : circuits) {
          if (Cardinality(c) != r) continue;
          const auto hyperplanes = Hyperplanes(m);
          EXPECT_NE(std::find(hyperplanes.begin(), hyperplanes.end(), c),
                    hyperplanes.end());
        }
      }
    }
  }
}

}  // namespace
}  // namespace paving
