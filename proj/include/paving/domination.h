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

// Covering all degree-(r-1) monomials in d variables by degree-r monomials.
//
// f(r, d) is the least number of degree-r monomials whose one-step divisors
// include every degree-(r-1) monomial; equivalently the smallest set of
// vertices of G_{r,d} dominating V(G_{r-1,d}) inside TG_{r,d}. Here G_{r,d}
// has the degree-r monomials as vertices, with m ~ m' when m' = m * x_j / x_i
// for i != j. FExact solves the cover problem by branch and bound and proves
// optimality by exhausting the tree. The standard colouring
// colour(m) = sum_i i * t_i mod d gives the upper bound f_bar(r, d).

#ifndef PAVING_DOMINATION_H_
#define PAVING_DOMINATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "paving/common.h"
#include "paving/monomial.h"

namespace paving {

inline constexpr std::size_t kMaxDominationUniverse = 5000;

struct DominationInstance {
  int r = 0;
  int d = 0;
  std::vector<Monomial> universe;    // degree r - 1, graded-lex
  std::vector<Monomial> candidates;  // degree r, graded-lex
  // covers[c]: universe indices of the one-step divisors of candidates[c].
  std::vector<std::vector<int>> covers;
  // covered_by[u]: candidate indices of universe[u] * x_i, i = 0..d-1.
  std::vector<std::vector<int>> covered_by;

  // Throws CapExceeded when the universe exceeds kMaxDominationUniverse.
  static DominationInstance Build(int r, int d);

  // Every universe monomial divides some member of `chosen`.
  bool IsCover(const std::vector<Monomial>& chosen) const;
};

struct DominationResult {
  int r = 0;
  int d = 0;
  std::int64_t value = 0;  // size of witness
  std::vector<Monomial> witness;
  bool optimal = false;
  std::int64_t nodes_explored = 0;
  std::int64_t lower_bound = 0;
};

struct SearchBudget {
  double seconds = 60.0;
  std::int64_t max_nodes = -1;  // negative: unlimited
};

// Never throws BudgetExceeded: when the budget runs out the best cover found
// so far is returned with optimal = false.
DominationResult FExact(int r, int d, const SearchBudget& budget = {});

int ColourOf(const Monomial& m);
// Sizes of the d colour classes of degree-r monomials, indexed by colour.
std::vector<std::int64_t> ColourClassSizes(int r, int d);
std::vector<Monomial> ColourClass(int r, int d, int colour);
std::int64_t FBar(int r, int d);

// Edges of G_{r,d}: same degree, m' = m * x_j / x_i with i != j.
bool AdjacentInG(const Monomial& a, const Monomial& b);
// Edges of TG: those of G plus m' = m / x_i (in either direction).
bool AdjacentInTG(const Monomial& a, const Monomial& b);

enum class ScanStatus { kConfirmed, kGap, kTimeout };
std::string_view ScanStatusName(ScanStatus status);

struct ScanRow {
  int r = 0;
  int d = 0;
  std::int64_t f = 0;
  bool f_optimal = false;
  std::int64_t f_bar = 0;
  BigInt l2 = 0;
  ScanStatus status = ScanStatus::kTimeout;
  DominationResult search;
};

// Rows for 1 <= r <= r_max, 1 <= d <= d_max, ordered by (r, d). A row is
// confirmed only when f is proven optimal and f = f_bar = L2.
std::vector<ScanRow> ConjectureScan(int r_max, int d_max,
                                    const SearchBudget& budget_per_cell = {},
                                    int threads = 1);

}  // namespace paving

#endif  // PAVING_DOMINATION_H_
