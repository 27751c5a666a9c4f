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

// Divisor-closed monomial sets and pure O-sequence witnesses.

#ifndef PAVING_MULTICOMPLEX_H_
#define PAVING_MULTICOMPLEX_H_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "paving/common.h"
#include "paving/domination.h"
#include "paving/monomial.h"

namespace paving {

inline constexpr std::size_t kMaxMulticomplexSize = 1'000'000;

class Multicomplex {
 public:
  // Smallest divisor-closed set containing the generators. Throws
  // InvalidArgument for an empty generator list and CapExceeded past
  // kMaxMulticomplexSize monomials.
  static Multicomplex DownwardClosure(int num_variables,
                                      const std::vector<Monomial>& generators);
  // Validates divisor closure; throws InvalidArgument if it fails.
  static Multicomplex FromMonomials(int num_variables,
                                    std::set<Monomial> monomials);

  int num_variables() const { return num_variables_; }
  const std::set<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool Contains(const Monomial& m) const { return monomials_.count(m) > 0; }

  // Members with no one-step multiple in the set, graded-lex order.
  std::vector<Monomial> MaximalElements() const;
  // Number of members of each degree 0..max degree.
  std::vector<std::int64_t> DegreeCensus() const;

 private:
  Multicomplex(int num_variables, std::set<Monomial> monomials)
      : num_variables_(num_variables), monomials_(std::move(monomials)) {}

  int num_variables_ = 0;
  std::set<Monomial> monomials_;
};

bool IsDivisorClosed(const std::set<Monomial>& monomials);

struct OSequence {
  std::vector<std::int64_t> entries;
  bool pure = false;
};

OSequence OSequenceOf(const Multicomplex& mc);
// All maximal elements share one degree.
bool IsPure(const Multicomplex& mc);

// Pure multicomplex over d = n - r variables whose O-sequence is the h-vector
// of a rank-r paving matroid on n elements with b bases: every monomial of
// degree < r, plus the dominating set `dom.witness` padded with the
// graded-lex first unused degree-r monomials up to h_r = b - C(n-1, r-1).
// Throws HrBelowF when h_r < |dom.witness| and HrAboveMax when
// h_r > C(n-1, r).
Multicomplex CertifyPavingH(int n, int r, const BigInt& b,
                            const DominationResult& dom);

// Exhaustive search for a pure multicomplex with census exactly `h`, over
// h_1 variables. Returns nullopt when none exists; throws BudgetExceeded if
// more than `budget` search nodes would be needed.
std::optional<Multicomplex> CertifyGeneralH(const std::vector<std::int64_t>& h,
                                            std::int64_t budget = 10'000'000);

}  // namespace paving

#endif  // PAVING_MULTICOMPLEX_H_
