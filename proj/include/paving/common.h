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

#ifndef PAVING_COMMON_H_
#define PAVING_COMMON_H_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace paving {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A subset of the ground set {0, ..., n-1}, bit i set iff element i is present.
using ElementSet = std::uint32_t;

// Largest ground set accepted for storage, and for axiom-checked
// construction / Tutte polynomials respectively.
inline constexpr int kMaxStoredElements = 24;
inline constexpr int kMaxCheckedElements = 16;

enum class ErrorCode {
  kInvalidArgument,
  kEmptyBases,
  kUnequalBasisSizes,
  kExchangeAxiomViolated,
  kInvalidRank,
  kElementOutOfRange,
  kCapExceeded,
  kBudgetExceeded,
  kBasisCountOutOfRange,
  kDimensionMismatch,
  kHrBelowF,
  kHrAboveMax,
  kSizeCap,
  kNotCoprime,
  kNoBases,
  kUnequalBlockSizes,
  kNotSteiner,
  kInvalidLambda,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline int Cardinality(ElementSet s) { return std::popcount(s); }

inline bool Contains(ElementSet s, int e) { return (s >> e) & 1u; }

inline ElementSet Singleton(int e) { return ElementSet{1} << e; }

inline ElementSet FullSet(int n) {
  return n >= 32 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

// Order of sets of equal size that matches lexicographic order of their
// sorted element lists: the set holding the least element of the symmetric
// difference comes first.
inline bool LexLess(ElementSet a, ElementSet b) {
  const ElementSet diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::vector<int> ToElements(ElementSet s);
ElementSet FromElements(const std::vector<int>& elements);

// Gosper's hack: next larger integer with the same popcount.
inline ElementSet NextSameSize(ElementSet s) {
  const ElementSet c = s & (~s + 1);
  const ElementSet r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

// Calls fn(subset) for every k-subset of {0..n-1}, in increasing numeric order.
template <typename Fn>
void ForEachSubsetOfSize(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(ElementSet{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    fn(static_cast<ElementSet>(s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

// Calls fn(subset) for every subset of `s`, including the empty set and `s`.
template <typename Fn>
void ForEachSubsetOf(ElementSet s, Fn&& fn) {
  ElementSet sub = s;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
}

// Binomial coefficient with the conventions C(a, 0) = 1 for every integer a,
// and C(a, b) = 0 whenever b < 0 or b > a with b > 0.
BigInt Binomial(std::int64_t a, std::int64_t b);

// Small non-negative binomials, 0 <= k <= n <= 62.
std::int64_t BinomialI64(int n, int k);

std::string ToString(const BigInt& value);
std::string ToString(const Rational& value);

}  // namespace paving

#endif  // PAVING_COMMON_H_
