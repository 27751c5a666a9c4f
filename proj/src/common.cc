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

#include <sstream>

namespace paving {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyBases: return "EmptyBases";
    case ErrorCode::kUnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorCode::kExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kBasisCountOutOfRange: return "BasisCountOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kHrBelowF: return "HrBelowF";
    case ErrorCode::kHrAboveMax: return "HrAboveMax";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kNoBases: return "NoBases";
    case ErrorCode::kUnequalBlockSizes: return "UnequalBlockSizes";
    case ErrorCode::kNotSteiner: return "NotSteiner";
    case ErrorCode::kInvalidLambda: return "InvalidLambda";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::vector<int> ToElements(ElementSet s) {
  std::vector<int> out;
  out.reserve(Cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

ElementSet FromElements(const std::vector<int>& elements) {
  ElementSet s = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxStoredElements) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "element " + std::to_string(e) + " out of range");
    }
    s |= Singleton(e);
  }
  return s;
}

BigInt Binomial(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

std::int64_t BinomialI64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::string ToString(const BigInt& value) { return value.str(); }

std::string ToString(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace paving
