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

#include <unordered_set>

namespace paving {

bool HVector::HasNegativeEntry() const {
  for (const BigInt& h : entries) {
    if (h < 0) return true;
  }
  return false;
}

BigInt HVector::Sum() const {
  BigInt total = 0;
  for (const BigInt& h : entries) total += h;
  return total;
}

FVector FVectorOf(const Matroid& m) {
  FVector f;
  f.entries.assign(m.rank() + 1, 0);
  if (m.size() <= 20) {
    const RankTable rank(m);
    const std::size_t count = std::size_t{1} << m.size();
    for (std::size_t s = 0; s < count; ++s) {
      const auto set = static_cast<ElementSet>(s);
      if (rank.IsIndependent(set)) f.entries[Cardinality(set)] += 1;
    }
    return f;
  }
  std::unordered_set<ElementSet> faces;
  for (ElementSet b : m.bases()) {
    ForEachSubsetOf(b, [&](ElementSet s) { faces.insert(s); });
  }
  for (ElementSet s : faces) f.entries[Cardinality(s)] += 1;
  return f;
}

HVector HFromF(const FVector& f) {
  if (f.entries.empty() || f.entries[0] != 1) {
    throw Error(ErrorCode::kInvalidArgument, "f-vector must start with 1");
  }
  const int d = f.dimension();
  HVector h;
  h.entries.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) {
      BigInt term = f.entries[i] * Binomial(d - i, k - i);
      if ((i + k) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    h.entries[k] = sum;
  }
  return h;
}

FVector FFromH(const HVector& h) {
  const int d = h.dimension();
  FVector f;
  f.entries.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= k; ++i) {
      f.entries[k] += h.entries[i] * Binomial(d - i, k - i);
    }
  }
  return f;
}

HVector PavingHVector(int n, int r, const BigInt& b) {
  if (r < 1 || r > n) {
    throw Error(ErrorCode::kInvalidRank, "paving h-vector needs 1 <= r <= n");
  }
  const BigInt lowest = Binomial(n - 1, r - 1);
  if (b < lowest || b > Binomial(n, r)) {
    throw Error(ErrorCode::kBasisCountOutOfRange,
                "basis count " + ToString(b) + " outside [" +
                    ToString(lowest) + ", " + ToString(Binomial(n, r)) + "]");
  }
  HVector h;
  for (int k = 0; k < r; ++k) h.entries.push_back(Binomial(n - r + k - 1, k));
  h.entries.push_back(b - lowest);
  return h;
}

bool HibiCheck(const HVector& h) {
  const int d = h.dimension();
  if (d < 0) return true;
  const int half = d / 2;
  for (int i = 0; i < half; ++i) {
    if (h.entries[i] > h.entries[i + 1]) return false;
  }
  for (int i = 0; i <= half; ++i) {
    if (h.entries[i] > h.entries[d - i]) return false;
  }
  return true;
}

std::vector<Rational> DefaultBrownColbournSamples() {
  return {Rational(1), Rational(3, 2), Rational(2), Rational(4)};
}

bool BrownColbournCheck(const HVector& h, const std::vector<Rational>& samples) {
  for (const Rational& b : samples) {
    if (b < 1) {
      throw Error(ErrorCode::kInvalidArgument, "sample b must be >= 1");
    }
    Rational partial = 0;
    Rational power = 1;  // (-b)^i
    for (int j = 0; j <= h.dimension(); ++j) {
      partial += power * Rational(h.entries[j]);
      power *= -b;
      const Rational signed_sum = (j % 2 == 0) ? partial : -partial;
      if (signed_sum < 0) return false;
    }
  }
  return true;
}

BigInt BrownColbournBound(int r, int n) {
  if (r < 1 || r > n) {
    throw Error(ErrorCode::kInvalidRank, "S(r, n) needs 1 <= r <= n");
  }
  BigInt sum = 0;
  for (int i = 0; i < r; ++i) {
    const BigInt term = Binomial(n - r + i - 1, i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return (r - 1) % 2 == 0 ? sum : BigInt(-sum);
}

}  // namespace paving
