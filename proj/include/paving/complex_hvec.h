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

// Face and h-vectors of matroid independence complexes, and the necessary
// conditions an h-vector must meet.

#ifndef PAVING_COMPLEX_HVEC_H_
#define PAVING_COMPLEX_HVEC_H_

#include <cstdint>
#include <vector>

#include "paving/common.h"
#include "paving/matroid.h"

namespace paving {

// entries[i] = number of faces with i elements, i = 0..d.
struct FVector {
  std::vector<BigInt> entries;
  int dimension() const { return static_cast<int>(entries.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

struct HVector {
  std::vector<BigInt> entries;
  int dimension() const { return static_cast<int>(entries.size()) - 1; }
  // A matroid complex never produces these; h_from_f still returns them.
  bool HasNegativeEntry() const;
  BigInt Sum() const;
  friend bool operator==(const HVector&, const HVector&) = default;
};

FVector FVectorOf(const Matroid& m);

// h_k = sum_{i<=k} (-1)^{i+k} f_i C(d-i, k-i). Requires f_0 = 1.
HVector HFromF(const FVector& f);
// f_k = sum_{i<=k} h_i C(d-i, k-i).
FVector FFromH(const HVector& h);

// h-vector of a rank-r paving matroid on n elements with b bases:
// h_k = C(n-r+k-1, k) for k < r and h_r = b - C(n-1, r-1).
HVector PavingHVector(int n, int r, const BigInt& b);

// h_0 <= h_1 <= ... <= h_{floor(d/2)} and h_i <= h_{d-i} for i <= floor(d/2).
bool HibiCheck(const HVector& h);

std::vector<Rational> DefaultBrownColbournSamples();

// (-1)^j sum_{i<=j} (-b)^i h_i >= 0 for every j and every sampled b >= 1,
// in exact rational arithmetic.
bool BrownColbournCheck(const HVector& h,
                        const std::vector<Rational>& samples =
                            DefaultBrownColbournSamples());

// Lower bound on h_r of a connected rank-r paving matroid on n elements:
// S(r, n) = (-1)^{r-1} sum_{i<r} (-1)^i C(n-r+i-1, i).
BigInt BrownColbournBound(int r, int n);

}  // namespace paving

#endif  // PAVING_COMPLEX_HVEC_H_
