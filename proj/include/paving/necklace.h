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

// Aperiodic binary necklaces (binary Lyndon words) with r ones and d zeros.

#ifndef PAVING_NECKLACE_H_
#define PAVING_NECKLACE_H_

#include <cstdint>

#include "paving/common.h"

namespace paving {

// Moebius function by trial division; k >= 1.
int MoebiusMu(std::int64_t k);

// L2(r, d) = 1/(r+d) * sum_{k | gcd(r+d, r)} mu(k) C((r+d)/k, r/k).
BigInt NecklacesL2(int r, int d);

// Counts rotation orbits of full length among binary strings of length
// r + d with r ones. Throws SizeCap when r + d > 24.
std::int64_t NecklacesBruteForce(int r, int d);

// For gcd(r + d, r) = 1: checks that the variable rotation
// x_i -> x_{i+1 mod d} acts on degree-r monomials with orbits of size d that
// meet every colour class once, and that every colour class has L2(r, d)
// members. Throws NotCoprime otherwise.
bool ColourClassCoprimeCheck(int r, int d);

}  // namespace paving

#endif  // PAVING_NECKLACE_H_
