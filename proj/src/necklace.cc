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

#include "paving/necklace.h"

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "paving/domination.h"
#include "paving/monomial.h"

namespace paving {
namespace {

constexpr int kMaxBruteForceLength = 24;

// x_0^{t_0} ... x_{d-1}^{t_{d-1}} -> x_1^{t_0} ... x_0^{t_{d-1}}.
Monomial RotateVariables(const Monomial& m) {
  const int d = m.num_variables();
  std::vector<int> rotated(d);
  for (int i = 0; i < d; ++i) rotated[(i + 1) % d] = m.exponent(i);
  return Monomial(std::move(rotated));
}

}  // namespace

int MoebiusMu(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "mu needs k >= 1");
  int mu = 1;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    mu = -mu;
  }
  if (k > 1) mu = -mu;
  return mu;
}

BigInt NecklacesL2(int r, int d) {
  if (r < 0 || d < 0 || r + d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need r, d >= 0 and r + d >= 1");
  }
  const int n = r + d;
  const int g = std::gcd(n, r);
  BigInt sum = 0;
  for (int k = 1; k <= g; ++k) {
    if (g % k != 0) continue;
    sum += MoebiusMu(k) * Binomial(n / k, r / k);
  }
  return sum / n;
}

std::int64_t NecklacesBruteForce(int r, int d) {
  if (r < 0 || d < 0 || r + d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need r, d >= 0 and r + d >= 1");
  }
  const int n = r + d;
  if (n > kMaxBruteForceLength) {
    throw Error(ErrorCode::kSizeCap, "brute force limited to length 24");
  }
  const ElementSet mask = FullSet(n);
  auto rotate = [&](ElementSet s) {
    return ((s << 1) | (s >> (n - 1))) & mask;
  };
  std::int64_t full_orbit_strings = 0;
  ForEachSubsetOfSize(n, r, [&](ElementSet s) {
    ElementSet t = s;
    for (int shift = 1; shift < n; ++shift) {
      t = rotate(t);
      if (t == s) return;
    }
    ++full_orbit_strings;
  });
  // Each aperiodic necklace accounts for exactly n strings.
  return full_orbit_strings / n;
}

bool ColourClassCoprimeCheck(int r, int d) {
  if (r < 1 || d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need r, d >= 1");
  }
  if (std::gcd(r + d, r) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "gcd(r + d, r) = " + std::to_string(std::gcd(r + d, r)));
  }
  const std::vector<Monomial> monomials = MonomialsOfDegree(r, d);
  std::set<Monomial> seen;
  for (const Monomial& m : monomials) {
    if (seen.count(m)) continue;
    std::vector<bool> colour_hit(d, false);
    Monomial current = m;
    int orbit_size = 0;
    do {
      seen.insert(current);
      const int colour = ColourOf(current);
      if (colour_hit[colour]) return false;
      colour_hit[colour] = true;
      current = RotateVariables(current);
      ++orbit_size;
    } while (current != m);
    if (orbit_size != d) return false;
  }
  const BigInt expected = NecklacesL2(r, d);
  for (std::int64_t size : ColourClassSizes(r, d)) {
    if (BigInt(size) != expected) return false;
  }
  return true;
}

}  // namespace paving
