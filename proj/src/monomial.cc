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

#include "paving/monomial.h"

#include <numeric>

#include "paving/common.h"

namespace paving {

Monomial::Monomial(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
  for (int t : exponents_) {
    if (t < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::One(int num_variables) {
  return Monomial(std::vector<int>(num_variables, 0));
}

Monomial Monomial::Variable(int num_variables, int i) {
  return One(num_variables).TimesVariable(i);
}

Monomial Monomial::TimesVariable(int i) const {
  Monomial out = *this;
  ++out.exponents_[i];
  ++out.degree_;
  return out;
}

Monomial Monomial::DividedByVariable(int i) const {
  if (exponents_[i] == 0) {
    throw Error(ErrorCode::kInvalidArgument, "variable does not divide");
  }
  Monomial out = *this;
  --out.exponents_[i];
  --out.degree_;
  return out;
}

std::string Monomial::ToString() const {
  std::string out;
  for (int i = 0; i < num_variables(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Larger exponent vector sorts first.
  return b.exponents_ <=> a.exponents_;
}

bool Divides(const Monomial& a, const Monomial& b) {
  if (a.num_variables() != b.num_variables()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "monomials over different variable counts");
  }
  for (int i = 0; i < a.num_variables(); ++i) {
    if (a.exponent(i) > b.exponent(i)) return false;
  }
  return true;
}

std::vector<Monomial> DivisorsOneStep(const Monomial& m) {
  std::vector<Monomial> out;
  for (int i = 0; i < m.num_variables(); ++i) {
    if (m.exponent(i) > 0) out.push_back(m.DividedByVariable(i));
  }
  return out;
}

std::vector<Monomial> MultiplesOneStep(const Monomial& m, int d) {
  if (d != m.num_variables()) {
    throw Error(ErrorCode::kDimensionMismatch, "variable count mismatch");
  }
  std::vector<Monomial> out;
  out.reserve(d);
  for (int i = 0; i < d; ++i) out.push_back(m.TimesVariable(i));
  return out;
}

std::vector<Monomial> AllDivisors(const Monomial& m) {
  std::vector<Monomial> out;
  std::vector<int> current(m.num_variables(), 0);
  while (true) {
    out.emplace_back(current);
    int i = 0;
    while (i < m.num_variables() && current[i] == m.exponent(i)) {
      current[i] = 0;
      ++i;
    }
    if (i == m.num_variables()) break;
    ++current[i];
  }
  return out;
}

std::vector<Monomial> MonomialsOfDegree(int r, int d) {
  if (r < 0 || d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need r >= 0 and d >= 1");
  }
  std::vector<Monomial> out;
  std::vector<int> exponents(d, 0);
  // Exponent vectors in decreasing lexicographic order.
  auto fill = [&](auto&& self, int i, int remaining) -> void {
    if (i == d - 1) {
      exponents[i] = remaining;
      out.emplace_back(exponents);
      return;
    }
    for (int t = remaining; t >= 0; --t) {
      exponents[i] = t;
      self(self, i + 1, remaining - t);
    }
  };
  fill(fill, 0, r);
  return out;
}

}  // namespace paving
