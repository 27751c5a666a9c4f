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

#include "paving/tutte.h"

#include <bit>
#include <string>
#include <unordered_map>

namespace paving {
namespace {

std::string MemoKey(const Matroid& m) {
  std::string key(reinterpret_cast<const char*>(m.bases().data()),
                  m.bases().size() * sizeof(ElementSet));
  key.push_back(static_cast<char>(m.size()));
  return key;
}

class TutteEvaluator {
 public:
  TuttePolynomial Run(const Matroid& m) {
    const ElementSet loops = Loops(m);
    const ElementSet coloops = Coloops(m);
    const ElementSet free = m.ground_set() & ~(loops | coloops);
    if (free == 0) {
      TuttePolynomial t;
      t.Add(Cardinality(coloops), Cardinality(loops), 1);
      return t;
    }
    const std::string key = MemoKey(m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int e = std::countr_zero(free);
    TuttePolynomial t = Run(Delete(m, e));
    t += Run(Contract(m, e));
    memo_.emplace(key, t);
    return t;
  }

 private:
  std::unordered_map<std::string, TuttePolynomial> memo_;
};

}  // namespace

void TuttePolynomial::Add(int i, int j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exponents{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt TuttePolynomial::Coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool TuttePolynomial::HasNonNegativeCoefficients() const {
  for (const auto& [exponents, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

BigInt TuttePolynomial::Evaluate(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& [exponents, c] : terms_) {
    BigInt term = c;
    for (int k = 0; k < exponents.first; ++k) term *= x;
    for (int k = 0; k < exponents.second; ++k) term *= y;
    total += term;
  }
  return total;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& other) {
  for (const auto& [exponents, c] : other.terms_) {
    Add(exponents.first, exponents.second, c);
  }
  return *this;
}

TuttePolynomial TuttePolynomial::Shifted(int i, int j) const {
  TuttePolynomial out;
  for (const auto& [exponents, c] : terms_) {
    out.Add(exponents.first + i, exponents.second + j, c);
  }
  return out;
}

TuttePolynomial Tutte(const Matroid& m) {
  if (m.size() > kMaxCheckedElements) {
    throw Error(ErrorCode::kCapExceeded,
                "Tutte polynomial limited to " +
                    std::to_string(kMaxCheckedElements) + " elements");
  }
  TutteEvaluator evaluator;
  return evaluator.Run(m);
}

}  // namespace paving
