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

#ifndef PAVING_TUTTE_H_
#define PAVING_TUTTE_H_

#include <map>
#include <utility>

#include "paving/common.h"
#include "paving/matroid.h"

namespace paving {

// Bivariate integer polynomial sum c_ij x^i y^j; zero terms are not stored.
class TuttePolynomial {
 public:
  using Exponents = std::pair<int, int>;

  void Add(int i, int j, const BigInt& c);
  BigInt Coefficient(int i, int j) const;
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool HasNonNegativeCoefficients() const;
  BigInt Evaluate(const BigInt& x, const BigInt& y) const;

  TuttePolynomial& operator+=(const TuttePolynomial& other);
  // Multiplies by x^i y^j.
  TuttePolynomial Shifted(int i, int j) const;

  friend bool operator==(const TuttePolynomial&,
                         const TuttePolynomial&) = default;

 private:
  std::map<Exponents, BigInt> terms_;
};

// Deletion-contraction with loop/coloop base cases, memoized on the basis
// set. Ground sets up to kMaxCheckedElements.
TuttePolynomial Tutte(const Matroid& m);

}  // namespace paving

#endif  // PAVING_TUTTE_H_
