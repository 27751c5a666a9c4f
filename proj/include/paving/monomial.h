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

#ifndef PAVING_MONOMIAL_H_
#define PAVING_MONOMIAL_H_

#include <compare>
#include <string>
#include <vector>

namespace paving {

// x_0^{t_0} ... x_{d-1}^{t_{d-1}}.
//
// Ordering is graded lexicographic: lower degree first, and within a degree
// the larger exponent vector first, so x0^2 < x0*x1 < x1^2.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial One(int num_variables);
  static Monomial Variable(int num_variables, int i);

  int num_variables() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  Monomial TimesVariable(int i) const;
  // Requires exponent(i) > 0.
  Monomial DividedByVariable(int i) const;

  // "1", "x0^2*x1", ...
  std::string ToString() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

// Componentwise a <= b. Throws DimensionMismatch on differing variable counts.
bool Divides(const Monomial& a, const Monomial& b);
// m / x_i for each i with t_i > 0.
std::vector<Monomial> DivisorsOneStep(const Monomial& m);
// m * x_i for each i < d.
std::vector<Monomial> MultiplesOneStep(const Monomial& m, int d);
// Every divisor of m, including 1 and m.
std::vector<Monomial> AllDivisors(const Monomial& m);

// All C(d+r-1, r) monomials of degree r in d variables, graded-lex order.
std::vector<Monomial> MonomialsOfDegree(int r, int d);

}  // namespace paving

#endif  // PAVING_MONOMIAL_H_
