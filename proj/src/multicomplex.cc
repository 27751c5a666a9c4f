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

#include "paving/multicomplex.h"

#include <algorithm>
#include <map>

namespace paving {
namespace {

// Backtracking over sets of top-degree monomials whose divisor closure has
// exactly the requested census.
class PureWitnessSearch {
 public:
  PureWitnessSearch(std::vector<std::int64_t> target, int d,
                    std::int64_t budget)
      : target_(std::move(target)),
        census_(target_.size(), 0),
        top_(static_cast<int>(target_.size()) - 1),
        candidates_(MonomialsOfDegree(top_, d)),
        budget_(budget) {}

  std::optional<std::vector<Monomial>> Run() {
    if (Extend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool Extend(std::size_t start) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "pure O-sequence search exceeded " +
                      std::to_string(budget_) + " nodes");
    }
    if (static_cast<std::int64_t>(chosen_.size()) == target_[top_]) {
      return census_ == target_;
    }
    const std::size_t needed = target_[top_] - chosen_.size();
    for (std::size_t i = start; i + needed <= candidates_.size(); ++i) {
      const Monomial& m = candidates_[i];
      // Relabeling variables so the graded-lex first chosen monomial has
      // non-increasing exponents loses no witnesses.
      if (chosen_.empty() &&
          !std::is_sorted(m.exponents().rbegin(), m.exponents().rend())) {
        continue;
      }
      if (Add(m)) {
        chosen_.push_back(m);
        if (Extend(i + 1)) return true;
        chosen_.pop_back();
      }
      Remove(m);
    }
    return false;
  }

  // Adds the divisors of m; false if some degree now exceeds its target.
  bool Add(const Monomial& m) {
    bool ok = true;
    for (const Monomial& divisor : AllDivisors(m)) {
      if (refcount_[divisor]++ == 0) {
        if (++census_[divisor.degree()] > target_[divisor.degree()]) ok = false;
      }
    }
    return ok;
  }

  void Remove(const Monomial& m) {
    for (const Monomial& divisor : AllDivisors(m)) {
      auto it = refcount_.find(divisor);
      if (--it->second == 0) {
        --census_[divisor.degree()];
        refcount_.erase(it);
      }
    }
  }

  std::vector<std::int64_t> target_;
  std::vector<std::int64_t> census_;
  int top_;
  std::vector<Monomial> candidates_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::map<Monomial, int> refcount_;
  std::vector<Monomial> chosen_;
};

}  // namespace

bool IsDivisorClosed(const std::set<Monomial>& monomials) {
  for (const Monomial& m : monomials) {
    for (const Monomial& divisor : DivisorsOneStep(m)) {
      if (!monomials.count(divisor)) return false;
    }
  }
  return true;
}

Multicomplex Multicomplex::DownwardClosure(
    int num_variables, const std::vector<Monomial>& generators) {
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "a multicomplex needs at least one generator");
  }
  std::set<Monomial> closure;
  std::vector<Monomial> stack;
  for (const Monomial& g : generators) {
    if (g.num_variables() != num_variables) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "generator over the wrong number of variables");
    }
    if (closure.insert(g).second) stack.push_back(g);
  }
  while (!stack.empty()) {
    const Monomial m = std::move(stack.back());
    stack.pop_back();
    for (Monomial& divisor : DivisorsOneStep(m)) {
      if (closure.insert(divisor).second) {
        if (closure.size() > kMaxMulticomplexSize) {
          throw Error(ErrorCode::kCapExceeded, "multicomplex too large");
        }
        stack.push_back(std::move(divisor));
      }
    }
  }
  return Multicomplex(num_variables, std::move(closure));
}

Multicomplex Multicomplex::FromMonomials(int num_variables,
                                         std::set<Monomial> monomials) {
  if (monomials.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a multicomplex is nonempty");
  }
  for (const Monomial& m : monomials) {
    if (m.num_variables() != num_variables) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "monomial over the wrong number of variables");
    }
  }
  if (!IsDivisorClosed(monomials)) {
    throw Error(ErrorCode::kInvalidArgument, "set is not divisor-closed");
  }
  return Multicomplex(num_variables, std::move(monomials));
}

std::vector<Monomial> Multicomplex::MaximalElements() const {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_) {
    bool maximal = true;
    for (int i = 0; i < num_variables_ && maximal; ++i) {
      maximal = !monomials_.count(m.TimesVariable(i));
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> Multicomplex::DegreeCensus() const {
  std::vector<std::int64_t> census;
  for (const Monomial& m : monomials_) {
    if (static_cast<int>(census.size()) <= m.degree()) {
      census.resize(m.degree() + 1, 0);
    }
    ++census[m.degree()];
  }
  return census;
}

bool IsPure(const Multicomplex& mc) {
  const std::vector<Monomial> maximal = mc.MaximalElements();
  return std::all_of(maximal.begin(), maximal.end(), [&](const Monomial& m) {
    return m.degree() == maximal.front().degree();
  });
}

OSequence OSequenceOf(const Multicomplex& mc) {
  return OSequence{mc.DegreeCensus(), IsPure(mc)};
}

Multicomplex CertifyPavingH(int n, int r, const BigInt& b,
                            const DominationResult& dom) {
  if (r < 1 || r >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "paving certification needs 1 <= r < n");
  }
  const int d = n - r;
  if (dom.r != r || dom.d != d) {
    throw Error(ErrorCode::kInvalidArgument,
                "dominating set is for a different (r, d)");
  }
  const BigInt h_r = b - Binomial(n - 1, r - 1);
  if (h_r < BigInt(dom.witness.size())) {
    throw Error(ErrorCode::kHrBelowF,
                "h_r = " + ToString(h_r) + " is below the dominating set size " +
                    std::to_string(dom.witness.size()));
  }
  if (h_r > Binomial(n - 1, r)) {
    throw Error(ErrorCode::kHrAboveMax,
                "h_r = " + ToString(h_r) + " exceeds C(n-1, r)");
  }
  const auto wanted = static_cast<std::size_t>(h_r);
  std::set<Monomial> top(dom.witness.begin(), dom.witness.end());
  for (const Monomial& m : MonomialsOfDegree(r, d)) {
    if (top.size() >= wanted) break;
    top.insert(m);
  }
  const std::vector<Monomial> generators(top.begin(), top.end());
  Multicomplex mc = Multicomplex::DownwardClosure(d, generators);
  // The dominating set must reach every degree r-1 monomial.
  const std::vector<std::int64_t> census = mc.DegreeCensus();
  if (static_cast<int>(census.size()) != r + 1 ||
      BigInt(census[r - 1]) != Binomial(d + r - 2, r - 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "witness does not dominate the degree r-1 monomials");
  }
  return mc;
}

std::optional<Multicomplex> CertifyGeneralH(const std::vector<std::int64_t>& h,
                                            std::int64_t budget) {
  if (h.empty()) throw Error(ErrorCode::kInvalidArgument, "empty sequence");
  std::vector<std::int64_t> target = h;
  while (target.size() > 1 && target.back() == 0) target.pop_back();
  if (target[0] != 1) return std::nullopt;
  for (std::int64_t value : target) {
    if (value <= 0) return std::nullopt;
  }
  if (target.size() == 1) {
    return Multicomplex::DownwardClosure(0, {Monomial::One(0)});
  }
  const int d = static_cast<int>(target[1]);
  PureWitnessSearch search(target, d, budget);
  std::optional<std::vector<Monomial>> top = search.Run();
  if (!top) return std::nullopt;
  return Multicomplex::DownwardClosure(d, *top);
}

}  // namespace paving
