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

#include "paving/domination.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "paving/lp_bound.h"
#include "paving/necklace.h"

namespace paving {
namespace {

// Node LPs are solved only below this tableau size; the root LP uses
// kMaxPackingLpTableau.
constexpr std::size_t kNodeLpTableau = 60'000;
constexpr double kBoundSlack = 1e-7;

std::int64_t CeilBound(double value) {
  return static_cast<std::int64_t>(std::ceil(value - kBoundSlack));
}

class CoverSearch {
 public:
  CoverSearch(const DominationInstance& instance, const SearchBudget& budget)
      : inst_(instance),
        budget_(budget),
        start_(std::chrono::steady_clock::now()),
        cover_count_(instance.universe.size(), 0),
        forbidden_(instance.candidates.size(), 0),
        gain_(instance.candidates.size(), 0),
        uncovered_(static_cast<int>(instance.universe.size())) {
    for (std::size_t c = 0; c < inst_.candidates.size(); ++c) {
      gain_[c] = static_cast<int>(inst_.covers[c].size());
    }
  }

  // `initial` must be a cover; it seeds the incumbent.
  void Run(std::vector<int> initial) {
    best_ = std::move(initial);
    root_bound_ = LowerBound(/*root=*/true);
    if (static_cast<std::int64_t>(best_.size()) <= root_bound_) {
      exhausted_ = true;
      return;
    }
    exhausted_ = Search();
  }

  const std::vector<int>& best() const { return best_; }
  bool exhausted() const { return exhausted_; }
  std::int64_t nodes() const { return nodes_; }
  std::int64_t root_bound() const { return root_bound_; }

 private:
  // Returns false if the budget ran out somewhere below this node.
  bool Search() {
    ++nodes_;
    if (OutOfBudget()) return false;
    if (uncovered_ == 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return true;
    }
    const std::int64_t bound = LowerBound(/*root=*/false);
    if (static_cast<std::int64_t>(chosen_.size()) + bound >=
        static_cast<std::int64_t>(best_.size())) {
      return true;
    }
    const int u = BranchElement();
    if (u < 0) return true;  // some element can no longer be covered

    std::vector<int> tried;
    bool complete = true;
    for (int c : inst_.covered_by[u]) {
      if (forbidden_[c]) continue;
      Choose(c);
      complete = Search() && complete;
      Unchoose(c);
      if (!complete) break;
      forbidden_[c] = 1;
      tried.push_back(c);
      if (static_cast<std::int64_t>(chosen_.size()) + 1 >=
          static_cast<std::int64_t>(best_.size())) {
        break;
      }
    }
    for (int c : tried) forbidden_[c] = 0;
    return complete;
  }

  bool OutOfBudget() {
    if (budget_.max_nodes >= 0 && nodes_ > budget_.max_nodes) return true;
    if ((nodes_ & 63) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      timed_out_ = elapsed.count() > budget_.seconds;
    }
    return timed_out_;
  }

  // Uncovered element with the fewest allowed candidates; -1 if one has none.
  int BranchElement() const {
    int best_u = -1;
    int best_count = std::numeric_limits<int>::max();
    for (std::size_t u = 0; u < inst_.universe.size(); ++u) {
      if (cover_count_[u] > 0) continue;
      int count = 0;
      for (int c : inst_.covered_by[u]) count += forbidden_[c] ? 0 : 1;
      if (count == 0) return -1;
      if (count < best_count) {
        best_count = count;
        best_u = static_cast<int>(u);
      }
    }
    return best_u;
  }

  void Choose(int c) {
    chosen_.push_back(c);
    for (int u : inst_.covers[c]) {
      if (cover_count_[u]++ == 0) {
        --uncovered_;
        for (int other : inst_.covered_by[u]) --gain_[other];
      }
    }
  }

  void Unchoose(int c) {
    chosen_.pop_back();
    for (int u : inst_.covers[c]) {
      if (--cover_count_[u] == 0) {
        ++uncovered_;
        for (int other : inst_.covered_by[u]) ++gain_[other];
      }
    }
  }

  // Lower bound on the number of further candidates needed. Infeasible
  // subproblems get a bound that forces a prune.
  std::int64_t LowerBound(bool root) {
    const std::int64_t infeasible = std::numeric_limits<std::int32_t>::max();
    std::vector<int> open;
    for (std::size_t u = 0; u < inst_.universe.size(); ++u) {
      if (cover_count_[u] == 0) open.push_back(static_cast<int>(u));
    }
    if (open.empty()) return 0;

    // Greedy packing of uncovered elements with disjoint candidate sets, and
    // the fractional bound y_u = 1 / (largest gain among u's candidates).
    std::vector<std::pair<int, int>> order;
    double fractional = 0.0;
    for (int u : open) {
      int count = 0;
      int max_gain = 0;
      for (int c : inst_.covered_by[u]) {
        if (forbidden_[c]) continue;
        ++count;
        max_gain = std::max(max_gain, gain_[c]);
      }
      if (count == 0) return infeasible;
      order.emplace_back(count, u);
      fractional += 1.0 / max_gain;
    }
    std::sort(order.begin(), order.end());
    std::vector<char> used(inst_.candidates.size(), 0);
    std::int64_t packing = 0;
    for (const auto& [count, u] : order) {
      bool disjoint = true;
      for (int c : inst_.covered_by[u]) {
        if (!forbidden_[c] && used[c]) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      ++packing;
      for (int c : inst_.covered_by[u]) used[c] = 1;
    }
    std::int64_t bound = std::max(packing, CeilBound(fractional));

    std::vector<int> column(inst_.universe.size(), -1);
    for (std::size_t i = 0; i < open.size(); ++i) column[open[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> rows;
    for (std::size_t c = 0; c < inst_.candidates.size(); ++c) {
      if (forbidden_[c] || gain_[c] == 0) continue;
      std::vector<int> row;
      for (int u : inst_.covers[c]) {
        if (column[u] >= 0) row.push_back(column[u]);
      }
      rows.push_back(std::move(row));
    }
    const std::size_t tableau = rows.size() * (rows.size() + open.size());
    if (tableau <= (root ? kMaxPackingLpTableau : kNodeLpTableau)) {
      const PackingLpResult lp =
          SolvePackingLp(rows, static_cast<int>(open.size()));
      if (lp.converged) bound = std::max(bound, CeilBound(lp.value));
    }
    return bound;
  }

  const DominationInstance& inst_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> cover_count_;
  std::vector<char> forbidden_;
  std::vector<int> gain_;  // uncovered elements each candidate would cover
  int uncovered_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  std::int64_t nodes_ = 0;
  std::int64_t root_bound_ = 0;
  bool timed_out_ = false;
  bool exhausted_ = false;
};

std::vector<int> GreedyCover(const DominationInstance& inst) {
  std::vector<char> covered(inst.universe.size(), 0);
  std::size_t remaining = inst.universe.size();
  std::vector<int> chosen;
  while (remaining > 0) {
    int best_c = -1;
    int best_gain = 0;
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
      int gain = 0;
      for (int u : inst.covers[c]) gain += covered[u] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best_c = static_cast<int>(c);
      }
    }
    chosen.push_back(best_c);
    for (int u : inst.covers[best_c]) {
      if (!covered[u]) {
        covered[u] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

DominationInstance DominationInstance::Build(int r, int d) {
  if (r < 1 || d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need r >= 1 and d >= 1");
  }
  if (Binomial(d + r - 2, r - 1) > kMaxDominationUniverse) {
    throw Error(ErrorCode::kCapExceeded,
                "universe larger than " +
                    std::to_string(kMaxDominationUniverse) + " monomials");
  }
  DominationInstance inst;
  inst.r = r;
  inst.d = d;
  inst.universe = MonomialsOfDegree(r - 1, d);
  inst.candidates = MonomialsOfDegree(r, d);
  std::map<Monomial, int> universe_index;
  std::map<Monomial, int> candidate_index;
  for (std::size_t i = 0; i < inst.universe.size(); ++i) {
    universe_index.emplace(inst.universe[i], static_cast<int>(i));
  }
  for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
    candidate_index.emplace(inst.candidates[i], static_cast<int>(i));
  }
  inst.covers.resize(inst.candidates.size());
  inst.covered_by.resize(inst.universe.size());
  for (std::size_t u = 0; u < inst.universe.size(); ++u) {
    for (const Monomial& m : MultiplesOneStep(inst.universe[u], d)) {
      const int c = candidate_index.at(m);
      inst.covered_by[u].push_back(c);
      inst.covers[c].push_back(static_cast<int>(u));
    }
    std::sort(inst.covered_by[u].begin(), inst.covered_by[u].end());
  }
  for (auto& list : inst.covers) std::sort(list.begin(), list.end());
  return inst;
}

bool DominationInstance::IsCover(const std::vector<Monomial>& chosen) const {
  for (const Monomial& u : universe) {
    const bool hit = std::any_of(chosen.begin(), chosen.end(),
                                 [&](const Monomial& c) {
                                   return c.degree() == r && Divides(u, c);
                                 });
    if (!hit) return false;
  }
  return true;
}

DominationResult FExact(int r, int d, const SearchBudget& budget) {
  const DominationInstance inst = DominationInstance::Build(r, d);

  // Incumbent: the smallest standard colour class, or greedy if smaller.
  const std::vector<std::int64_t> sizes = ColourClassSizes(r, d);
  const int colour = static_cast<int>(
      std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<int> incumbent;
  for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
    if (ColourOf(inst.candidates[c]) == colour) {
      incumbent.push_back(static_cast<int>(c));
    }
  }
  std::vector<int> greedy = GreedyCover(inst);
  if (greedy.size() < incumbent.size()) incumbent = std::move(greedy);

  CoverSearch search(inst, budget);
  search.Run(std::move(incumbent));

  DominationResult result;
  result.r = r;
  result.d = d;
  std::vector<int> best = search.best();
  std::sort(best.begin(), best.end());
  for (int c : best) result.witness.push_back(inst.candidates[c]);
  result.value = static_cast<std::int64_t>(best.size());
  result.optimal = search.exhausted();
  result.nodes_explored = search.nodes();
  result.lower_bound = result.optimal ? result.value : search.root_bound();
  return result;
}

int ColourOf(const Monomial& m) {
  const int d = m.num_variables();
  long long weighted = 0;
  for (int i = 0; i < d; ++i) weighted += static_cast<long long>(i) * m.exponent(i);
  return static_cast<int>(weighted % d);
}

std::vector<std::int64_t> ColourClassSizes(int r, int d) {
  std::vector<std::int64_t> sizes(d, 0);
  for (const Monomial& m : MonomialsOfDegree(r, d)) ++sizes[ColourOf(m)];
  return sizes;
}

std::vector<Monomial> ColourClass(int r, int d, int colour) {
  std::vector<Monomial> out;
  for (const Monomial& m : MonomialsOfDegree(r, d)) {
    if (ColourOf(m) == colour) out.push_back(m);
  }
  return out;
}

std::int64_t FBar(int r, int d) {
  if (r < 1 || d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need r >= 1 and d >= 1");
  }
  const std::vector<std::int64_t> sizes = ColourClassSizes(r, d);
  return *std::min_element(sizes.begin(), sizes.end());
}

bool AdjacentInG(const Monomial& a, const Monomial& b) {
  if (a.num_variables() != b.num_variables() || a.degree() != b.degree()) {
    return false;
  }
  int up = 0;
  int down = 0;
  for (int i = 0; i < a.num_variables(); ++i) {
    const int diff = b.exponent(i) - a.exponent(i);
    if (diff == 1) {
      ++up;
    } else if (diff == -1) {
      ++down;
    } else if (diff != 0) {
      return false;
    }
  }
  return up == 1 && down == 1;
}

bool AdjacentInTG(const Monomial& a, const Monomial& b) {
  if (AdjacentInG(a, b)) return true;
  if (a.num_variables() != b.num_variables()) return false;
  if (std::abs(a.degree() - b.degree()) != 1) return false;
  return a.degree() < b.degree() ? Divides(a, b) : Divides(b, a);
}

std::string_view ScanStatusName(ScanStatus status) {
  switch (status) {
    case ScanStatus::kConfirmed: return "confirmed";
    case ScanStatus::kGap: return "gap";
    case ScanStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

std::vector<ScanRow> ConjectureScan(int r_max, int d_max,
                                    const SearchBudget& budget_per_cell,
                                    int threads) {
  std::vector<ScanRow> rows;
  for (int r = 1; r <= r_max; ++r) {
    for (int d = 1; d <= d_max; ++d) {
      ScanRow row;
      row.r = r;
      row.d = d;
      rows.push_back(row);
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      ScanRow& row = rows[i];
      row.search = FExact(row.r, row.d, budget_per_cell);
      row.f = row.search.value;
      row.f_optimal = row.search.optimal;
      row.f_bar = FBar(row.r, row.d);
      row.l2 = NecklacesL2(row.r, row.d);
      if (!row.f_optimal) {
        row.status = ScanStatus::kTimeout;
      } else if (BigInt(row.f) == row.l2 && row.f == row.f_bar) {
        row.status = ScanStatus::kConfirmed;
      } else {
        row.status = ScanStatus::kGap;
      }
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace paving
