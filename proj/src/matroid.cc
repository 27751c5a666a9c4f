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

#include "paving/matroid.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "paving/isomorphism.h"

namespace paving {
namespace {

constexpr int kMaxRankTableElements = 20;

std::string SetToString(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : ToElements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void SortBases(std::vector<ElementSet>& bases) {
  std::sort(bases.begin(), bases.end(), LexLess);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

// Removes element e from `s` and shifts the higher elements down by one.
ElementSet Squeeze(ElementSet s, int e) {
  const ElementSet low = s & (Singleton(e) - 1);
  const ElementSet high = (s >> (e + 1)) << e;
  return low | high;
}

void CheckElement(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "element " + std::to_string(e) + " not in ground set of size " +
                    std::to_string(m.size()));
  }
}

void CheckRankTableSize(const Matroid& m) {
  if (m.size() > kMaxRankTableElements) {
    throw Error(ErrorCode::kCapExceeded,
                "subset tabulation limited to " +
                    std::to_string(kMaxRankTableElements) + " elements");
  }
}

std::vector<int> DropLabel(const std::vector<int>& labels, int e) {
  std::vector<int> out = labels;
  out.erase(out.begin() + e);
  return out;
}

}  // namespace

Matroid Matroid::FromBases(int n, std::vector<ElementSet> bases) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative ground set");
  if (n > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded,
                "ground set larger than " + std::to_string(kMaxStoredElements));
  }
  if (bases.empty()) throw Error(ErrorCode::kEmptyBases, "no bases given");
  const ElementSet ground = FullSet(n);
  for (ElementSet b : bases) {
    if ((b & ~ground) != 0) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "basis " + SetToString(b) + " leaves the ground set");
    }
  }
  const int r = Cardinality(bases.front());
  for (ElementSet b : bases) {
    if (Cardinality(b) != r) {
      throw Error(ErrorCode::kUnequalBasisSizes,
                  "bases " + SetToString(bases.front()) + " and " +
                      SetToString(b) + " differ in size");
    }
  }
  SortBases(bases);
  Matroid m(n, r, std::move(bases));
  if (n <= kMaxCheckedElements) {
    for (ElementSet b1 : m.bases_) {
      for (ElementSet b2 : m.bases_) {
        const ElementSet out = b1 & ~b2;
        const ElementSet in = b2 & ~b1;
        for (int e : ToElements(out)) {
          bool exchanged = false;
          for (int f : ToElements(in)) {
            if (m.IsBasis((b1 & ~Singleton(e)) | Singleton(f))) {
              exchanged = true;
              break;
            }
          }
          if (!exchanged) {
            throw Error(ErrorCode::kExchangeAxiomViolated,
                        "no exchange for element " + std::to_string(e) +
                            " between bases " + SetToString(b1) + " and " +
                            SetToString(b2));
          }
        }
      }
    }
  }
  return m;
}

Matroid Matroid::FromBasisLists(int n,
                                const std::vector<std::vector<int>>& bases) {
  std::vector<ElementSet> sets;
  sets.reserve(bases.size());
  for (const auto& list : bases) {
    for (int e : list) {
      if (e < 0 || e >= n) {
        throw Error(ErrorCode::kElementOutOfRange,
                    "element " + std::to_string(e) + " out of range");
      }
    }
    sets.push_back(FromElements(list));
  }
  return FromBases(n, std::move(sets));
}

Matroid Matroid::FromBasesUnchecked(int n, std::vector<ElementSet> bases) {
  SortBases(bases);
  const int r = bases.empty() ? 0 : Cardinality(bases.front());
  return Matroid(n, r, std::move(bases));
}

bool Matroid::IsBasis(ElementSet s) const {
  if (Cardinality(s) != rank_) return false;
  return std::binary_search(bases_.begin(), bases_.end(), s, LexLess);
}

bool Matroid::IsIndependent(ElementSet s) const {
  return std::any_of(bases_.begin(), bases_.end(),
                     [s](ElementSet b) { return (s & ~b) == 0; });
}

RankTable::RankTable(const Matroid& m) {
  CheckRankTableSize(m);
  const std::size_t count = std::size_t{1} << m.size();
  std::vector<std::uint8_t> independent(count, 0);
  for (ElementSet b : m.bases()) independent[b] = 1;
  for (std::size_t s = count; s-- > 0;) {
    if (independent[s]) continue;
    for (int e = 0; e < m.size(); ++e) {
      const std::size_t bigger = s | Singleton(e);
      if (bigger != s && independent[bigger]) {
        independent[s] = 1;
        break;
      }
    }
  }
  rank_.assign(count, 0);
  for (std::size_t s = 0; s < count; ++s) {
    if (independent[s]) {
      rank_[s] = static_cast<std::uint8_t>(Cardinality(static_cast<ElementSet>(s)));
      continue;
    }
    std::uint8_t best = 0;
    for (ElementSet rest = static_cast<ElementSet>(s); rest != 0;
         rest &= rest - 1) {
      const ElementSet smaller = static_cast<ElementSet>(s) & ~(rest & (~rest + 1));
      best = std::max(best, rank_[smaller]);
    }
    rank_[s] = best;
  }
}

Matroid Uniform(int r, int n) {
  if (n < 0 || n > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded, "ground set size out of range");
  }
  if (r < 0 || r > n) {
    throw Error(ErrorCode::kInvalidRank, "uniform matroid needs 0 <= r <= n");
  }
  std::vector<ElementSet> bases;
  ForEachSubsetOfSize(n, r, [&](ElementSet s) { bases.push_back(s); });
  return Matroid::FromBasesUnchecked(n, std::move(bases));
}

Matroid Dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  const ElementSet ground = m.ground_set();
  for (ElementSet b : m.bases()) bases.push_back(ground & ~b);
  return Matroid::FromBasesUnchecked(m.size(), std::move(bases));
}

Matroid Delete(const Matroid& m, int e, std::vector<int>* origin) {
  CheckElement(m, e);
  if (Contains(Coloops(m), e)) return Contract(m, e, origin);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if (!Contains(b, e)) bases.push_back(Squeeze(b, e));
  }
  if (origin != nullptr) {
    std::vector<int> labels(m.size());
    std::iota(labels.begin(), labels.end(), 0);
    *origin = DropLabel(labels, e);
  }
  return Matroid::FromBasesUnchecked(m.size() - 1, std::move(bases));
}

Matroid Contract(const Matroid& m, int e, std::vector<int>* origin) {
  CheckElement(m, e);
  if (Contains(Loops(m), e)) return Delete(m, e, origin);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if (Contains(b, e)) bases.push_back(Squeeze(b & ~Singleton(e), e));
  }
  if (origin != nullptr) {
    std::vector<int> labels(m.size());
    std::iota(labels.begin(), labels.end(), 0);
    *origin = DropLabel(labels, e);
  }
  return Matroid::FromBasesUnchecked(m.size() - 1, std::move(bases));
}

Matroid Minor(const Matroid& m, ElementSet contract, ElementSet remove,
              std::vector<int>* origin) {
  if ((contract & remove) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "contraction and deletion sets must be disjoint");
  }
  if (((contract | remove) & ~m.ground_set()) != 0) {
    throw Error(ErrorCode::kElementOutOfRange, "minor set leaves ground set");
  }
  std::vector<int> labels(m.size());
  std::iota(labels.begin(), labels.end(), 0);
  Matroid current = m;
  // Highest labels first, so lower labels stay put while we go.
  for (int e = m.size() - 1; e >= 0; --e) {
    if (Contains(contract, e)) {
      current = Contract(current, e);
    } else if (Contains(remove, e)) {
      current = Delete(current, e);
    } else {
      continue;
    }
    labels = DropLabel(labels, e);
  }
  if (origin != nullptr) *origin = std::move(labels);
  return current;
}

ElementSet Loops(const Matroid& m) {
  ElementSet used = 0;
  for (ElementSet b : m.bases()) used |= b;
  return m.ground_set() & ~used;
}

ElementSet Coloops(const Matroid& m) {
  ElementSet common = m.ground_set();
  for (ElementSet b : m.bases()) common &= b;
  return common;
}

int RankOf(const Matroid& m, ElementSet a) {
  int best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, Cardinality(a & b));
  return best;
}

ElementSet Closure(const Matroid& m, ElementSet a) {
  const int base_rank = RankOf(m, a);
  ElementSet closure = a;
  for (int e = 0; e < m.size(); ++e) {
    if (!Contains(a, e) && RankOf(m, a | Singleton(e)) == base_rank) {
      closure |= Singleton(e);
    }
  }
  return closure;
}

std::vector<ElementSet> Circuits(const Matroid& m) {
  const RankTable rank(m);
  std::vector<ElementSet> circuits;
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t s = 1; s < count; ++s) {
    const auto set = static_cast<ElementSet>(s);
    if (rank.IsIndependent(set)) continue;
    bool minimal = true;
    for (ElementSet rest = set; rest != 0 && minimal; rest &= rest - 1) {
      minimal = rank.IsIndependent(set & ~(rest & (~rest + 1)));
    }
    if (minimal) circuits.push_back(set);
  }
  std::sort(circuits.begin(), circuits.end(), [](ElementSet a, ElementSet b) {
    if (Cardinality(a) != Cardinality(b)) return Cardinality(a) < Cardinality(b);
    return LexLess(a, b);
  });
  return circuits;
}

std::vector<ElementSet> Hyperplanes(const Matroid& m) {
  std::vector<ElementSet> hyperplanes;
  if (m.rank() == 0) return hyperplanes;
  const RankTable rank(m);
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t s = 0; s < count; ++s) {
    const auto set = static_cast<ElementSet>(s);
    if (rank(set) != m.rank() - 1) continue;
    bool closed = true;
    for (int e = 0; e < m.size() && closed; ++e) {
      if (!Contains(set, e)) closed = rank(set | Singleton(e)) == m.rank();
    }
    if (closed) hyperplanes.push_back(set);
  }
  std::sort(hyperplanes.begin(), hyperplanes.end(),
            [](ElementSet a, ElementSet b) {
              if (Cardinality(a) != Cardinality(b)) {
                return Cardinality(a) < Cardinality(b);
              }
              return LexLess(a, b);
            });
  return hyperplanes;
}

bool IsConnected(const Matroid& m) {
  if (m.size() <= 1) return true;
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : Circuits(m)) {
    const std::vector<int> elements = ToElements(c);
    for (std::size_t i = 1; i < elements.size(); ++i) {
      parent[find(elements[i])] = find(elements[0]);
    }
  }
  const int root = find(0);
  for (int e = 1; e < m.size(); ++e) {
    if (find(e) != root) return false;
  }
  return true;
}

bool IsPaving(const Matroid& m) {
  for (ElementSet c : Circuits(m)) {
    if (Cardinality(c) < m.rank()) return false;
  }
  return true;
}

bool IsSparsePaving(const Matroid& m) {
  std::vector<ElementSet> top;
  for (ElementSet c : Circuits(m)) {
    if (Cardinality(c) < m.rank()) return false;
    if (Cardinality(c) == m.rank()) top.push_back(c);
  }
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (Cardinality(top[i] ^ top[j]) <= 2) return false;
    }
  }
  return true;
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded, "direct sum too large");
  }
  std::vector<ElementSet> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (ElementSet x : a.bases()) {
    for (ElementSet y : b.bases()) bases.push_back(x | (y << a.size()));
  }
  return Matroid::FromBasesUnchecked(n, std::move(bases));
}

Matroid TwoThickening(const Matroid& m) {
  const int n = m.size();
  if (2 * n > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded, "thickening too large");
  }
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    // Each element of b is represented by either copy.
    ForEachSubsetOf(b, [&](ElementSet use_copy) {
      bases.push_back((b & ~use_copy) | (use_copy << n));
    });
  }
  return Matroid::FromBasesUnchecked(2 * n, std::move(bases));
}

Matroid TwoStretching(const Matroid& m) {
  return Dual(TwoThickening(Dual(m)));
}

Matroid FreeExtension(const Matroid& m) {
  const int n = m.size();
  if (n + 1 > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded, "extension too large");
  }
  std::vector<ElementSet> bases = m.bases();
  if (m.rank() > 0) {
    const ElementSet added = Singleton(n);
    for (ElementSet b : m.bases()) {
      for (ElementSet rest = b; rest != 0; rest &= rest - 1) {
        bases.push_back((b & ~(rest & (~rest + 1))) | added);
      }
    }
  }
  return Matroid::FromBasesUnchecked(n + 1, std::move(bases));
}

Matroid Rank2FromParallelClasses(const std::vector<int>& sizes) {
  if (sizes.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two classes");
  }
  std::vector<int> class_of;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] < 1) {
      throw Error(ErrorCode::kInvalidArgument, "class sizes must be positive");
    }
    class_of.insert(class_of.end(), sizes[c], static_cast<int>(c));
  }
  const int n = static_cast<int>(class_of.size());
  if (n > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded, "too many elements");
  }
  std::vector<ElementSet> bases;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (class_of[i] != class_of[j]) bases.push_back(Singleton(i) | Singleton(j));
    }
  }
  return Matroid::FromBasesUnchecked(n, std::move(bases));
}

bool HasMinor(const Matroid& m, const Matroid& minor) {
  const int removed = m.size() - minor.size();
  if (removed < 0) return false;
  bool found = false;
  ForEachSubsetOfSize(m.size(), removed, [&](ElementSet gone) {
    if (found) return;
    ForEachSubsetOf(gone, [&](ElementSet contract) {
      if (found) return;
      const ElementSet remove = gone & ~contract;
      const int minor_rank =
          RankOf(m, m.ground_set() & ~remove) - RankOf(m, contract);
      if (minor_rank != minor.rank()) return;
      const Matroid candidate = Minor(m, contract, remove);
      if (candidate.num_bases() == minor.num_bases() &&
          AreIsomorphic(candidate, minor)) {
        found = true;
      }
    });
  });
  return found;
}

}  // namespace paving
