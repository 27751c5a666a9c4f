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

#include "paving/paving_enum.h"

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <numeric>

namespace paving {
namespace {

// Hard limit: permutation tables grow as n! * 2^n.
constexpr int kMaxEnumerationElements = 8;
using BlockBits = std::bitset<256>;

void CheckCaps(int r, int n, const EnumerationOptions& options) {
  if (n < 0 || r < 0 || r > n) {
    throw Error(ErrorCode::kInvalidRank, "need 0 <= r <= n");
  }
  if (n > kMaxEnumerationElements) {
    throw Error(ErrorCode::kCapExceeded,
                "enumeration limited to 8 elements");
  }
  if (options.enforce_caps && n == 8 && r > 3) {
    throw Error(ErrorCode::kCapExceeded,
                "8-element enumeration only for rank <= 3");
  }
}

// Orderly generation of families of blocks (|block| >= min_size, or exactly
// min_size when `exact`) meeting pairwise in at most r-2 elements.
class OrderlyGenerator {
 public:
  OrderlyGenerator(int n, int r, bool exact) : n_(n), r_(r) {
    const ElementSet ground = FullSet(n);
    for (ElementSet s = 0; s <= ground; ++s) {
      const int size = Cardinality(s);
      if (s == ground || size < r) continue;
      if (exact && size != r) continue;
      blocks_.push_back(s);
    }
    std::sort(blocks_.begin(), blocks_.end(), [](ElementSet a, ElementSet b) {
      if (Cardinality(a) != Cardinality(b)) return Cardinality(a) < Cardinality(b);
      return LexLess(a, b);
    });
    std::vector<int> index_of(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      index_of[blocks_[i]] = static_cast<int>(i);
    }

    compatible_.resize(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
        if (Cardinality(blocks_[i] & blocks_[j]) <= r - 2) {
          compatible_[i].set(j);
        }
      }
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Skip the identity.
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<std::uint8_t> image(blocks_.size());
      for (std::size_t i = 0; i < blocks_.size(); ++i) {
        image[i] = static_cast<std::uint8_t>(index_of[PermuteSet(blocks_[i], perm)]);
      }
      images_.push_back(std::move(image));
    }
  }

  // Calls visit(blocks) once per isomorphism class of families.
  void Run(const std::function<void(const std::vector<ElementSet>&)>& visit) {
    std::vector<int> family;
    BlockBits all;
    for (std::size_t i = 0; i < blocks_.size(); ++i) all.set(i);
    Extend(family, all, visit);
  }

 private:
  void Extend(std::vector<int>& family, const BlockBits& allowed,
              const std::function<void(const std::vector<ElementSet>&)>& visit) {
    std::vector<ElementSet> sets;
    for (int i : family) sets.push_back(blocks_[i]);
    visit(sets);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (!allowed.test(j)) continue;
      family.push_back(static_cast<int>(j));
      if (IsCanonical(family)) {
        BlockBits next = allowed & compatible_[j];
        Extend(family, next, visit);
      }
      family.pop_back();
    }
  }

  // `family` is sorted; canonical iff no relabeling gives a lexicographically
  // smaller sorted index list.
  bool IsCanonical(const std::vector<int>& family) const {
    std::vector<int> image(family.size());
    for (const auto& table : images_) {
      for (std::size_t i = 0; i < family.size(); ++i) image[i] = table[family[i]];
      std::sort(image.begin(), image.end());
      if (image < family) return false;
    }
    return true;
  }

  int n_;
  int r_;
  std::vector<ElementSet> blocks_;
  std::vector<BlockBits> compatible_;
  std::vector<std::vector<std::uint8_t>> images_;
};

std::vector<ElementSet> BasesAvoidingBlocks(int n, int r,
                                            const std::vector<ElementSet>& blocks) {
  std::vector<ElementSet> bases;
  ForEachSubsetOfSize(n, r, [&](ElementSet s) {
    for (ElementSet block : blocks) {
      if ((s & ~block) == 0) return;
    }
    bases.push_back(s);
  });
  return bases;
}

std::vector<Matroid> Collect(int r, int n, bool exact,
                             const EnumerationOptions& options) {
  std::vector<std::pair<CanonicalForm, Matroid>> found;
  OrderlyGenerator generator(n, r, exact);
  generator.Run([&](const std::vector<ElementSet>& blocks) {
    std::vector<ElementSet> bases = BasesAvoidingBlocks(n, r, blocks);
    if (bases.empty()) return;
    Matroid m = Matroid::FromBasesUnchecked(n, std::move(bases));
    if (options.loopless && Loops(m) != 0) return;
    if (options.coloopless && Coloops(m) != 0) return;
    found.emplace_back(CanonicalFormOf(m), std::move(m));
  });
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Matroid> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace

bool PartitionFamily::IsPartition() const {
  if (r < 1) return false;
  for (ElementSet block : blocks) {
    if (Cardinality(block) < r - 1 || (block & ~FullSet(n)) != 0) return false;
  }
  bool ok = true;
  ForEachSubsetOfSize(n, r - 1, [&](ElementSet s) {
    int hits = 0;
    for (ElementSet block : blocks) hits += (s & ~block) == 0 ? 1 : 0;
    if (hits != 1) ok = false;
  });
  return ok;
}

PartitionFamily CompletePartition(int n, int r,
                                  std::vector<ElementSet> large_blocks) {
  PartitionFamily family{n, r, std::move(large_blocks)};
  std::vector<ElementSet> extra;
  ForEachSubsetOfSize(n, r - 1, [&](ElementSet s) {
    for (ElementSet block : family.blocks) {
      if ((s & ~block) == 0) return;
    }
    extra.push_back(s);
  });
  family.blocks.insert(family.blocks.end(), extra.begin(), extra.end());
  return family;
}

Matroid MatroidFromPartition(const PartitionFamily& family) {
  if (!family.IsPartition()) {
    throw Error(ErrorCode::kInvalidArgument,
                "blocks do not form an (r-1)-partition");
  }
  std::vector<ElementSet> bases =
      BasesAvoidingBlocks(family.n, family.r, family.blocks);
  if (bases.empty()) {
    throw Error(ErrorCode::kNoBases, "every r-subset lies inside a block");
  }
  return Matroid::FromBases(family.n, std::move(bases));
}

std::vector<Matroid> EnumeratePaving(int r, int n,
                                     const EnumerationOptions& options) {
  CheckCaps(r, n, options);
  return Collect(r, n, /*exact=*/false, options);
}

std::vector<Matroid> EnumerateSparsePaving(int r, int n,
                                           const EnumerationOptions& options) {
  CheckCaps(r, n, options);
  return Collect(r, n, /*exact=*/true, options);
}

GResult G(int r, int n, const EnumerationOptions& options) {
  EnumerationOptions strict = options;
  strict.loopless = true;
  strict.coloopless = true;
  const std::vector<Matroid> members = EnumeratePaving(r, n, strict);
  if (members.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no loopless, coloopless rank-" + std::to_string(r) +
                    " paving matroid on " + std::to_string(n) + " elements");
  }
  const auto lowest = std::min_element(
      members.begin(), members.end(), [](const Matroid& a, const Matroid& b) {
        return a.num_bases() < b.num_bases();
      });
  GResult result;
  result.value = lowest->num_bases() -
                 static_cast<std::int64_t>(Binomial(n - 1, r - 1));
  result.witness = *lowest;
  result.class_size = static_cast<std::int64_t>(members.size());
  return result;
}

}  // namespace paving
