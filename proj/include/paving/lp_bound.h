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

// Fractional packing bound for set cover.
//
// For a cover instance with sets S_1..S_m over elements 0..k-1, any weights
// y >= 0 with sum_{j in S_i} y_j <= 1 for every set satisfy
// sum_j y_j <= (minimum cover size). SolvePackingLp maximizes this with a
// dense primal simplex, then rescales the weights so the row constraints
// hold exactly in floating point; the returned value is therefore a valid
// lower bound up to summation rounding.

#ifndef PAVING_LP_BOUND_H_
#define PAVING_LP_BOUND_H_

#include <cstddef>
#include <vector>

namespace paving {

struct PackingLpResult {
  double value = 0.0;
  std::vector<double> weights;
  bool converged = false;
};

PackingLpResult SolvePackingLp(const std::vector<std::vector<int>>& rows,
                               int num_columns, int max_iterations = 20000);

// Rows * (columns + rows) tableau entries above which callers should not
// ask for an LP bound.
inline constexpr std::size_t kMaxPackingLpTableau = 4'000'000;

}  // namespace paving

#endif  // PAVING_LP_BOUND_H_
