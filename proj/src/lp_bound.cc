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

#include "paving/lp_bound.h"

#include <algorithm>
#include <cmath>

namespace paving {
namespace {

constexpr double kEps = 1e-9;
// Consecutive degenerate pivots before switching to Bland's rule.
constexpr int kDegenerateLimit = 50;

}  // namespace

PackingLpResult SolvePackingLp(const std::vector<std::vector<int>>& rows,
                               int num_columns, int max_iterations) {
  PackingLpResult result;
  result.weights.assign(num_columns, 0.0);
  const int m = static_cast<int>(rows.size());
  const int n = num_columns;
  if (n == 0) {
    result.converged = true;
    return result;
  }
  if (m == 0) return result;  // unbounded; no bound available

  // Columns 0..n-1 structural, n..n+m-1 slack, last column the right side.
  const int width = n + m + 1;
  std::vector<double> tab(static_cast<std::size_t>(m) * width, 0.0);
  auto at = [&](int i, int j) -> double& {
    return tab[static_cast<std::size_t>(i) * width + j];
  };
  for (int i = 0; i < m; ++i) {
    for (int j : rows[i]) at(i, j) = 1.0;
    at(i, n + i) = 1.0;
    at(i, width - 1) = 1.0;
  }
  std::vector<double> reduced(width, 0.0);
  for (int j = 0; j < n; ++j) reduced[j] = -1.0;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  int degenerate_run = 0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    const bool bland = degenerate_run > kDegenerateLimit;
    int enter = -1;
    double most_negative = -kEps;
    for (int j = 0; j < n + m; ++j) {
      if (reduced[j] < most_negative) {
        enter = j;
        if (bland) break;
        most_negative = reduced[j];
      }
    }
    if (enter < 0) {
      result.converged = true;
      break;
    }
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      const double a = at(i, enter);
      if (a <= kEps) continue;
      const double ratio = at(i, width - 1) / a;
      if (leave < 0 || ratio < best_ratio - kEps ||
          (ratio <= best_ratio + kEps && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return result;  // unbounded direction
    degenerate_run = best_ratio <= kEps ? degenerate_run + 1 : 0;

    const double pivot = at(leave, enter);
    for (int j = 0; j < width; ++j) at(leave, j) /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double factor = at(i, enter);
      if (std::abs(factor) <= 1e-15) continue;
      for (int j = 0; j < width; ++j) at(i, j) -= factor * at(leave, j);
    }
    const double factor = reduced[enter];
    for (int j = 0; j < width; ++j) reduced[j] -= factor * at(leave, j);
    basis[leave] = enter;
  }
  if (!result.converged) return result;

  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) {
      result.weights[basis[i]] = std::max(0.0, at(i, width - 1));
    }
  }
  double max_load = 0.0;
  for (const auto& row : rows) {
    double load = 0.0;
    for (int j : row) load += result.weights[j];
    max_load = std::max(max_load, load);
  }
  if (max_load > 1.0) {
    for (double& w : result.weights) w /= max_load;
  }
  for (double w : result.weights) result.value += w;
  return result;
}

}  // namespace paving
