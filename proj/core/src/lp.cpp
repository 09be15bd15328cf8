// Copyright 2026 The Authors.
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

#include "dressian/lp.hpp"

#include <cstddef>

#include "dressian/errors.hpp"

namespace dressian {

LpResult lp_feasible(const Mat& a, const Vec& b) {
  const size_t m = a.size();
  const size_t k = m ? a[0].size() : 0;
  LpResult res;
  if (m == 0) {
    res.feasible = true;
    res.solution.assign(k, Rat(0));
    return res;
  }

  // tableau rows [A | I | rhs] with rhs >= 0; artificial j in column k+j
  std::vector<bool> flipped(m, false);
  Mat t(m, Vec(k + m + 1, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    bool f = b[i] < 0;
    flipped[i] = f;
    for (size_t j = 0; j < k; ++j) t[i][j] = f ? -a[i][j] : a[i][j];
    t[i][k + i] = 1;
    t[i][k + m] = f ? -b[i] : b[i];
  }
  // reduced-cost row for  min sum(artificials),  basis = artificials:
  // r[j] = c_j - sum_i t[i][j];  robj = -objective
  std::vector<size_t> basis(m);
  Vec r(k + m + 1, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    basis[i] = k + i;
    for (size_t j = 0; j <= k + m; ++j) r[j] -= t[i][j];
  }
  for (size_t j = 0; j < m; ++j) r[k + j] += 1;

  // Dantzig until the objective stalls too long, then Bland (cycle-proof).
  bool bland = false;
  size_t stall = 0;
  const size_t stall_limit = 2 * (k + m) + 16;
  while (true) {
    size_t enter = k + m;
    if (!bland) {
      const Rat* best = nullptr;
      for (size_t j = 0; j < k + m; ++j)
        if (r[j] < 0 && (!best || r[j] < *best)) {
          best = &r[j];
          enter = j;
        }
    } else {
      for (size_t j = 0; j < k + m; ++j)
        if (r[j] < 0) {
          enter = j;
          break;
        }
    }
    if (enter == k + m) break;  // optimal

    size_t leave = m;
    Rat best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][k + m] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw InternalError("phase-1 simplex unbounded");  // cannot happen

    Rat old_obj = r[k + m];
    // pivot on (leave, enter)
    Rat piv = t[leave][enter];
    for (size_t j = 0; j <= k + m; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= k + m; ++j) t[i][j] -= f * t[leave][j];
    }
    if (r[enter] != 0) {
      Rat f = r[enter];
      for (size_t j = 0; j <= k + m; ++j) r[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    if (!bland) {
      stall = (r[k + m] == old_obj) ? stall + 1 : 0;
      if (stall > stall_limit) bland = true;
    }
  }

  // objective value = -r[k+m]
  if (r[k + m] == 0) {
    res.feasible = true;
    res.solution.assign(k, Rat(0));
    for (size_t i = 0; i < m; ++i)
      if (basis[i] < k) res.solution[basis[i]] = t[i][k + m];
  } else {
    res.feasible = false;
    // y_i = 1 - r[k+i] for the sign-adjusted rows; undo the flips
    res.farkas.assign(m, Rat(0));
    for (size_t i = 0; i < m; ++i) {
      Rat y = 1 - r[k + i];
      res.farkas[i] = flipped[i] ? -y : y;
    }
  }
  return res;
}

bool in_cone(const Mat& generators, const Vec& target, Vec* witness) {
  if (generators.empty()) {
    if (is_zero(target)) {
      if (witness) witness->clear();
      return true;
    }
    return false;
  }
  const size_t dim = target.size();
  Mat a(dim, Vec(generators.size(), Rat(0)));
  for (size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != dim)
      throw DimMismatch("in_cone: generator dimension mismatch");
    for (size_t i = 0; i < dim; ++i) a[i][g] = generators[g][i];
  }
  LpResult res = lp_feasible(a, target);
  if (res.feasible && witness) *witness = res.solution;
  return res.feasible;
}

}  // namespace dressian
