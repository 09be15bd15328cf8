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

#ifndef DRESSIAN_LP_HPP_
#define DRESSIAN_LP_HPP_

#include "dressian/rational.hpp"

namespace dressian {

// Outcome of the feasibility problem {nu >= 0 : A nu = b}.
struct LpResult {
  bool feasible = false;
  // feasible: nu with A nu = b, nu >= 0 (size = #columns of A)
  Vec solution;
  // infeasible: y with y^T A <= 0 componentwise and y^T b > 0
  Vec farkas;
};

// Exact phase-1 simplex.  A is row-major (m rows, k columns), b has length
// m.  Dantzig pivoting with an automatic switch to Bland's rule when the
// objective stalls, so termination is guaranteed.
LpResult lp_feasible(const Mat& a, const Vec& b);

// Is target in the cone of nonnegative combinations of the generators?
// On success *witness (if given) receives the combination coefficients.
bool in_cone(const Mat& generators, const Vec& target, Vec* witness = nullptr);

}  // namespace dressian

#endif  // DRESSIAN_LP_HPP_
