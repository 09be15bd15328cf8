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

#include <random>

#include "doctest.h"
#include "dressian/cone.hpp"
#include "dressian/lp.hpp"
#include "support/oracles.hpp"

using namespace dressian;

static Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

TEST_CASE("lp_feasible basic") {
  // x + y = 2, x - y = 0 has x = y = 1
  Mat a = {v({1, 1}), v({1, -1})};
  LpResult r = lp_feasible(a, v({2, 0}));
  REQUIRE(r.feasible);
  CHECK(r.solution == Vec{Rat(1), Rat(1)});

  // x + y = -1 with x,y >= 0 infeasible; farkas certificate checks out
  Mat b = {v({1, 1})};
  LpResult s = lp_feasible(b, v({-1}));
  REQUIRE_FALSE(s.feasible);
  REQUIRE(s.farkas.size() == 1);
  CHECK(s.farkas[0] * Rat(-1) > 0);       // y^T b > 0
  CHECK(s.farkas[0] * Rat(1) <= 0);       // y^T A <= 0
}

TEST_CASE("in_cone membership with witness") {
  Mat gens = {v({1, 0}), v({1, 1})};
  Vec w;
  CHECK(in_cone(gens, v({3, 1}), &w));
  REQUIRE(w.size() == 2);
  CHECK(w[0] * gens[0][0] + w[1] * gens[1][0] == 3);
  CHECK(w[0] * gens[0][1] + w[1] * gens[1][1] == 1);
  CHECK(w[0] >= 0);
  CHECK(w[1] >= 0);
  CHECK_FALSE(in_cone(gens, v({-1, 0})));
  CHECK_FALSE(in_cone(gens, v({0, 1})));
  CHECK(in_cone(gens, v({0, 0})));
  CHECK(in_cone(Mat{}, v({0, 0})));
  CHECK_FALSE(in_cone(Mat{}, v({1, 0})));
}

TEST_CASE("make_cone folds implied equalities") {
  // x >= 0, -x >= 0 collapses to the hyperplane x = 0
  Cone c = make_cone(2, {}, {v({1, 0}), v({-1, 0})});
  CHECK(c.inequalities.empty());
  CHECK(c.equalities.size() == 1);
  CHECK(c.dimension == 1);
  CHECK(c.relint == Vec(2, Rat(0)));

  // x >= 0, y >= 0, -x-y >= 0 collapses to the origin
  Cone z = make_cone(2, {}, {v({1, 0}), v({0, 1}), v({-1, -1})});
  CHECK(z.dimension == 0);
  CHECK(z.equalities.size() == 2);
  CHECK(z.inequalities.empty());
}

TEST_CASE("make_cone removes redundant inequalities") {
  // x >= 0, y >= 0, x + y >= 0 (last redundant)
  Cone c = make_cone(2, {}, {v({1, 0}), v({0, 1}), v({1, 1})});
  CHECK(c.inequalities.size() == 2);
  CHECK(c.dimension == 2);
  // quadrant relint is strictly positive
  CHECK(c.relint[0] > 0);
  CHECK(c.relint[1] > 0);
}

TEST_CASE("canonicalization is idempotent") {
  Cone c = make_cone(3, {v({1, 1, 1})}, {v({1, -1, 0}), v({2, 1, -3})});
  Cone c2 = make_cone(3, c.equalities, c.inequalities);
  CHECK(c == c2);
  CHECK(canonical_key(c) == canonical_key(c2));
}

TEST_CASE("intersect and dim monotonicity") {
  Cone half = make_cone(2, {}, {v({1, 0})});
  Cone opposite = make_cone(2, {}, {v({-1, 0})});
  Cone line = intersect(half, opposite);
  CHECK(line.dimension == 1);
  CHECK(line.is_subspace());

  Cone full = full_space(2);
  CHECK(intersect(half, full) == half);
  CHECK(dim(intersect(half, opposite)) <= std::min(dim(half), dim(opposite)));
}

TEST_CASE("contains") {
  Cone quadrant = make_cone(2, {}, {v({1, 0}), v({0, 1})});
  Cone ray = make_cone(2, {v({0, 1})}, {v({1, 0})});
  Cone diag = make_cone(2, {v({1, -1})}, {v({1, 0})});
  CHECK(contains(quadrant, ray));
  CHECK(contains(quadrant, diag));
  CHECK_FALSE(contains(ray, quadrant));
  CHECK(contains(quadrant, quadrant));
  Cone other = make_cone(2, {v({0, 1})}, {v({-1, 0})});
  CHECK_FALSE(contains(quadrant, other));
}

TEST_CASE("relative interior point is strict") {
  Cone c = make_cone(3, {v({1, 1, 1})}, {v({1, -1, 0}), v({0, 1, -1})});
  const Vec& p = relative_interior_point(c);
  for (const Vec& e : c.equalities) CHECK(dot(e, p) == 0);
  for (const Vec& a : c.inequalities) CHECK(dot(a, p) > 0);
}

TEST_CASE("cone lineality") {
  Cone half3 = make_cone(3, {}, {v({1, 0, 0})});
  LinearSubspace l = cone_lineality(half3);
  CHECK(l.dim() == 2);
  LinearSubspace common = lineality({half3, make_cone(3, {}, {v({0, 1, 0})})});
  CHECK(common.dim() == 1);
}

TEST_CASE("random cones agree with Fourier-Motzkin") {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<int> coin(-2, 2);
  for (int trial = 0; trial < 120; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 4);  // 2..5
    int n_eq = static_cast<int>(rng() % 2);
    int n_in = 1 + static_cast<int>(rng() % 5);
    Mat eqs, ineqs;
    for (int i = 0; i < n_eq; ++i) {
      Vec row(dim);
      for (auto& x : row) x = coin(rng);
      if (!is_zero(row)) eqs.push_back(row);
    }
    for (int i = 0; i < n_in; ++i) {
      Vec row(dim);
      for (auto& x : row) x = coin(rng);
      if (!is_zero(row)) ineqs.push_back(row);
    }
    Cone c = make_cone(dim, eqs, ineqs);

    // the engine's strict pattern must be FM-strict-feasible, and each
    // folded inequality must be FM-strict-infeasible in the original system
    if (!c.inequalities.empty()) {
      CHECK(oracles::fm_strict_feasible(Mat(c.equalities.begin(), c.equalities.end()),
                                        c.inequalities, {}, dim));
    }
    for (const Vec& a : ineqs) {
      bool can_be_strict =
          oracles::fm_strict_feasible(eqs, {a}, ineqs, dim);
      // a is strict somewhere on the cone iff it is not identically 0 on it;
      // engine view: a reduced mod final equalities is nonzero
      Vec r = reduce_mod_rowspan(c.equalities, a);
      CHECK(can_be_strict == !is_zero(r));
    }

    // relint point satisfies the original constraints
    const Vec& p = relative_interior_point(c);
    for (const Vec& e : eqs) CHECK(dot(e, p) == 0);
    for (const Vec& a : ineqs) CHECK(dot(a, p) >= 0);
  }
}
