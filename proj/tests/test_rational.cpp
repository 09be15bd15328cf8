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

#include "dressian/rational.hpp"

#include "doctest.h"

using namespace dressian;

static Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(Rat(3, 2)) == "3/2");
  CHECK(rat_to_string(Rat(-7)) == "-7");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_from_string("3/2") == Rat(3, 2));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK_THROWS_AS(rat_from_string("x"), InputError);
  CHECK_THROWS_AS(rat_from_string("1/0"), InputError);
}

TEST_CASE("make_primitive scales positively") {
  Vec a = {Rat(-2, 3), Rat(4, 3), Rat(-2)};
  make_primitive(a);
  CHECK(a == Vec{Rat(-1), Rat(2), Rat(-3)});  // sign kept
  Vec b = a;
  make_primitive_signed(b);
  CHECK(b == Vec{Rat(1), Rat(-2), Rat(3)});  // leading entry forced positive
}

TEST_CASE("rref canonical and idempotent") {
  Mat m = {v({2, 4, 6}), v({1, 2, 4}), v({3, 6, 10})};
  rref(m);
  Mat again = m;
  rref(again);
  CHECK(m == again);
  CHECK(m.size() == 2);
  CHECK(rank(m) == 2);
  // pivots increasing, pivot entries positive
  CHECK(m[0][0] > 0);
}

TEST_CASE("kernel basis solves the system") {
  Mat m = {v({1, 1, 1, 0}), v({0, 1, -1, 2})};
  Mat k = kernel_basis(m, 4);
  CHECK(k.size() == 2);
  for (const Vec& x : k)
    for (const Vec& row : m) CHECK(dot(row, x) == 0);

  CHECK(kernel_basis(Mat{}, 3).size() == 3);
  Mat full = {v({1, 0}), v({0, 1})};
  CHECK(kernel_basis(full, 2).empty());
}

TEST_CASE("reduce_mod_rowspan is a projection") {
  Mat m = {v({1, 0, 2}), v({0, 1, -1})};
  rref(m);
  Vec x = v({3, 5, 7});
  Vec r = reduce_mod_rowspan(m, x);
  Vec r2 = reduce_mod_rowspan(m, r);
  CHECK(r == r2);
  // difference lies in the rowspan: rank does not grow
  Mat stack = m;
  Vec diff(3);
  for (int i = 0; i < 3; ++i) diff[i] = x[i] - r[i];
  stack.push_back(diff);
  CHECK(rank(stack) == 2);
  CHECK(reduce_mod_rowspan(m, v({1, 0, 2})) == Vec(3, Rat(0)));
}

TEST_CASE("solve_linear") {
  Mat m = {v({2, 1}), v({1, -1})};
  Vec out;
  REQUIRE(solve_linear(m, v({5, 1}), out));
  CHECK(out == Vec{Rat(2), Rat(1)});
  Mat sing = {v({1, 1}), v({2, 2})};
  CHECK_FALSE(solve_linear(sing, v({1, 3}), out));
}
