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

#include "dressian/reduction.hpp"

#include <set>

#include "doctest.h"
#include "dressian/catalog.hpp"
#include "dressian/errors.hpp"
#include "dressian/matroid.hpp"
#include "dressian/plucker.hpp"

using namespace dressian;

namespace {
// ids: 0=x 1=y 2=z 3=w 4=u 5=v
TropicalPolynomial poly(std::vector<Term> ts) {
  TropicalPolynomial p;
  p.terms = std::move(ts);
  p.normalize();
  return p;
}

const Term XY{1, {{0, 1}, {1, 1}}};
const Term ZW{1, {{2, 1}, {3, 1}}};

bool has_eligible_binomial(const std::vector<TropicalPolynomial>& polys) {
  for (const TropicalPolynomial& p : polys)
    if (p.terms.size() == 2 && !p.degree_one_variables().empty()) return true;
  return false;
}
}  // namespace

TEST_CASE("binomial pair with opposite signs still reduces consistently") {
  // {xy - zw, xy + zw}: classically inconsistent (forces 2zw = 0), but the
  // tropical solution set is cut out by the single surviving substitution.
  TropicalPolynomial f1 = poly({XY, Term{-1, ZW.exps}});
  TropicalPolynomial f2 = poly({XY, ZW});
  ReducedSystem sys = reduce({f1, f2}, 4);

  CHECK(sys.polynomials.empty());
  CHECK(sys.inequalities.empty());
  REQUIRE(sys.chain.size() == 1);
  const Substitution& s = sys.chain[0];
  CHECK(s.eliminated == 0);
  CHECK(s.coefficient == Rat(1));
  CHECK(s.exponents == std::map<int, int>{{1, -1}, {2, 1}, {3, 1}});
  // nothing is left to constrain y, z, w: they are free, not part of the
  // reduced system's support
  CHECK(sys.surviving.empty());
  CHECK(sys.free_vars == std::vector<int>{1, 2, 3});
  CHECK(sys.dropped_collapsed == 1);
  CHECK(sys.dropped_pair_cancel == 0);
  CHECK(sys.dropped_pair_merge == 0);

  // x = z + w - y under the trivial valuation
  Vec lifted = lift_point({Rat(1), Rat(2), Rat(3)}, sys);
  CHECK(lifted == Vec{Rat(4), Rat(1), Rat(2), Rat(3)});
  CHECK_THROWS_AS(lift_point({Rat(1)}, sys), InvalidArgument);
}

TEST_CASE("substitute clears denominators but keeps integer content") {
  Substitution s;
  s.eliminated = 0;
  s.coefficient = 1;
  s.exponents = {{1, -1}, {2, 1}, {3, 1}};  // x -> zw/y

  // xy + zw -> zw + zw = 2zw; the doubled coefficient must survive
  TropicalPolynomial merged = substitute(poly({XY, ZW}), s);
  REQUIRE(merged.terms.size() == 1);
  CHECK(merged.terms[0].coeff == 2);
  CHECK(merged.terms[0].exps == std::map<int, int>{{2, 1}, {3, 1}});

  // xy - zw -> 0
  CHECK(substitute(poly({XY, Term{-1, ZW.exps}}), s).is_zero());

  // untouched polynomial is a no-op
  TropicalPolynomial g = poly({ZW, Term{-1, {{1, 2}}}});
  CHECK(substitute(g, s).terms == g.terms);

  // x^2*y -> z^2*w^2*y^{-1}: Laurent exponents remain; only coefficient
  // denominators are cleared
  TropicalPolynomial h = substitute(poly({Term{1, {{0, 2}, {1, 1}}}, ZW}), s);
  REQUIRE(h.terms.size() == 2);
  CHECK(h.terms[0].exps == std::map<int, int>{{2, 1}, {3, 1}});
  CHECK(h.terms[1].exps == std::map<int, int>{{1, -1}, {2, 2}, {3, 2}});
  CHECK(h.terms[0].coeff == 1);
  CHECK(h.terms[1].coeff == 1);

  // rational replacement coefficient: x -> w/2 turns xy + z into wy + 2z
  Substitution half;
  half.eliminated = 0;
  half.coefficient = Rat(1) / 2;
  half.exponents = {{3, 1}};
  TropicalPolynomial k =
      substitute(poly({XY, Term{1, {{2, 1}}}}), half);
  REQUIRE(k.terms.size() == 2);
  CHECK(k.terms[0].coeff == 2);
  CHECK(k.terms[0].exps == std::map<int, int>{{2, 1}});
  CHECK(k.terms[1].coeff == 1);
  CHECK(k.terms[1].exps == std::map<int, int>{{1, 1}, {3, 1}});
}

TEST_CASE("a lone trinomial is left alone") {
  RelationSet rs = generate_relations(uniform(2, 4));
  ReducedSystem sys = reduce(rs.relations, 6);
  CHECK(sys.chain.empty());
  CHECK(sys.polynomials.size() == 1);
  CHECK(sys.surviving.size() == 6);
  CHECK(sys.free_vars.empty());
  CHECK(sys.inequalities.empty());
}

TEST_CASE("pair groups record inequalities, split by cancellation") {
  TropicalPolynomial f1 = poly({XY, Term{-1, ZW.exps}});
  // xyu + zwu - y^2: pair merges (coefficients add)
  TropicalPolynomial f2 = poly({Term{1, {{0, 1}, {1, 1}, {4, 1}}},
                                Term{1, {{2, 1}, {3, 1}, {4, 1}}},
                                Term{-1, {{1, 2}}}});
  // xyu - zwu + y^2: pair cancels
  TropicalPolynomial f3 = poly({Term{1, {{0, 1}, {1, 1}, {4, 1}}},
                                Term{-1, {{2, 1}, {3, 1}, {4, 1}}},
                                Term{1, {{1, 2}}}});
  ReducedSystem sys = reduce({f1, f2, f3}, 5);
  CHECK(sys.chain.size() == 1);
  CHECK(sys.chain[0].eliminated == 0);
  CHECK(sys.polynomials.empty());
  CHECK(sys.dropped_pair_merge == 1);
  CHECK(sys.dropped_pair_cancel == 1);
  REQUIRE(sys.inequalities.size() == 2);
  for (const TropicalInequality& q : sys.inequalities) {
    CHECK(q.lesser == std::map<int, int>{{2, 1}, {3, 1}, {4, 1}});
    CHECK(q.greater == std::map<int, int>{{1, 2}});
  }
}

TEST_CASE("inequalities are rewritten by later eliminations") {
  TropicalPolynomial f1 = poly({XY, Term{-1, ZW.exps}});
  TropicalPolynomial f2 = poly({Term{1, {{0, 1}, {1, 1}, {4, 1}}},
                                Term{1, {{2, 1}, {3, 1}, {4, 1}}},
                                Term{-1, {{5, 2}}}});  // ineq zwu <= v^2
  TropicalPolynomial f3 = poly({Term{1, {{2, 1}, {3, 1}}},
                                Term{-1, {{4, 1}, {5, 1}}}});  // zw = uv
  ReducedSystem sys = reduce({f1, f2, f3}, 6);
  REQUIRE(sys.chain.size() == 2);
  CHECK(sys.chain[1].eliminated == 2);  // z -> uv/w
  REQUIRE(sys.inequalities.size() == 1);
  // zwu with z -> uv/w becomes u^2 v
  CHECK(sys.inequalities[0].lesser == std::map<int, int>{{4, 2}, {5, 1}});
  CHECK(sys.inequalities[0].greater == std::map<int, int>{{5, 2}});
}

TEST_CASE("inequalities whose sides merge are discarded") {
  TropicalPolynomial f1 = poly({XY, Term{-1, ZW.exps}});
  TropicalPolynomial f2 = poly({Term{1, {{0, 1}, {1, 1}, {4, 1}}},
                                Term{1, {{2, 1}, {3, 1}, {4, 1}}},
                                Term{-1, {{5, 2}}}});  // ineq zwu <= v^2
  TropicalPolynomial f3 = poly({Term{1, {{2, 1}, {3, 1}, {4, 1}}},
                                Term{-1, {{5, 2}}}});  // zwu = v^2
  ReducedSystem sys = reduce({f1, f2, f3}, 6);
  CHECK(sys.chain.size() == 2);
  CHECK(sys.inequalities.empty());
  CHECK(sys.polynomials.empty());
}

TEST_CASE("empty and trivial inputs") {
  ReducedSystem sys = reduce({}, 3);
  CHECK(sys.num_vars == 3);
  CHECK(sys.polynomials.empty());
  CHECK(sys.surviving.empty());
  CHECK(sys.free_vars == std::vector<int>{0, 1, 2});
}

TEST_CASE("star relations reduce to 17 variables under any order") {
  Matroid m = catalog("star");
  std::vector<TropicalPolynomial> rels =
      dedupe(generate_relations(m).relations);
  int nvars = static_cast<int>(m.bases().size());
  ReducedSystem base = reduce(rels, nvars);
  CHECK(base.surviving.size() == 17);
  CHECK(base.free_vars.size() == 3);
  CHECK(base.chain.size() == 90);
  CHECK(base.surviving.size() + base.free_vars.size() + base.chain.size() ==
        static_cast<size_t>(nvars));
  CHECK_FALSE(has_eligible_binomial(base.polynomials));

  // survivors never mention an eliminated variable
  std::set<int> alive(base.surviving.begin(), base.surviving.end());
  for (const TropicalPolynomial& p : base.polynomials)
    for (int v : p.variables()) CHECK(alive.count(v) == 1);
  for (const TropicalInequality& q : base.inequalities) {
    for (const auto& [v, e] : q.lesser) CHECK(alive.count(v) == 1);
    for (const auto& [v, e] : q.greater) CHECK(alive.count(v) == 1);
  }
  for (size_t i = 0; i < base.chain.size(); ++i) {
    const Substitution& s = base.chain[i];
    CHECK(s.exponents.count(s.eliminated) == 0);
    CHECK(alive.count(s.eliminated) == 0);
  }

  for (uint64_t seed : {1, 2, 3, 4, 5}) {
    ReduceOptions opt;
    opt.shuffle_seed = seed;
    ReducedSystem shuffled = reduce(rels, nvars, opt);
    CHECK(shuffled.surviving.size() == 17);
    CHECK_FALSE(has_eligible_binomial(shuffled.polynomials));
  }
}

TEST_CASE("trace log is populated on request") {
  TropicalPolynomial f1 = poly({XY, Term{-1, ZW.exps}});
  ReduceOptions opt;
  opt.trace = true;
  ReducedSystem sys = reduce({f1}, 4);
  CHECK(sys.log.empty());
  sys = reduce({f1}, 4, opt);
  CHECK(!sys.log.empty());
}
