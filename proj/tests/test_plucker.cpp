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

#include "dressian/plucker.hpp"

#include <set>

#include "doctest.h"
#include "dressian/catalog.hpp"
#include "dressian/errors.hpp"
#include "dressian/matroid.hpp"

using namespace dressian;

namespace {
// C(n,k) small
long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("U(2,4) has the single three-term relation") {
  Matroid m = uniform(2, 4);
  RelationSet rs = generate_relations(m);
  CHECK(rs.raw_count == 1);
  REQUIRE(rs.relations.size() == 1);
  const TropicalPolynomial& f = rs.relations[0];
  CHECK(f.terms.size() == 3);
  CHECK(poly_to_string(f, m.bases()) ==
        "+ p_{0,3}*p_{1,2} - p_{0,2}*p_{1,3} + p_{0,1}*p_{2,3}");
}

TEST_CASE("U(2,5) relations") {
  Matroid m = uniform(2, 5);
  RelationSet rs = generate_relations(m);
  // one relation per 4-subset of the ground set
  CHECK(rs.raw_count == 5);
  CHECK(rs.relations.size() == 5);
  for (const TropicalPolynomial& f : rs.relations) CHECK(f.terms.size() == 3);
}

TEST_CASE("raw counts follow the S-and-quadruple formula") {
  struct Row {
    std::string name;
    long expect;
  };
  std::vector<Row> rows = {
      {"uniform(2,4)", choose(4, 0) * choose(4, 4)},
      {"uniform(2,5)", choose(5, 0) * choose(5, 4)},
      {"uniform(3,6)", choose(6, 1) * choose(5, 4)},
      {"star", choose(10, 1) * choose(9, 4)},
      {"non-pappus", choose(9, 1) * choose(8, 4)},
      {"vamos", choose(8, 2) * choose(6, 4)},
  };
  for (const Row& r : rows) {
    RelationSet rs = generate_relations(catalog(r.name));
    CHECK_MESSAGE(rs.raw_count == r.expect, r.name);
  }
  // star: 10 * 126 = 1260, vamos: 28 * 15 = 420
  CHECK(generate_relations(catalog("star")).raw_count == 1260);
  CHECK(generate_relations(catalog("vamos")).raw_count == 420);
}

TEST_CASE("relations skip nonbasis products and never go monomial") {
  for (const char* name :
       {"fano", "non-fano", "star", "desargues", "vamos", "non-vamos",
        "twisted-vamos", "cube", "pappus", "non-pappus", "partial-plane"}) {
    Matroid m = catalog(name);
    RelationSet rs = generate_relations(m);
    int nvars = static_cast<int>(m.bases().size());
    for (const TropicalPolynomial& f : rs.relations) {
      CHECK(f.terms.size() >= 2);
      CHECK(f.terms.size() <= 3);
      for (const Term& t : f.terms) {
        // every monomial is a product of two distinct basis variables
        CHECK(t.exps.size() == 2);
        for (const auto& [v, e] : t.exps) {
          CHECK(e == 1);
          CHECK(v >= 0);
          CHECK(v < nvars);
        }
        CHECK((t.coeff == 1 || t.coeff == -1));
      }
    }
  }
}

TEST_CASE("dedupe removes repeated and negated duplicates") {
  TropicalPolynomial f;
  f.terms = {Term{1, {{0, 1}, {3, 1}}}, Term{-1, {{1, 1}, {2, 1}}}};
  f.normalize();
  TropicalPolynomial g = f;  // identical copy
  TropicalPolynomial h;      // negated copy
  h.terms = {Term{-1, {{0, 1}, {3, 1}}}, Term{1, {{1, 1}, {2, 1}}}};
  h.normalize();
  std::vector<TropicalPolynomial> in = {f, g, h};
  std::vector<TropicalPolynomial> out = dedupe(in);
  CHECK(out.size() == 1);
  CHECK(out[0].terms == f.terms);
}

TEST_CASE("dedupe keeps distinct relations apart") {
  RelationSet rs = generate_relations(uniform(2, 5));
  std::set<std::string> seen;
  Matroid m = uniform(2, 5);
  for (const TropicalPolynomial& f : rs.relations)
    seen.insert(poly_to_string(f, m.bases()));
  CHECK(seen.size() == rs.relations.size());
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(generate_relations(uniform(1, 3)), InvalidArgument);
  CHECK_THROWS_AS(generate_relations(uniform(2, 3)), InvalidArgument);
}
