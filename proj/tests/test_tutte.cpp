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

#include "dressian/tutte.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "dressian/catalog.hpp"
#include "dressian/matroid.hpp"
#include "dressian/pipeline.hpp"
#include "dressian/plucker.hpp"
#include "dressian/reduction.hpp"

using namespace dressian;

namespace {

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Subset minus(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

// the four bases of a row determine S, b1, b2, c1, c2 uniquely
struct Quad {
  Subset s;
  int b1, b2, c1, c2;
};

Quad reconstruct(const Matroid& m, const TutteRelationSystem::Row& r) {
  const Subset& p0 = m.bases()[r.plus[0]];
  const Subset& p1 = m.bases()[r.plus[1]];
  const Subset& m0 = m.bases()[r.minus[0]];
  const Subset& m1 = m.bases()[r.minus[1]];
  Quad q;
  q.s = intersect(intersect(p0, p1), intersect(m0, m1));
  Subset bc0 = minus(p0, q.s);  // {b1, c1}
  Subset sh0 = intersect(bc0, minus(m0, q.s));
  Subset sh1 = intersect(bc0, minus(m1, q.s));
  // b1 is shared with one minus basis, c1 with the other
  REQUIRE(sh0.size() + sh1.size() == 2);
  if (sh0.size() == 1) {
    q.b1 = sh0[0];
    q.c1 = minus(bc0, sh0)[0];
  } else {
    q.c1 = sh1[0];
    q.b1 = minus(bc0, sh1)[0];
  }
  Subset bc1 = minus(p1, q.s);  // {b2, c2}
  q.c2 = intersect(bc1, minus(m0, q.s)).empty() ? intersect(bc1, minus(m1, q.s))[0]
                                                : intersect(bc1, minus(m0, q.s))[0];
  q.b2 = minus(bc1, Subset{q.c2})[0];
  return q;
}

Subset with_two(Subset s, int x, int y) {
  s.push_back(x);
  s.push_back(y);
  std::sort(s.begin(), s.end());
  return s;
}

// rank of the rows over GF(2); independent parity check on the invariant
// factors
int gf2_rank(const TutteRelationSystem& sys) {
  std::vector<std::vector<bool>> rows;
  for (const auto& r : sys.rows) {
    std::vector<bool> v(sys.num_vars, false);
    for (int i : r.plus) v[i] = !v[i];
    for (int i : r.minus) v[i] = !v[i];
    rows.push_back(std::move(v));
  }
  int rank = 0;
  std::vector<std::vector<bool>> pivots(sys.num_vars);
  for (auto& row : rows) {
    for (int c = 0; c < sys.num_vars; ++c) {
      if (!row[c]) continue;
      if (pivots[c].empty()) {
        pivots[c] = row;
        ++rank;
        break;
      }
      for (int j = c; j < sys.num_vars; ++j)
        row[j] = row[j] != pivots[c][j];
    }
  }
  return rank;
}

}  // namespace

TEST_CASE("free matroids have no degenerate quadruples") {
  for (auto [d, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    Matroid m = uniform(d, n);
    TutteRelationSystem sys = tutte_relations(m);
    CHECK(sys.rows.empty());
    CHECK(hom_dim(sys) == static_cast<int>(m.bases().size()));
  }
}

TEST_CASE("every row comes from a degenerate octahedron face") {
  for (const char* name : {"fano", "cube", "star"}) {
    Matroid m = catalog(name);
    TutteRelationSystem sys = tutte_relations(m);
    CHECK(!sys.rows.empty());
    std::set<std::array<int, 4>> distinct;
    std::set<Subset> covered_nonbases;
    for (const auto& r : sys.rows) {
      std::set<int> ids{r.plus[0], r.plus[1], r.minus[0], r.minus[1]};
      CHECK(ids.size() == 4);
      distinct.insert({r.plus[0], r.plus[1], r.minus[0], r.minus[1]});
      Quad q = reconstruct(m, r);
      CHECK(static_cast<int>(q.s.size()) == m.rank() - 2);
      // the two apexes over the square face; the labels b/c can come out
      // transposed, so the degeneracy only pins down that one of them
      // leaves the polytope
      Subset apex_b = with_two(q.s, q.b1, q.b2);
      Subset apex_c = with_two(q.s, q.c1, q.c2);
      bool b_out = !m.is_basis(apex_b), c_out = !m.is_basis(apex_c);
      CHECK((b_out || c_out));
      if (b_out) covered_nonbases.insert(apex_b);
      if (c_out) covered_nonbases.insert(apex_c);
      // and the four mixed sets really are the stored bases
      CHECK(m.basis_index(with_two(q.s, q.b1, q.c1)) == r.plus[0]);
      CHECK(m.basis_index(with_two(q.s, q.b2, q.c2)) == r.plus[1]);
      CHECK(m.basis_index(with_two(q.s, q.b1, q.c2)) == r.minus[0]);
      CHECK(m.basis_index(with_two(q.s, q.b2, q.c1)) == r.minus[1]);
    }
    CHECK(distinct.size() == sys.rows.size());  // deduplicated
    if (std::string(name) == "cube") {
      // all twelve dependent planes show up as apexes
      CHECK(covered_nonbases.size() == m.nonbases().size());
      CHECK(covered_nonbases.size() == 12);
    }
  }
}

TEST_CASE("character space dimensions of the named matroids") {
  CHECK(hom_dim(tutte_relations(uniform(2, 4))) == 6);
  CHECK(hom_dim(tutte_relations(catalog("fano"))) == 7);
  CHECK(hom_dim(tutte_relations(catalog("non-fano"))) == 8);
  CHECK(hom_dim(tutte_relations(catalog("p2f3"))) == 13);
}

TEST_CASE("incidence rank equals the ground-set size when connected") {
  CHECK(phi_rank(uniform(2, 4)) == 4);
  CHECK(phi_rank(catalog("non-fano")) == 7);
  for (const std::string& name : catalog_names()) {
    if (name.find('(') != std::string::npos) continue;
    Matroid m = catalog(name);
    if (m.connected()) CHECK(phi_rank(m) == m.n());
  }
  // a direct sum loses a dimension: per-component element counts are fixed
  Matroid two_parts = direct_sum(uniform(1, 1), uniform(2, 4));
  CHECK(two_parts.connected_components().blocks.size() == 2);
  CHECK(phi_rank(two_parts) == two_parts.n() - 1);
}

TEST_CASE("rigidity certificates") {
  CHECK(rigidity_certificate(catalog("fano")) == Rigidity::Rigid);
  CHECK(rigidity_certificate(catalog("p2f3")) == Rigidity::Rigid);
  CHECK(rigidity_certificate(uniform(2, 4)) == Rigidity::Unknown);
  CHECK(rigidity_certificate(catalog("non-fano")) == Rigidity::Unknown);
  RigidityReport rep = rigidity_report(uniform(2, 4));
  CHECK(rep.hom_dim == 6);
  CHECK(rep.phi_rank == 4);
  CHECK(rep.certificate == Rigidity::Unknown);
}

TEST_CASE("character space always contains the incidence image") {
  for (const std::string& name : catalog_names()) {
    if (name.find('(') != std::string::npos) continue;
    Matroid m = catalog(name);
    RigidityReport rep = rigidity_report(m);
    CHECK(rep.hom_dim >= rep.phi_rank);
  }
}

TEST_CASE("rigid matroids have no rays and full lineality") {
  Matroid m = catalog("fano");
  DressianResult res = compute_dressian(m);
  CHECK(res.complex.f_vector_spherical.empty());
  CHECK(res.full_lineality_dim == phi_rank(m));
}

TEST_CASE("character dimension forecasts the reduction survivor count") {
  // eliminating a variable per binomial leaves exactly the character space
  for (const char* name :
       {"fano", "star", "desargues", "non-pappus", "vamos", "partial-plane"}) {
    Matroid m = catalog(name);
    RelationSet rs = generate_relations(m);
    ReducedSystem sys = reduce(rs.relations, static_cast<int>(m.bases().size()));
    CHECK(hom_dim(tutte_relations(m)) ==
          static_cast<int>(sys.surviving.size() + sys.free_vars.size()));
  }
}

TEST_CASE("invariant factors: unit chain matching the rational rank") {
  for (const char* name : {"fano", "cube", "non-fano"}) {
    Matroid m = catalog(name);
    TutteRelationSystem sys = tutte_relations(m);
    std::vector<Int> f = invariant_factors(sys);
    CHECK(static_cast<int>(f.size()) ==
          sys.num_vars - hom_dim(sys));  // count = rank over the rationals
    for (size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] > 0);
      if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
    }
    // parity cross-check: #odd factors is the rank over GF(2)
    int odd = 0;
    for (const Int& x : f)
      if (x % 2 != 0) ++odd;
    CHECK(odd == gf2_rank(sys));
  }
  CHECK(invariant_factors(tutte_relations(uniform(2, 4))).empty());
}
