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

#include <algorithm>
#include <set>

#include "dressian/errors.hpp"

namespace dressian {

namespace {

// union of a sorted (d-2)-set with two extra elements, as a sorted subset
Subset join(const Subset& s, int a, int b) {
  Subset out = s;
  out.push_back(a);
  out.push_back(b);
  std::sort(out.end() - 2, out.end());
  std::inplace_merge(out.begin(), out.end() - 2, out.end());
  return out;
}

}  // namespace

RelationSet generate_relations(const Matroid& m) {
  if (m.rank() < 2 || m.n() < m.rank() + 2)
    throw InvalidArgument("three-term relations need d >= 2 and n >= d+2");
  RelationSet out;
  for (const Subset& s : all_subsets(m.n(), m.rank() - 2)) {
    // complement of S, ascending
    Subset rest;
    uint32_t sm = subset_mask(s);
    for (int e = 0; e < m.n(); ++e)
      if (!(sm & (uint32_t{1} << e))) rest.push_back(e);
    for (const Subset& q : all_subsets(static_cast<int>(rest.size()), 4)) {
      int i = rest[q[0]], j = rest[q[1]], k = rest[q[2]], l = rest[q[3]];
      ++out.raw_count;
      TropicalPolynomial p;
      auto add = [&](int sign, const Subset& a, const Subset& b) {
        int va = m.basis_index(a), vb = m.basis_index(b);
        if (va < 0 || vb < 0) return;
        Term t;
        t.coeff = sign;
        t.exps[va] += 1;
        t.exps[vb] += 1;
        p.terms.push_back(std::move(t));
      };
      add(+1, join(s, i, j), join(s, k, l));
      add(-1, join(s, i, k), join(s, j, l));
      add(+1, join(s, i, l), join(s, j, k));
      if (p.terms.empty()) continue;
      if (p.terms.size() == 1)
        throw MonomialRelation("single surviving term at S=" +
                               subset_to_string(s) + " {" + std::to_string(i) +
                               "," + std::to_string(j) + "," +
                               std::to_string(k) + "," + std::to_string(l) +
                               "}");
      p.normalize();
      out.relations.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<TropicalPolynomial> dedupe(
    const std::vector<TropicalPolynomial>& in) {
  std::vector<TropicalPolynomial> out;
  std::set<std::vector<Term>> seen;
  for (const TropicalPolynomial& p : in) {
    TropicalPolynomial key = p;
    key.normalize();
    if (!key.terms.empty() && key.terms[0].coeff < 0)
      for (Term& t : key.terms) t.coeff = -t.coeff;
    if (seen.insert(key.terms).second) out.push_back(p);
  }
  return out;
}

}  // namespace dressian
