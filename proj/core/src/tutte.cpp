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
#include <utility>

namespace dressian {

namespace {

// sorted union of a (d-2)-set with two extra elements
Subset with_two(const Subset& s, int x, int y) {
  Subset out = s;
  out.push_back(std::min(x, y));
  out.push_back(std::max(x, y));
  std::inplace_merge(out.begin(), out.end() - 2, out.end());
  return out;
}

using SparseRow = std::vector<std::pair<int, Int>>;

void normalize(SparseRow& r) {
  Int g = 0;
  for (const auto& [c, v] : r) g = gcd(g, v);
  if (g == 0) return;
  if (r.front().second < 0) g = -g;
  for (auto& [c, v] : r) v /= g;
}

// lead(a) * b - lead(b) * a, entries merged by column
SparseRow eliminate(const SparseRow& a, const SparseRow& b) {
  Int ca = a.front().second, cb = b.front().second;
  SparseRow out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, -cb * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, ca * b[j].second);
      ++j;
    } else {
      Int v = ca * b[j].second - cb * a[i].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i, ++j;
    }
  }
  normalize(out);
  return out;
}

// incremental echelon over the integers, rows kept primitive
int sparse_rank(int ncols, const std::vector<SparseRow>& rows) {
  std::vector<SparseRow> pivot(ncols);
  int rank = 0;
  for (const SparseRow& row : rows) {
    SparseRow cur = row;
    normalize(cur);
    while (!cur.empty()) {
      int c = cur.front().first;
      if (pivot[c].empty()) {
        pivot[c] = std::move(cur);
        ++rank;
        break;
      }
      cur = eliminate(pivot[c], cur);
    }
  }
  return rank;
}

std::vector<SparseRow> sparse_rows(const TutteRelationSystem& sys) {
  std::vector<SparseRow> rows;
  rows.reserve(sys.rows.size());
  for (const auto& r : sys.rows) {
    SparseRow s;
    for (int v : r.plus) s.emplace_back(v, 1);
    for (int v : r.minus) s.emplace_back(v, -1);
    std::sort(s.begin(), s.end());
    rows.push_back(std::move(s));
  }
  return rows;
}

}  // namespace

TutteRelationSystem tutte_relations(const Matroid& m) {
  TutteRelationSystem sys;
  sys.num_vars = static_cast<int>(m.bases().size());
  const int n = m.n(), d = m.rank();
  if (d < 2) return sys;

  std::set<std::array<int, 4>> seen;
  std::vector<int> comp;
  Subset s(std::max(d - 2, 0));
  // iterate over all (d-2)-subsets S
  std::vector<int> idx(d - 2);
  for (int i = 0; i < d - 2; ++i) idx[i] = i;
  bool more = true;
  if (d == 2) s.clear();
  while (more) {
    for (int i = 0; i < d - 2; ++i) s[i] = idx[i];
    comp.clear();
    for (int e = 0; e < n; ++e)
      if (!std::binary_search(s.begin(), s.end(), e)) comp.push_back(e);

    // b-pairs making S+{b1,b2} dependent, c-pairs completing four bases
    for (size_t bi = 0; bi < comp.size(); ++bi)
      for (size_t bj = bi + 1; bj < comp.size(); ++bj) {
        int b1 = comp[bi], b2 = comp[bj];
        if (m.is_basis(with_two(s, b1, b2))) continue;
        for (size_t ci = 0; ci < comp.size(); ++ci)
          for (size_t cj = ci + 1; cj < comp.size(); ++cj) {
            int c1 = comp[ci], c2 = comp[cj];
            if (c1 == b1 || c1 == b2 || c2 == b1 || c2 == b2) continue;
            int p0 = m.basis_index(with_two(s, b1, c1));
            int p1 = m.basis_index(with_two(s, b2, c2));
            int m0 = m.basis_index(with_two(s, b1, c2));
            int m1 = m.basis_index(with_two(s, b2, c1));
            if (p0 < 0 || p1 < 0 || m0 < 0 || m1 < 0) continue;
            if (p0 > p1) std::swap(p0, p1);
            if (m0 > m1) std::swap(m0, m1);
            if (m0 < p0) std::swap(p0, m0), std::swap(p1, m1);  // sign flip
            if (seen.insert({p0, p1, m0, m1}).second)
              sys.rows.push_back({{p0, p1}, {m0, m1}});
          }
      }

    // next (d-2)-subset
    more = false;
    for (int i = d - 3; i >= 0; --i) {
      if (idx[i] < n - (d - 2 - i)) {
        ++idx[i];
        for (int j = i + 1; j < d - 2; ++j) idx[j] = idx[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  return sys;
}

int hom_dim(const TutteRelationSystem& sys) {
  return sys.num_vars - sparse_rank(sys.num_vars, sparse_rows(sys));
}

int phi_rank(const Matroid& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.bases().size());
  for (const Subset& b : m.bases()) {
    SparseRow r;
    for (int e : b) r.emplace_back(e, 1);
    rows.push_back(std::move(r));
  }
  return sparse_rank(m.n(), rows);
}

RigidityReport rigidity_report(const Matroid& m) {
  RigidityReport rep;
  rep.hom_dim = hom_dim(tutte_relations(m));
  rep.phi_rank = phi_rank(m);
  rep.certificate =
      rep.hom_dim == rep.phi_rank ? Rigidity::Rigid : Rigidity::Unknown;
  return rep;
}

Rigidity rigidity_certificate(const Matroid& m) {
  return rigidity_report(m).certificate;
}

std::vector<Int> invariant_factors(const TutteRelationSystem& sys) {
  std::vector<std::vector<Int>> a;
  for (const auto& r : sys.rows) {
    std::vector<Int> row(sys.num_vars, 0);
    for (int v : r.plus) row[v] += 1;
    for (int v : r.minus) row[v] -= 1;
    a.push_back(std::move(row));
  }
  std::vector<Int> factors;
  size_t nr = a.size(), nc = nr ? a[0].size() : 0;
  for (size_t t = 0; t < std::min(nr, nc); ++t) {
    // smallest nonzero entry of the trailing block into the corner
    size_t bi = nr, bj = nc;
    for (size_t i = t; i < nr; ++i)
      for (size_t j = t; j < nc; ++j)
        if (a[i][j] != 0 &&
            (bi == nr || abs(a[i][j]) < abs(a[bi][bj])))
          bi = i, bj = j;
    if (bi == nr) break;
    std::swap(a[t], a[bi]);
    for (size_t i = t; i < nr; ++i) std::swap(a[i][t], a[i][bj]);
    if (a[t][t] < 0)
      for (size_t j = t; j < nc; ++j) a[t][j] = -a[t][j];

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < nr; ++i) {
        Int q = a[i][t] / a[t][t];
        if (q != 0)
          for (size_t j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder beat the pivot
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (size_t j = t + 1; j < nc; ++j) {
        Int q = a[t][j] / a[t][t];
        if (q != 0)
          for (size_t i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (size_t i = t; i < nr; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest; fold an offending row in and redo
      for (size_t i = t + 1; i < nr && clean; ++i)
        for (size_t j = t + 1; j < nc && clean; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (size_t k = t; k < nc; ++k) a[t][k] += a[i][k];
            clean = false;
          }
    }
    factors.push_back(a[t][t]);
  }
  return factors;
}

}  // namespace dressian
