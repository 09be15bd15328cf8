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

#include "dressian/prevariety.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "dressian/errors.hpp"
#include "dressian/parallel.hpp"
#include "dressian/plucker.hpp"

namespace dressian {

namespace {

// tropicalized term: the linear form of its exponent vector (trivial
// valuation, so the coefficient is invisible)
Vec term_form(const Term& t, int ambient_dim) {
  Vec f(ambient_dim, Rat(0));
  for (const auto& [v, e] : t.exps) {
    if (v < 0 || v >= ambient_dim)
      throw DimMismatch("term variable outside ambient dimension");
    f[v] = e;
  }
  return f;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// drop cones contained in another entry; keeps first of exact duplicates
std::vector<Cone> prune_to_maximal(std::vector<Cone> cones, int threads) {
  if (cones.size() < 2) return cones;
  // cheap dedupe first
  std::unordered_set<std::string> seen;
  std::vector<Cone> unique;
  unique.reserve(cones.size());
  for (Cone& c : cones)
    if (seen.insert(canonical_key(c)).second) unique.push_back(std::move(c));
  std::vector<char> dead(unique.size(), 0);
  parallel_for(unique.size(), threads, [&](size_t i) {
    for (size_t j = 0; j < unique.size(); ++j) {
      if (i == j) continue;
      if (unique[j].dimension < unique[i].dimension) continue;
      if (unique[j].dimension == unique[i].dimension && j > i)
        continue;  // equal-dim containment is equality; deduped already
      if (!cone_contains_point(unique[j], unique[i].relint)) continue;
      if (contains(unique[j], unique[i])) {
        dead[i] = 1;
        return;
      }
    }
  });
  std::vector<Cone> out;
  out.reserve(unique.size());
  for (size_t i = 0; i < unique.size(); ++i)
    if (!dead[i]) out.push_back(std::move(unique[i]));
  return out;
}

}  // namespace

std::vector<Cone> hypersurface_cones(const TropicalPolynomial& p,
                                     int ambient_dim) {
  if (p.terms.size() < 2)
    throw VacuousInput("tropical hypersurface needs at least two terms");
  std::vector<Vec> forms;
  forms.reserve(p.terms.size());
  for (const Term& t : p.terms) forms.push_back(term_form(t, ambient_dim));

  std::set<std::map<int, int>> distinct;
  for (const Term& t : p.terms) distinct.insert(t.exps);
  if (distinct.size() < 2)
    throw VacuousInput(
        "all terms share one monomial; the minimum is always attained twice");

  std::vector<Cone> cones;
  size_t k = p.terms.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      bool repeated = p.terms[i].exps == p.terms[j].exps;
      Mat eqs, ineqs;
      if (!repeated) eqs.push_back(sub(forms[i], forms[j]));
      for (size_t u = 0; u < k; ++u) {
        if (u == i || u == j) continue;
        Vec row = sub(forms[u], forms[i]);
        if (!is_zero(row)) ineqs.push_back(std::move(row));
      }
      cones.push_back(make_cone(ambient_dim, std::move(eqs), std::move(ineqs)));
    }
  }
  return prune_to_maximal(std::move(cones), 1);
}

PrevarietyComplex intersect_prevariety(
    int ambient_dim, const std::vector<TropicalPolynomial>& polys,
    const std::vector<TropicalInequality>& ineqs,
    const PrevarietyOptions& options) {
  PrevarietyComplex out;
  out.ambient_dim = ambient_dim;

  // all recorded inequalities cut a single base cone
  Mat halfspaces;
  for (const TropicalInequality& q : ineqs) {
    Vec row(ambient_dim, Rat(0));
    for (const auto& [v, e] : q.lesser) {
      if (v < 0 || v >= ambient_dim)
        throw DimMismatch("inequality variable outside ambient dimension");
      row[v] -= e;
    }
    for (const auto& [v, e] : q.greater) {
      if (v < 0 || v >= ambient_dim)
        throw DimMismatch("inequality variable outside ambient dimension");
      row[v] += e;
    }
    if (!is_zero(row)) halfspaces.push_back(std::move(row));
  }

  std::vector<std::vector<Cone>> hs(polys.size());
  parallel_for(polys.size(), options.threads, [&](size_t i) {
    hs[i] = hypersurface_cones(polys[i], ambient_dim);
  });
  // cheapest polynomials first keeps the candidate set small
  std::vector<size_t> order(polys.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return hs[a].size() < hs[b].size();
  });

  std::vector<Cone> candidates{
      make_cone(ambient_dim, {}, std::move(halfspaces))};
  for (size_t oi : order) {
    const std::vector<Cone>& pieces = hs[oi];
    size_t grid = candidates.size() * pieces.size();
    if (grid > options.max_cells)
      throw ResourceLimit("candidate cone count " + std::to_string(grid) +
                          " exceeds max-cells cap " +
                          std::to_string(options.max_cells));
    std::vector<Cone> next(grid);
    parallel_for(grid, options.threads, [&](size_t g) {
      next[g] = intersect(candidates[g / pieces.size()],
                          pieces[g % pieces.size()]);
    });
    candidates = prune_to_maximal(std::move(next), options.threads);
  }

  out.lineality = lineality(candidates);
  int lin_dim = out.lineality.dim();

  // face closure: repeatedly tighten one facet; canonical form dedupes
  std::unordered_map<std::string, Cone> all;
  std::unordered_set<std::string> maximal_keys;
  std::vector<Cone> frontier;
  for (Cone& c : candidates) {
    std::string key = canonical_key(c);
    maximal_keys.insert(key);
    if (all.emplace(key, std::move(c)).second) frontier.push_back(all[key]);
  }
  while (!frontier.empty()) {
    std::vector<std::pair<const Cone*, size_t>> jobs;
    for (const Cone& c : frontier)
      for (size_t i = 0; i < c.inequalities.size(); ++i)
        jobs.emplace_back(&c, i);
    std::vector<Cone> children(jobs.size());
    parallel_for(jobs.size(), options.threads, [&](size_t j) {
      children[j] = face_tighten(*jobs[j].first, jobs[j].second);
    });
    frontier.clear();
    for (Cone& c : children) {
      if (all.size() > options.max_cells)
        throw ResourceLimit("face count exceeds max-cells cap " +
                            std::to_string(options.max_cells));
      std::string key = canonical_key(c);
      if (all.emplace(key, std::move(c)).second) frontier.push_back(all[key]);
    }
  }

  std::vector<PrevarietyCell> cells;
  std::vector<std::string> keys;
  cells.reserve(all.size());
  keys.reserve(all.size());
  for (auto& [key, cone] : all) {
    PrevarietyCell cell;
    cell.dim = cone.dimension;
    cell.cone = std::move(cone);
    cells.push_back(std::move(cell));
    keys.push_back(key);
  }
  std::vector<size_t> perm(cells.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (cells[a].dim != cells[b].dim) return cells[a].dim < cells[b].dim;
    return keys[a] < keys[b];
  });
  {
    std::vector<PrevarietyCell> sorted;
    std::vector<std::string> sorted_keys;
    sorted.reserve(cells.size());
    sorted_keys.reserve(cells.size());
    for (size_t i : perm) {
      sorted.push_back(std::move(cells[i]));
      sorted_keys.push_back(std::move(keys[i]));
    }
    cells = std::move(sorted);
    keys = std::move(sorted_keys);
  }

  // argmin pattern at a relative-interior point; on subspace cells every
  // inherited form vanishes identically, so the zero point is valid there
  parallel_for(cells.size(), options.threads, [&](size_t ci) {
    PrevarietyCell& cell = cells[ci];
    const Vec& x = cell.cone.relint;
    cell.type.argmin.resize(polys.size());
    for (size_t pi = 0; pi < polys.size(); ++pi) {
      const TropicalPolynomial& p = polys[pi];
      std::vector<Rat> vals(p.terms.size());
      for (size_t t = 0; t < p.terms.size(); ++t) {
        Rat v = 0;
        for (const auto& [var, e] : p.terms[t].exps) v += Rat(e) * x[var];
        vals[t] = v;
      }
      Rat mn = *std::min_element(vals.begin(), vals.end());
      for (size_t t = 0; t < p.terms.size(); ++t)
        if (vals[t] == mn) cell.type.argmin[pi].push_back((int)t);
    }
    cell.type.tight.resize(ineqs.size());
    for (size_t qi = 0; qi < ineqs.size(); ++qi) {
      Rat diff = 0;
      for (const auto& [v, e] : ineqs[qi].greater) diff += Rat(e) * x[v];
      for (const auto& [v, e] : ineqs[qi].lesser) diff -= Rat(e) * x[v];
      cell.type.tight[qi] = diff == 0;
    }
  });

  out.maximal_flags.resize(cells.size());
  for (size_t i = 0; i < cells.size(); ++i)
    out.maximal_flags[i] = maximal_keys.count(keys[i]) > 0;

  int top = 0;
  for (const PrevarietyCell& c : cells) top = std::max(top, c.dim);
  if (top > lin_dim) out.f_vector_spherical.assign(top - lin_dim, 0);
  for (const PrevarietyCell& c : cells) {
    int k = c.dim - lin_dim - 1;
    if (k >= 0) ++out.f_vector_spherical[k];
  }

  for (const PrevarietyCell& c : cells) {
    if (c.dim != lin_dim + 1) continue;
    Vec r = reduce_mod_rowspan(out.lineality.basis, c.cone.relint);
    if (is_zero(r))
      throw InternalError("ray cell reduced into the lineality space");
    make_primitive(r);
    out.rays.push_back(std::move(r));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.cells = std::move(cells);
  return out;
}

bool membership(const Matroid& m, const Vec& w) {
  if (w.size() != m.bases().size())
    throw MissingCoordinate("weight vector must have one entry per basis");
  RelationSet rs = generate_relations(m);
  for (const TropicalPolynomial& p : rs.relations) {
    Rat best;
    int hits = 0;
    for (const Term& t : p.terms) {
      Rat v = 0;
      for (const auto& [var, e] : t.exps) v += Rat(e) * w[var];
      if (hits == 0 || v < best) {
        best = v;
        hits = 1;
      } else if (v == best) {
        ++hits;
      }
    }
    if (hits < 2) return false;
  }
  return true;
}

}  // namespace dressian
