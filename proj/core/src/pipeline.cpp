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

#include "dressian/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dressian/errors.hpp"
#include "dressian/parallel.hpp"
#include "dressian/plucker.hpp"

namespace dressian {

namespace {

// rewrite polynomial/inequality variable ids through var_to_dense
TropicalPolynomial densify(const TropicalPolynomial& p,
                           const std::vector<int>& var_to_dense) {
  TropicalPolynomial out;
  out.terms.reserve(p.terms.size());
  for (const Term& t : p.terms) {
    Term nt;
    nt.coeff = t.coeff;
    for (const auto& [v, e] : t.exps) {
      if (var_to_dense[v] < 0)
        throw InternalError("reduced polynomial mentions a dropped variable");
      nt.exps[var_to_dense[v]] = e;
    }
    out.terms.push_back(std::move(nt));
  }
  out.normalize();
  return out;
}

std::map<int, int> densify_form(const std::map<int, int>& form,
                                const std::vector<int>& var_to_dense) {
  std::map<int, int> out;
  for (const auto& [v, e] : form) {
    if (var_to_dense[v] < 0)
      throw InternalError("reduced inequality mentions a dropped variable");
    out[var_to_dense[v]] = e;
  }
  return out;
}

Mat chain_equalities(const ReducedSystem& sys, int ambient) {
  Mat rows;
  rows.reserve(sys.chain.size());
  for (const Substitution& s : sys.chain) {
    Vec row(ambient, Rat(0));
    row[s.eliminated] = 1;
    for (const auto& [v, e] : s.exponents) row[v] -= e;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Cone lift_cone(const Cone& c, const std::vector<int>& dense_to_var,
               int ambient, const ReducedSystem& sys) {
  Mat eqs, ineqs;
  for (const Vec& row : c.equalities) {
    Vec wide(ambient, Rat(0));
    for (size_t j = 0; j < row.size(); ++j) wide[dense_to_var[j]] = row[j];
    eqs.push_back(std::move(wide));
  }
  for (const Vec& row : c.inequalities) {
    Vec wide(ambient, Rat(0));
    for (size_t j = 0; j < row.size(); ++j) wide[dense_to_var[j]] = row[j];
    ineqs.push_back(std::move(wide));
  }
  for (Vec& row : chain_equalities(sys, ambient)) eqs.push_back(std::move(row));
  return make_cone(ambient, std::move(eqs), std::move(ineqs));
}

PrevarietyComplex lift_complex(const PrevarietyComplex& dense,
                               const std::vector<int>& dense_to_var,
                               int ambient, const ReducedSystem& sys,
                               int threads) {
  PrevarietyComplex out;
  out.ambient_dim = ambient;

  std::vector<Cone> cones(dense.cells.size());
  parallel_for(dense.cells.size(), threads, [&](size_t i) {
    cones[i] = lift_cone(dense.cells[i].cone, dense_to_var, ambient, sys);
  });

  std::vector<PrevarietyCell> cells(dense.cells.size());
  std::vector<std::string> keys(dense.cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    cells[i].type = dense.cells[i].type;
    cells[i].dim = cones[i].dimension;
    cells[i].cone = std::move(cones[i]);
    keys[i] = canonical_key(cells[i].cone);
  }
  std::vector<size_t> perm(cells.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (cells[a].dim != cells[b].dim) return cells[a].dim < cells[b].dim;
    return keys[a] < keys[b];
  });

  std::vector<Cone> maximal;
  out.maximal_flags.resize(cells.size());
  out.cells.reserve(cells.size());
  for (size_t rank = 0; rank < perm.size(); ++rank) {
    size_t i = perm[rank];
    out.maximal_flags[rank] = dense.maximal_flags[i];
    if (dense.maximal_flags[i]) maximal.push_back(cells[i].cone);
    out.cells.push_back(std::move(cells[i]));
  }
  out.lineality = lineality(maximal);
  int lin_dim = out.lineality.dim();

  int top = 0;
  for (const PrevarietyCell& c : out.cells) top = std::max(top, c.dim);
  if (top > lin_dim) out.f_vector_spherical.assign(top - lin_dim, 0);
  for (const PrevarietyCell& c : out.cells) {
    int k = c.dim - lin_dim - 1;
    if (k >= 0) ++out.f_vector_spherical[k];
  }
  for (const PrevarietyCell& c : out.cells) {
    if (c.dim != lin_dim + 1) continue;
    Vec r = reduce_mod_rowspan(out.lineality.basis, c.cone.relint);
    if (is_zero(r))
      throw InternalError("lifted ray cell reduced into the lineality space");
    make_primitive(r);
    out.rays.push_back(std::move(r));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

DressianResult compute_dressian(const Matroid& m,
                                const ComputeOptions& options) {
  DressianResult res;
  std::vector<TropicalPolynomial> rels =
      dedupe(generate_relations(m).relations);
  res.num_vars = static_cast<int>(m.bases().size());

  if (!options.use_reduction) {
    res.reduction.num_vars = res.num_vars;
    res.dense_to_var.resize(res.num_vars);
    std::iota(res.dense_to_var.begin(), res.dense_to_var.end(), 0);
    res.complex = intersect_prevariety(res.num_vars, rels, {},
                                       options.prevariety);
    res.full_lineality_dim = res.complex.lineality.dim();
    if (options.lift) res.lifted = res.complex;
    return res;
  }

  ReduceOptions ropt;
  ropt.shuffle_seed = options.order_seed;
  res.reduction = reduce(rels, res.num_vars, ropt);
  res.dense_to_var = res.reduction.surviving;

  std::vector<int> var_to_dense(res.num_vars, -1);
  for (size_t j = 0; j < res.dense_to_var.size(); ++j)
    var_to_dense[res.dense_to_var[j]] = static_cast<int>(j);

  std::vector<TropicalPolynomial> polys;
  polys.reserve(res.reduction.polynomials.size());
  for (const TropicalPolynomial& p : res.reduction.polynomials)
    polys.push_back(densify(p, var_to_dense));
  std::vector<TropicalInequality> ineqs;
  ineqs.reserve(res.reduction.inequalities.size());
  for (const TropicalInequality& q : res.reduction.inequalities) {
    TropicalInequality dq;
    dq.lesser = densify_form(q.lesser, var_to_dense);
    dq.greater = densify_form(q.greater, var_to_dense);
    ineqs.push_back(std::move(dq));
  }

  int dense_dim = static_cast<int>(res.dense_to_var.size());
  res.complex = intersect_prevariety(dense_dim, polys, ineqs,
                                     options.prevariety);

  // unconstrained variables (free + eliminated) add cylinder directions; the
  // chain's independent equalities then pin each eliminated coordinate
  res.full_lineality_dim = res.complex.lineality.dim() +
                           (res.num_vars - dense_dim) -
                           static_cast<int>(res.reduction.chain.size());
  if (options.lift) {
    res.lifted = lift_complex(res.complex, res.dense_to_var, res.num_vars,
                              res.reduction, options.prevariety.threads);
    if (res.lifted.lineality.dim() != res.full_lineality_dim)
      throw InternalError("lifted lineality disagrees with the cylinder count");
  }
  return res;
}

}  // namespace dressian
