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

#include "dressian/cone.hpp"

#include <algorithm>

#include "dressian/errors.hpp"
#include "dressian/lp.hpp"

namespace dressian {

namespace {

// inequality rows -> coordinates of the nullspace of the equalities
Mat project_rows(const Mat& rows, const Mat& kernel) {
  Mat out;
  out.reserve(rows.size());
  for (const Vec& r : rows) {
    Vec p(kernel.size());
    for (size_t j = 0; j < kernel.size(); ++j) p[j] = dot(r, kernel[j]);
    out.push_back(std::move(p));
  }
  return out;
}

// mod-equality reduction, primitive scaling, zero removal, sorted dedupe
void tidy_inequalities(const Mat& eqs, Mat& ineqs) {
  Mat out;
  for (Vec& a : ineqs) {
    Vec r = reduce_mod_rowspan(eqs, std::move(a));
    if (is_zero(r)) continue;
    make_primitive(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  ineqs = std::move(out);
}

// One Motzkin round: nonzero nu >= 0 with sum nu_i proj[i] = 0 (normalized
// by sum nu = 1).  Feasible -> support of nu is forced tight.  Infeasible ->
// farkas certificate yields a point strictly inside every inequality.
struct MotzkinOutcome {
  bool folded = false;
  std::vector<size_t> tight;  // when folded
  Vec strict_point;           // free coordinates, when not folded
};

MotzkinOutcome motzkin_round(const Mat& proj, size_t free_dim) {
  MotzkinOutcome out;
  Mat a(free_dim + 1, Vec(proj.size(), Rat(0)));
  for (size_t i = 0; i < proj.size(); ++i) {
    for (size_t j = 0; j < free_dim; ++j) a[j][i] = proj[i][j];
    a[free_dim][i] = 1;
  }
  Vec b(free_dim + 1, Rat(0));
  b[free_dim] = 1;
  LpResult lp = lp_feasible(a, b);
  if (lp.feasible) {
    out.folded = true;
    for (size_t i = 0; i < proj.size(); ++i)
      if (lp.solution[i] > 0) out.tight.push_back(i);
    return out;
  }
  // y = (u, v): u . proj_i <= -v < 0, so -u is strict on every inequality
  out.strict_point.assign(free_dim, Rat(0));
  for (size_t j = 0; j < free_dim; ++j) out.strict_point[j] = -lp.farkas[j];
  return out;
}

}  // namespace

Cone make_cone(int ambient_dim, Mat equalities, Mat inequalities,
               const ConeOptions& options) {
  for (const Vec& v : equalities)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw DimMismatch("make_cone: equality row length");
  for (const Vec& v : inequalities)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw DimMismatch("make_cone: inequality row length");

  Cone c;
  c.ambient_dim = ambient_dim;
  rref(equalities);

  Mat kernel;
  Mat proj;
  Vec strict_free;
  while (true) {
    tidy_inequalities(equalities, inequalities);
    kernel = kernel_basis(equalities, ambient_dim);
    if (inequalities.empty()) break;
    proj = project_rows(inequalities, kernel);
    MotzkinOutcome round = motzkin_round(proj, kernel.size());
    if (!round.folded) {
      strict_free = std::move(round.strict_point);
      break;
    }
    for (size_t i : round.tight) equalities.push_back(inequalities[i]);
    std::vector<Vec> rest;
    size_t t = 0;
    for (size_t i = 0; i < inequalities.size(); ++i) {
      if (t < round.tight.size() && round.tight[t] == i)
        ++t;
      else
        rest.push_back(std::move(inequalities[i]));
    }
    inequalities = std::move(rest);
    rref(equalities);
  }

  if (options.irredundant && inequalities.size() > 1) {
    // two passes: greedy filter, then exact facet check against the rest
    std::vector<size_t> kept;
    Mat kept_proj;
    for (size_t i = 0; i < proj.size(); ++i) {
      if (!in_cone(kept_proj, proj[i])) {
        kept.push_back(i);
        kept_proj.push_back(proj[i]);
      }
    }
    std::vector<bool> removed(kept.size(), false);
    for (size_t i = 0; i < kept.size(); ++i) {
      Mat others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i && !removed[j]) others.push_back(kept_proj[j]);
      if (in_cone(others, kept_proj[i])) removed[i] = true;
    }
    Mat final_ineqs;
    for (size_t i = 0; i < kept.size(); ++i)
      if (!removed[i]) final_ineqs.push_back(inequalities[kept[i]]);
    inequalities = std::move(final_ineqs);
    std::sort(inequalities.begin(), inequalities.end());
  }

  c.equalities = std::move(equalities);
  c.inequalities = std::move(inequalities);
  c.dimension = static_cast<int>(kernel.size());
  if (c.inequalities.empty() || kernel.empty()) {
    c.relint.assign(ambient_dim, Rat(0));
  } else {
    Vec p(ambient_dim, Rat(0));
    for (size_t j = 0; j < kernel.size(); ++j)
      for (int t = 0; t < ambient_dim; ++t)
        p[t] += strict_free[j] * kernel[j][t];
    make_primitive(p);
    c.relint = std::move(p);
  }
  return c;
}

Cone full_space(int ambient_dim) { return make_cone(ambient_dim, {}, {}); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw DimMismatch("intersect: ambient dimensions differ");
  Mat eqs = a.equalities;
  eqs.insert(eqs.end(), b.equalities.begin(), b.equalities.end());
  Mat ineqs = a.inequalities;
  ineqs.insert(ineqs.end(), b.inequalities.begin(), b.inequalities.end());
  return make_cone(a.ambient_dim, std::move(eqs), std::move(ineqs));
}

bool contains(const Cone& outer, const Cone& inner) {
  if (outer.ambient_dim != inner.ambient_dim)
    throw DimMismatch("contains: ambient dimensions differ");
  // cheap rejection on the strict interior point
  if (!cone_contains_point(outer, inner.relint)) return false;
  for (const Vec& e : outer.equalities)
    if (!is_zero(reduce_mod_rowspan(inner.equalities, e))) return false;
  if (outer.inequalities.empty()) return true;
  Mat kernel = kernel_basis(inner.equalities, inner.ambient_dim);
  Mat inner_proj = project_rows(inner.inequalities, kernel);
  for (const Vec& a : outer.inequalities) {
    Vec r = reduce_mod_rowspan(inner.equalities, a);
    Vec p(kernel.size());
    for (size_t j = 0; j < kernel.size(); ++j) p[j] = dot(r, kernel[j]);
    if (!in_cone(inner_proj, p)) return false;
  }
  return true;
}

LinearSubspace cone_lineality(const Cone& c) {
  Mat rows = c.equalities;
  rows.insert(rows.end(), c.inequalities.begin(), c.inequalities.end());
  LinearSubspace s;
  s.ambient_dim = c.ambient_dim;
  s.basis = kernel_basis(rows, c.ambient_dim);
  return s;
}

LinearSubspace lineality(const std::vector<Cone>& cones) {
  if (cones.empty()) throw InvalidArgument("lineality of an empty family");
  Mat rows;
  for (const Cone& c : cones) {
    rows.insert(rows.end(), c.equalities.begin(), c.equalities.end());
    rows.insert(rows.end(), c.inequalities.begin(), c.inequalities.end());
  }
  LinearSubspace s;
  s.ambient_dim = cones[0].ambient_dim;
  s.basis = kernel_basis(rows, s.ambient_dim);
  return s;
}

std::string canonical_key(const Cone& c) {
  std::string key = std::to_string(c.ambient_dim) + "|E";
  for (const Vec& e : c.equalities) key += vec_to_string(e) + ";";
  key += "|I";
  for (const Vec& a : c.inequalities) key += vec_to_string(a) + ";";
  return key;
}

Cone face_tighten(const Cone& c, size_t index) {
  Mat eqs = c.equalities;
  eqs.push_back(c.inequalities.at(index));
  Mat ineqs;
  for (size_t i = 0; i < c.inequalities.size(); ++i)
    if (i != index) ineqs.push_back(c.inequalities[i]);
  return make_cone(c.ambient_dim, std::move(eqs), std::move(ineqs));
}

bool cone_contains_point(const Cone& c, const Vec& p) {
  if (static_cast<int>(p.size()) != c.ambient_dim)
    throw DimMismatch("cone_contains_point: point length");
  for (const Vec& e : c.equalities)
    if (dot(e, p) != 0) return false;
  for (const Vec& a : c.inequalities)
    if (dot(a, p) < 0) return false;
  return true;
}

}  // namespace dressian
