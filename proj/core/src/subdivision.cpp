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

#include "dressian/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "dressian/catalog.hpp"
#include "dressian/errors.hpp"

namespace dressian {
namespace {

// All geometry runs in chart coordinates on the affine hull of the matroid
// polytope: the pivot columns of the row-reduced difference lattice give an
// injective linear chart, so cells are full-dimensional there and the
// vertex coordinates stay 0/±1.
struct Chart {
  std::vector<int> cols;  // pivot columns of the difference lattice
  Vec origin;             // e_{bases[0]}
  Mat y;                  // chart image of every basis point
  int dim = 0;
};

Vec basis_point(const Subset& s, int n) {
  Vec p(n, Rat(0));
  for (int e : s) p[e] = 1;
  return p;
}

Chart make_chart(const Matroid& m) {
  const auto& bases = m.bases();
  const int n = m.n();
  Chart chart;
  chart.origin = basis_point(bases[0], n);
  Mat diffs;
  diffs.reserve(bases.size() - 1);
  for (size_t i = 1; i < bases.size(); ++i) {
    Vec d = basis_point(bases[i], n);
    for (int j = 0; j < n; ++j) d[j] -= chart.origin[j];
    diffs.push_back(std::move(d));
  }
  rref(diffs);
  for (const Vec& row : diffs) {
    int lead = 0;
    while (row[lead] == 0) ++lead;
    chart.cols.push_back(lead);
  }
  chart.dim = static_cast<int>(chart.cols.size());
  chart.y.reserve(bases.size());
  for (const auto& b : bases) {
    Vec p = basis_point(b, n);
    Vec yp(chart.dim);
    for (int i = 0; i < chart.dim; ++i) yp[i] = p[chart.cols[i]] - chart.origin[chart.cols[i]];
    chart.y.push_back(std::move(yp));
  }
  return chart;
}

// dimension of the affine span of the given points
int affine_rank(const Chart& chart, const std::vector<int>& pts) {
  if (pts.size() <= 1) return 0;
  Mat d;
  d.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) {
    Vec v = chart.y[pts[i]];
    for (int j = 0; j < chart.dim; ++j) v[j] -= chart.y[pts[0]][j];
    d.push_back(std::move(v));
  }
  return rank(std::move(d));
}

// Height functional in chart coordinates; slack(sigma) = w_sigma - value.
struct Functional {
  Vec a;
  Rat b;

  Rat value(const Chart& chart, int sigma) const { return dot(a, chart.y[sigma]) + b; }
};

std::vector<int> tight_set(const Chart& chart, const Vec& w, const Functional& f) {
  std::vector<int> t;
  for (size_t i = 0; i < chart.y.size(); ++i) {
    if (w[i] == f.value(chart, static_cast<int>(i))) t.push_back(static_cast<int>(i));
  }
  return t;
}

// First maximal cell: start at the argmin face of w and rotate the
// functional within the kernel of the current tight span until the tight
// set spans the whole chart.  Each rotation is an exact minimum-ratio step,
// so the result is deterministic.
std::pair<std::vector<int>, Functional> initial_cell(const Chart& chart, const Vec& w) {
  Functional f{Vec(chart.dim, Rat(0)), *std::min_element(w.begin(), w.end())};
  std::vector<int> t = tight_set(chart, w, f);
  while (affine_rank(chart, t) < chart.dim) {
    Mat diffs;
    for (size_t i = 1; i < t.size(); ++i) {
      Vec v = chart.y[t[i]];
      for (int j = 0; j < chart.dim; ++j) v[j] -= chart.y[t[0]][j];
      diffs.push_back(std::move(v));
    }
    Mat kern = kernel_basis(diffs, chart.dim);
    if (kern.empty()) throw InternalError("rotation direction missing below full rank");
    Vec d = kern.front();
    Vec v(chart.y.size());  // d . (y_sigma - y_t0)
    Rat base = dot(d, chart.y[t[0]]);
    bool any_positive = false;
    for (size_t i = 0; i < chart.y.size(); ++i) {
      v[i] = dot(d, chart.y[i]) - base;
      any_positive = any_positive || v[i] > 0;
    }
    if (!any_positive) {
      for (auto& x : v) x = -x;
      for (auto& x : d) x = -x;
      base = -base;
    }
    bool have = false;
    Rat step;
    for (size_t i = 0; i < chart.y.size(); ++i) {
      if (v[i] <= 0) continue;
      Rat s = (w[i] - f.value(chart, static_cast<int>(i))) / v[i];
      if (!have || s < step) {
        step = s;
        have = true;
      }
    }
    if (!have) throw InternalError("unbounded rotation in initial cell search");
    // value'(sigma) = value(sigma) + step * v(sigma)
    for (int j = 0; j < chart.dim; ++j) f.a[j] += step * d[j];
    f.b -= step * base;
    t = tight_set(chart, w, f);
  }
  return {std::move(t), std::move(f)};
}

// A facet of the convex hull of a point subset, in chart coordinates;
// val(x) = a . x - b is >= 0 inside and 0 exactly on `tight`.
struct Facet {
  Vec a;
  Rat b;
  std::vector<int> tight;  // global basis indices
};

std::string facet_key(const Facet& f) {
  Vec v = f.a;
  v.push_back(-f.b);
  make_primitive(v);
  return vec_to_string(v);
}

// Unique hyperplane through the given points, as the kernel of their
// incidence rows; empty result when the points do not span a hyperplane.
std::optional<std::pair<Vec, Rat>> hyperplane_through(const Chart& chart,
                                                      const std::vector<int>& pts) {
  Mat rows;
  rows.reserve(pts.size());
  for (int p : pts) {
    Vec r = chart.y[p];
    r.push_back(Rat(-1));  // a . y - b = 0
    rows.push_back(std::move(r));
  }
  Mat kern = kernel_basis(rows, chart.dim + 1);
  if (kern.size() != 1) return std::nullopt;
  Vec a(kern[0].begin(), kern[0].end() - 1);
  Rat b = kern[0].back();
  if (is_zero(a)) return std::nullopt;  // degenerate: the "hyperplane" a=0, b=0
  return std::make_pair(std::move(a), std::move(b));
}

// Facets of conv{y[p] : p in pts} by incremental insertion: seed with a
// simplex of affinely independent points, then for each further point
// replace the facets it violates by new ones through the horizon ridges.
// Assumes the points affinely span the chart (callers pass maximal cells).
std::vector<Facet> hull_facets(const Chart& chart, const std::vector<int>& pts) {
  const int d = chart.dim;
  if (d == 0) return {};
  // greedy affine basis
  std::vector<int> simplex{pts[0]};
  Mat span;
  for (size_t i = 1; i < pts.size() && static_cast<int>(span.size()) < d; ++i) {
    Vec v = chart.y[pts[i]];
    for (int j = 0; j < d; ++j) v[j] -= chart.y[pts[0]][j];
    if (!is_zero(reduce_mod_rowspan(span, v))) {
      simplex.push_back(pts[i]);
      span.push_back(std::move(v));
      rref(span);
    }
  }
  if (static_cast<int>(simplex.size()) != d + 1)
    throw InternalError("cell does not span the chart");
  Vec q(d, Rat(0));  // fixed interior point: simplex barycenter
  for (int p : simplex)
    for (int j = 0; j < d; ++j) q[j] += chart.y[p][j];
  for (int j = 0; j < d; ++j) q[j] /= d + 1;

  auto oriented = [&](std::vector<int> through) -> std::optional<Facet> {
    auto h = hyperplane_through(chart, through);
    if (!h) return std::nullopt;
    Facet f{std::move(h->first), std::move(h->second), {}};
    Rat at_q = dot(f.a, q) - f.b;
    if (at_q == 0) return std::nullopt;
    if (at_q < 0) {
      for (auto& x : f.a) x = -x;
      f.b = -f.b;
    }
    return f;
  };

  std::vector<Facet> facets;
  std::set<std::string> seen;
  for (size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<int> through;
    for (size_t i = 0; i < simplex.size(); ++i)
      if (i != skip) through.push_back(simplex[i]);
    auto f = oriented(through);
    if (!f) throw InternalError("degenerate simplex facet");
    f->tight = std::move(through);
    std::sort(f->tight.begin(), f->tight.end());
    seen.insert(facet_key(*f));
    facets.push_back(std::move(*f));
  }

  std::vector<int> processed = simplex;
  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (int p : pts) {
    if (in_simplex.count(p)) continue;
    std::vector<char> violated(facets.size());
    bool any = false;
    for (size_t i = 0; i < facets.size(); ++i) {
      Rat val = dot(facets[i].a, chart.y[p]) - facets[i].b;
      if (val < 0) {
        violated[i] = 1;
        any = true;
      } else if (val == 0) {
        facets[i].tight.insert(
            std::upper_bound(facets[i].tight.begin(), facets[i].tight.end(), p), p);
      }
    }
    if (any) {
      std::vector<Facet> fresh;
      for (size_t iv = 0; iv < facets.size(); ++iv) {
        if (!violated[iv]) continue;
        for (size_t ik = 0; ik < facets.size(); ++ik) {
          if (violated[ik]) continue;
          std::vector<int> ridge;
          std::set_intersection(facets[iv].tight.begin(), facets[iv].tight.end(),
                                facets[ik].tight.begin(), facets[ik].tight.end(),
                                std::back_inserter(ridge));
          if (static_cast<int>(ridge.size()) < d - 1) continue;
          ridge.push_back(p);
          auto f = oriented(ridge);
          if (!f) continue;  // points below a hyperplane's worth of rank
          std::string key = facet_key(*f);
          if (!seen.insert(key).second) continue;
          for (int r : processed)
            if (dot(f->a, chart.y[r]) == f->b) f->tight.push_back(r);
          f->tight.push_back(p);
          std::sort(f->tight.begin(), f->tight.end());
          fresh.push_back(std::move(*f));
        }
      }
      std::vector<Facet> kept;
      for (size_t i = 0; i < facets.size(); ++i) {
        if (violated[i])
          seen.erase(facet_key(facets[i]));
        else
          kept.push_back(std::move(facets[i]));
      }
      for (auto& f : fresh) kept.push_back(std::move(f));
      facets = std::move(kept);
    }
    processed.push_back(p);
  }
  return facets;
}

// Breadth-first flip enumeration of the maximal cells.  visit returns false
// to stop early.
template <typename Visit>
void enumerate_cells(const Matroid& m, const Vec& w, const SubdivisionOptions& options,
                     Visit visit) {
  if (w.size() != m.bases().size())
    throw MissingCoordinate("weight vector has " + std::to_string(w.size()) +
                            " entries for " + std::to_string(m.bases().size()) + " bases");
  const Chart chart = make_chart(m);
  auto [t0, f0] = initial_cell(chart, w);
  std::set<std::vector<int>> visited{t0};
  std::deque<std::pair<std::vector<int>, Functional>> queue;
  queue.emplace_back(std::move(t0), std::move(f0));
  while (!queue.empty()) {
    auto [t, f] = std::move(queue.front());
    queue.pop_front();
    if (!visit(t, f)) return;
    for (const Facet& facet : hull_facets(chart, t)) {
      // wall value is zero on the ridge, positive on the rest of the cell
      bool have = false;
      Rat step;
      for (size_t i = 0; i < chart.y.size(); ++i) {
        Rat wall = dot(facet.a, chart.y[i]) - facet.b;
        if (wall >= 0) continue;
        Rat s = (w[i] - f.value(chart, static_cast<int>(i))) / -wall;
        if (!have || s < step) {
          step = s;
          have = true;
        }
      }
      if (!have) continue;  // ridge lies on the boundary of the polytope
      Functional g{f.a, f.b};
      for (int j = 0; j < chart.dim; ++j) g.a[j] -= step * facet.a[j];
      g.b += step * facet.b;
      std::vector<int> next = tight_set(chart, w, g);
      if (visited.count(next)) continue;
      if (visited.size() >= options.max_cells)
        throw ResourceLimit("subdivision exceeds " + std::to_string(options.max_cells) +
                            " cells");
      visited.insert(next);
      queue.emplace_back(std::move(next), std::move(g));
    }
  }
}

SubdivisionCell finish_cell(const Matroid& m, const Chart& chart, std::vector<int> bases,
                            const Functional& f) {
  SubdivisionCell cell;
  cell.bases = std::move(bases);
  cell.witness.assign(m.n(), Rat(0));
  for (int i = 0; i < chart.dim; ++i) cell.witness[chart.cols[i]] = f.a[i];
  cell.witness_offset = f.b;
  for (int i = 0; i < chart.dim; ++i)
    cell.witness_offset -= f.a[i] * chart.origin[chart.cols[i]];
  std::vector<Subset> sub;
  sub.reserve(cell.bases.size());
  for (int b : cell.bases) sub.push_back(m.bases()[b]);
  try {
    cell.matroid = from_bases(m.n(), m.rank(), sub);
  } catch (const InputError&) {
    cell.matroid = std::nullopt;
  }
  return cell;
}

}  // namespace

std::vector<SubdivisionCell> regular_subdivision(const Matroid& m, const Vec& w,
                                                 const SubdivisionOptions& options) {
  const Chart chart = make_chart(m);
  std::vector<SubdivisionCell> cells;
  enumerate_cells(m, w, options, [&](const std::vector<int>& t, const Functional& f) {
    cells.push_back(finish_cell(m, chart, t, f));
    return true;
  });
  std::sort(cells.begin(), cells.end(),
            [](const SubdivisionCell& a, const SubdivisionCell& b) { return a.bases < b.bases; });
  return cells;
}

Matroid initial_matroid(const Matroid& m, const Vec& w) {
  if (w.size() != m.bases().size())
    throw MissingCoordinate("weight vector has " + std::to_string(w.size()) +
                            " entries for " + std::to_string(m.bases().size()) + " bases");
  const Rat lo = *std::min_element(w.begin(), w.end());
  std::vector<Subset> argmin;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] == lo) argmin.push_back(m.bases()[i]);
  try {
    return from_bases(m.n(), m.rank(), argmin);
  } catch (const InputError& e) {
    throw NotAMatroid(std::string("argmin bases violate the exchange axiom: ") + e.what());
  }
}

bool is_matroid_subdivision(const Matroid& m, const Vec& w,
                            const SubdivisionOptions& options) {
  bool ok = true;
  enumerate_cells(m, w, options, [&](const std::vector<int>& t, const Functional&) {
    std::vector<Subset> sub;
    sub.reserve(t.size());
    for (int b : t) sub.push_back(m.bases()[b]);
    try {
      from_bases(m.n(), m.rank(), sub);
    } catch (const InputError&) {
      ok = false;
    }
    return ok;
  });
  return ok;
}

std::vector<std::pair<int, int>> cell_edges(const Matroid& m,
                                            const std::vector<int>& cell_bases) {
  const Chart chart = make_chart(m);
  // functionals (a, beta) over the cell, h(rho) = a . y_rho + beta >= 0;
  // {i, j} is an edge iff tightening h at i and j forces h == 0 on no other
  // vertex, i.e. no third incidence row lands in the equality span.
  Mat rows;
  rows.reserve(cell_bases.size());
  for (int b : cell_bases) {
    Vec r = chart.y[b];
    r.push_back(Rat(1));
    rows.push_back(std::move(r));
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < cell_bases.size(); ++i) {
    for (size_t j = i + 1; j < cell_bases.size(); ++j) {
      Cone face = make_cone(chart.dim + 1, Mat{rows[i], rows[j]}, rows,
                            ConeOptions{.irredundant = false});
      bool extra = false;
      for (size_t k = 0; k < rows.size() && !extra; ++k) {
        if (k == i || k == j) continue;
        extra = is_zero(reduce_mod_rowspan(face.equalities, rows[k]));
      }
      if (!extra) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return edges;
}

std::vector<SubdivisionCell> cells_of_dressian_cell(const Matroid& m, const Cone& cell,
                                                    const ReducedSystem& sys,
                                                    const std::vector<int>& dense_to_var) {
  if (static_cast<int>(m.bases().size()) != sys.num_vars)
    throw InvalidArgument("reduced system does not belong to this matroid");
  if (static_cast<int>(dense_to_var.size()) != cell.ambient_dim)
    throw DimMismatch("cell ambient dimension disagrees with the variable map");
  std::map<int, size_t> dense_of;
  for (size_t i = 0; i < dense_to_var.size(); ++i) dense_of[dense_to_var[i]] = i;
  std::vector<int> merged;
  std::merge(sys.surviving.begin(), sys.surviving.end(), sys.free_vars.begin(),
             sys.free_vars.end(), std::back_inserter(merged));
  Vec w_ne(merged.size(), Rat(0));
  for (size_t i = 0; i < merged.size(); ++i) {
    auto it = dense_of.find(merged[i]);
    if (it != dense_of.end()) w_ne[i] = cell.relint[it->second];
  }
  Vec full = lift_point(w_ne, sys);
  auto cells = regular_subdivision(m, full);
  for (auto& c : cells) {
    if (!c.matroid || m.n() > 10) continue;
    for (const auto& name : catalog_names()) {
      if (name.find('(') != std::string::npos) continue;  // parametrized templates
      Matroid cand = catalog(name);
      if (cand.n() != c.matroid->n() || cand.rank() != c.matroid->rank() ||
          cand.bases().size() != c.matroid->bases().size())
        continue;
      if (find_isomorphism(cand, *c.matroid)) {
        c.iso_tag = name;
        break;
      }
    }
  }
  return cells;
}

}  // namespace dressian
