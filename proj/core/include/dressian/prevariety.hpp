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

#ifndef DRESSIAN_PREVARIETY_HPP_
#define DRESSIAN_PREVARIETY_HPP_

#include <vector>

#include "dressian/cone.hpp"
#include "dressian/matroid.hpp"
#include "dressian/rational.hpp"
#include "dressian/reduction.hpp"
#include "dressian/tropical.hpp"

namespace dressian {

// For each input polynomial, the term indices whose forms attain the minimum
// everywhere on the cell (ascending, multiset semantics: a term repeated in
// `terms` counts twice); for each inequality, whether it is tight.
struct ArgminType {
  std::vector<std::vector<int>> argmin;
  std::vector<bool> tight;
};

struct PrevarietyCell {
  ArgminType type;
  Cone cone;
  int dim = 0;
};

// Tropical prevariety as a fan: all faces, each exactly once, sorted by
// (dim, canonical key).  f_vector_spherical[k] counts cells of dimension
// lineality+k+1; the cell equal to the lineality space itself (k = -1) and
// cells below it never arise.
struct PrevarietyComplex {
  int ambient_dim = 0;
  LinearSubspace lineality;
  std::vector<PrevarietyCell> cells;
  std::vector<bool> maximal_flags;  // aligned with cells
  std::vector<int> f_vector_spherical;
  // one primitive generator per (lineality+1)-dimensional cell, reduced
  // modulo the lineality rowspan, sorted
  Mat rays;
};

struct PrevarietyOptions {
  size_t max_cells = 1000000;  // cap on live cones; ResourceLimit beyond
  int threads = 1;
};

// Cones covering {w : min over p's terms attained at >= 2 terms, counted
// with multiplicity}: one cone per unordered pair of distinct term monomials
// {s,t} ({a_s = a_t <= a_u}) and one halfspace per repeated monomial
// ({a_s <= a_u}); cones contained in another are dropped.  Trivial
// valuation: coefficients contribute nothing.
std::vector<Cone> hypersurface_cones(const TropicalPolynomial& p,
                                     int ambient_dim);

// Dynamic intersection of all hypersurfaces and inequality halfspaces:
// maintains inclusion-maximal candidate cones polynomial by polynomial, then
// enumerates all faces and assembles the f-vector.
PrevarietyComplex intersect_prevariety(
    int ambient_dim, const std::vector<TropicalPolynomial>& polys,
    const std::vector<TropicalInequality>& ineqs,
    const PrevarietyOptions& options = {});

// Definitional Dressian membership: every restricted three-term relation of
// m attains its minimum at >= 2 terms under weights w.  Brute force over the
// relation list; the oracle for the complex-based computations.
bool membership(const Matroid& m, const Vec& w);

}  // namespace dressian

#endif  // DRESSIAN_PREVARIETY_HPP_
