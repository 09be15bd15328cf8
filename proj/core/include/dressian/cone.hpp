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

#ifndef DRESSIAN_CONE_HPP_
#define DRESSIAN_CONE_HPP_

#include <string>
#include <vector>

#include "dressian/rational.hpp"

namespace dressian {

// Row-reduced echelon basis; unique per subspace.
struct LinearSubspace {
  int ambient_dim = 0;
  Mat basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Polyhedral cone {w : E w = 0, I w >= 0} through the origin, kept in
// canonical form:
//   - equalities: primitive echelon rows, positive leading entries;
//   - inequalities: reduced modulo the equality span, primitive (positive
//     scaling only), none implied by the rest (facets), sorted;
//   - no inequality holds with equality on the whole cone (such rows are
//     folded into the equalities during canonicalization).
// Canonical form is unique per point set, so equality of the field data is
// equality of cones.  A cone always contains 0 and is never empty.
struct Cone {
  int ambient_dim = 0;
  Mat equalities;
  Mat inequalities;
  // cached: dimension of the linear hull and a strict interior point of the
  // relative interior (0 when the cone is a subspace); both set by make_cone
  int dimension = 0;
  Vec relint;

  bool is_subspace() const { return inequalities.empty(); }
  bool operator==(const Cone& o) const {
    return ambient_dim == o.ambient_dim && equalities == o.equalities &&
           inequalities == o.inequalities;
  }
};

struct ConeOptions {
  // Skip the facet-irredundancy pass (folding always runs).  Used for bulk
  // constraint sets where the two-pass filter below is called explicitly.
  bool irredundant = true;
};

// Canonicalize a constraint system into a Cone.
Cone make_cone(int ambient_dim, Mat equalities, Mat inequalities,
               const ConeOptions& options = {});

Cone full_space(int ambient_dim);

// Concatenate constraints and re-canonicalize.
Cone intersect(const Cone& a, const Cone& b);

// Per contract a canonical cone always contains the origin; the relative
// interior of a nonempty closed convex cone is never empty either.
inline bool is_empty(const Cone&) { return false; }

inline int dim(const Cone& c) { return c.dimension; }

// inner subset-of outer, exact (rank checks on equalities, one small LP per
// outer inequality).
bool contains(const Cone& outer, const Cone& inner);

// Deterministic strict point: every inequality positive, equalities zero.
inline const Vec& relative_interior_point(const Cone& c) { return c.relint; }

// Largest subspace inside the cone: nullspace of all constraints as rows.
LinearSubspace cone_lineality(const Cone& c);

// Intersection of the linealities of the given cones.
LinearSubspace lineality(const std::vector<Cone>& cones);

// Stable text identity (for hashing / set keys).
std::string canonical_key(const Cone& c);

// The face obtained by turning inequality `index` into an equality.
Cone face_tighten(const Cone& c, size_t index);

// Evaluate whether point satisfies all constraints (closed membership).
bool cone_contains_point(const Cone& c, const Vec& p);

}  // namespace dressian

#endif  // DRESSIAN_CONE_HPP_
