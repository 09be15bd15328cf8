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
//
// Real-valued shadow of the Dress-Wenzel inner Tutte group: dimension of the
// space of real characters respecting the degenerate exchange relations, the
// rank of the basis-element incidence map, and the rigidity certificate their
// comparison yields.

#ifndef DRESSIAN_TUTTE_HPP_
#define DRESSIAN_TUTTE_HPP_

#include <array>
#include <vector>

#include "dressian/matroid.hpp"
#include "dressian/rational.hpp"

namespace dressian {

// One row per degenerate basis quadruple: for a (d-2)-set S and elements
// b1, b2, c1, c2 outside it, all four mixed sets S+{b_i, c_j} are bases but
// S+{b1, b2} is not.  Every real character then satisfies
//   p_{S b1 c1} + p_{S b2 c2} - p_{S b1 c2} - p_{S b2 c1} = 0,
// a covector with exactly four entries +-1 over basis-indexed coordinates.
// The multiplicative sign of the underlying group is quotiented away; it dies
// in every map to the reals.
struct TutteRelationSystem {
  int num_vars = 0;  // one per basis of the matroid
  struct Row {
    std::array<int, 2> plus;   // basis indices of S+{b1,c1}, S+{b2,c2}
    std::array<int, 2> minus;  // basis indices of S+{b1,c2}, S+{b2,c1}
  };
  std::vector<Row> rows;  // deduplicated up to sign
};

TutteRelationSystem tutte_relations(const Matroid& m);

// Dimension of the rational solution space, |bases| - rank(rows).
int hom_dim(const TutteRelationSystem& sys);

// Rank of the 0/1 matrix (bases x elements); this equals the lineality
// dimension of the Dressian in basis coordinates.
int phi_rank(const Matroid& m);

// Rigid certifies that the solution space collapses onto the incidence
// image, so the tropical variety admits no ray beyond lineality and the
// matroid polytope has no nontrivial matroidal subdivision.  The converse is
// not decided here, hence Unknown rather than NotRigid.
enum class Rigidity { Rigid, Unknown };

struct RigidityReport {
  int hom_dim = 0;
  int phi_rank = 0;
  Rigidity certificate = Rigidity::Unknown;
};

RigidityReport rigidity_report(const Matroid& m);
Rigidity rigidity_certificate(const Matroid& m);

// Diagnostic only: nonzero invariant factors of the integer row matrix.
// Factors above 1 reveal torsion in the sign-free relation quotient; the
// certificate path never consults this.
std::vector<Int> invariant_factors(const TutteRelationSystem& sys);

}  // namespace dressian

#endif  // DRESSIAN_TUTTE_HPP_
