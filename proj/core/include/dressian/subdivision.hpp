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

#ifndef DRESSIAN_SUBDIVISION_HPP_
#define DRESSIAN_SUBDIVISION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dressian/cone.hpp"
#include "dressian/matroid.hpp"
#include "dressian/rational.hpp"
#include "dressian/reduction.hpp"

namespace dressian {

// A maximal cell of a regular subdivision of a matroid polytope.  The
// witness functional certifies the cell exactly:
//   c . e_sigma + c0 == w_sigma  for sigma in the cell,
//   c . e_sigma + c0 <  w_sigma  off it.
struct SubdivisionCell {
  std::vector<int> bases;  // indices into m.bases(), ascending
  Vec witness;             // c, length n
  Rat witness_offset;      // c0
  // vertex set read as a basis list, when it satisfies the exchange axiom
  std::optional<Matroid> matroid;
  std::string iso_tag;  // catalog name up to isomorphism, when tagged
};

struct SubdivisionOptions {
  size_t max_cells = 1000000;
};

// Weight vectors are indexed like m.bases().
//
// Maximal cells of the regular subdivision of the matroid polytope induced
// by w, i.e. the lower hull of the lifted vertices {(e_sigma, w_sigma)}.  A
// first full-dimensional cell is found by deterministic support rotations of
// the height functional; breadth-first search then pivots the witness across
// every interior ridge (exact minimum-ratio step) until no new cell appears.
// Result is sorted by basis list.
std::vector<SubdivisionCell> regular_subdivision(
    const Matroid& m, const Vec& w, const SubdivisionOptions& options = {});

// Matroid on the bases where w is minimal.  Throws NotAMatroid (with an
// exchange-axiom witness in the message) when the argmin set violates B1,
// which can happen for weights outside the Dressian.
Matroid initial_matroid(const Matroid& m, const Vec& w);

// True iff every maximal cell of the subdivision is again a matroid
// polytope.  Stops at the first failing cell.
bool is_matroid_subdivision(const Matroid& m, const Vec& w,
                            const SubdivisionOptions& options = {});

// Edges (1-dimensional faces) of the polytope spanned by the given bases,
// as index pairs into cell_bases.  Exact: {i, j} is an edge iff some
// functional over the vertex set is tight on exactly those two vertices.
std::vector<std::pair<int, int>> cell_edges(const Matroid& m,
                                            const std::vector<int>& cell_bases);

// Subdivision induced by a cell of the reduced Dressian complex: lifts the
// cell's relative-interior point through the elimination chain to a full
// weight vector (free variables weigh 0), subdivides, and tags each cell's
// matroid against the catalog (brute-force isomorphism, n <= 10).
// dense_to_var maps cone coordinates to variable ids, as produced by
// compute_dressian.
std::vector<SubdivisionCell> cells_of_dressian_cell(
    const Matroid& m, const Cone& cell, const ReducedSystem& sys,
    const std::vector<int>& dense_to_var);

}  // namespace dressian

#endif  // DRESSIAN_SUBDIVISION_HPP_
