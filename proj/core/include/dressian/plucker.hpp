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

#ifndef DRESSIAN_PLUCKER_HPP_
#define DRESSIAN_PLUCKER_HPP_

#include <vector>

#include "dressian/matroid.hpp"
#include "dressian/tropical.hpp"

namespace dressian {

struct RelationSet {
  // Variable v indexes bases()[v] of the source matroid.
  std::vector<TropicalPolynomial> relations;
  // count before dropping identically-zero restrictions:
  // C(n,d-2) * C(n-d+2, 4)
  long raw_count = 0;
};

// Restricted three-term relations of a matroid: for each (d-2)-subset S and
// each 4-subset {i<j<k<l} of the complement, the trinomial
//   p_{Sij} p_{Skl} - p_{Sik} p_{Sjl} + p_{Sil} p_{Sjk}
// with any product dropped when either factor is a nonbasis.  Relations that
// lose all terms are discarded; a single surviving term would contradict the
// exchange axiom and raises MonomialRelation.  Output order is lexicographic
// in (S, i, j, k, l).
RelationSet generate_relations(const Matroid& m);

// Remove exact duplicates and sign-negations, first occurrence kept.
std::vector<TropicalPolynomial> dedupe(const std::vector<TropicalPolynomial>& in);

}  // namespace dressian

#endif  // DRESSIAN_PLUCKER_HPP_
