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

#ifndef DRESSIAN_CATALOG_HPP_
#define DRESSIAN_CATALOG_HPP_

#include <string>
#include <vector>

#include "dressian/matroid.hpp"

namespace dressian {

// Named matroids.  Recognized names:
//   uniform(d,n)                     all d-subsets of n elements
//   fano, non-fano                   rank 3 on 7 elements
//   pappus, non-pappus               rank 3 on 9 elements
//   star, desargues                  rank 3 point-line configurations on 10
//   vamos, non-vamos, twisted-vamos  rank 4 on 8 elements
//   cube                             rank 4 on 8; nonbases = 12 cube planes
//   p2f3                             order-3 projective plane, 13 points
//   partial-plane                    p2f3 with the line {0,3,6,9} broken up
//   parallel-ext(r,k;s1,...,sk)      parallel extension of uniform(r,k)
// Throws UnknownName otherwise.
Matroid catalog(const std::string& name);

// Fixed-name entries, for listings.
std::vector<std::string> catalog_names();

}  // namespace dressian

#endif  // DRESSIAN_CATALOG_HPP_
