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

#ifndef DRESSIAN_REDUCTION_HPP_
#define DRESSIAN_REDUCTION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dressian/rational.hpp"
#include "dressian/tropical.hpp"

namespace dressian {

// x_{eliminated} = coefficient * prod_v x_v^exponents[v]; the eliminated
// variable never appears in its own replacement.
struct Substitution {
  int eliminated = -1;
  Rat coefficient;
  std::map<int, int> exponents;
  int order_index = 0;
};

// Linear forms with integer coefficients asserting min-side <= other side
// tropically: sum lesser_v * w_v <= sum greater_v * w_v.
struct TropicalInequality {
  std::map<int, int> lesser;
  std::map<int, int> greater;
};

struct ReducedSystem {
  int num_vars = 0;  // ambient variable count of the original system
  std::vector<TropicalPolynomial> polynomials;
  std::vector<TropicalInequality> inequalities;
  std::vector<Substitution> chain;
  // Non-eliminated variables split by whether the final system mentions them:
  // `surviving` is the support of polynomials plus inequalities, `free_vars`
  // the rest (unconstrained directions; they may still appear in the chain).
  std::vector<int> surviving;  // ascending
  std::vector<int> free_vars;  // ascending, disjoint from surviving
  // drop statistics by classification case, for reporting
  long dropped_pair_cancel = 0;  // pair group with cancelling coefficients
  long dropped_pair_merge = 0;   // pair group with surviving coefficient
  long dropped_collapsed = 0;    // all terms in one group
  std::vector<std::string> log;  // filled when options.trace
};

struct ReduceOptions {
  // Shuffle the initial relation order with this seed before eliminating;
  // exposes order dependence for the invariance harness.
  std::optional<uint64_t> shuffle_seed;
  bool trace = false;
};

// Eliminate variables with degree-1 binomials until none remains.  Each
// elimination substitutes into every polynomial; the substituted polynomial
// is classified by grouping its terms by post-substitution monomial:
//   all singletons        -> kept (coefficients merged per group);
//   pair {A,A} + {B}      -> inequality A <= B recorded, polynomial dropped
//                            (the minimum over {A,A,B} is attained twice
//                            exactly when A <= B, whether or not the pair's
//                            coefficients cancel);
//   single group          -> dropped, minimum automatically attained twice.
ReducedSystem reduce(const std::vector<TropicalPolynomial>& relations,
                     int num_vars, const ReduceOptions& options = {});

// Replace each x-exponent e by coefficient^e and scaled exponents; combines
// like monomials and clears denominators to integer coefficients (common
// integer factors are kept, so exact cancellations stay visible as 0 and
// merges as doubled coefficients).
TropicalPolynomial substitute(const TropicalPolynomial& p,
                              const Substitution& s);

// Extend a point on the non-eliminated variables (surviving and free_vars
// merged, ascending) to all num_vars coordinates by walking the chain
// backwards; the trivial valuation sends every replacement coefficient to 0.
Vec lift_point(const Vec& w, const ReducedSystem& sys);

}  // namespace dressian

#endif  // DRESSIAN_REDUCTION_HPP_
