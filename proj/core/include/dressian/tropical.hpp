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

#ifndef DRESSIAN_TROPICAL_HPP_
#define DRESSIAN_TROPICAL_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dressian/matroid.hpp"
#include "dressian/rational.hpp"

namespace dressian {

// One Laurent term: coeff * prod_v x_v^exps[v].  Exponent entries are
// nonzero; an absent variable has exponent 0.
struct Term {
  Int coeff;
  std::map<int, int> exps;

  bool same_monomial(const Term& o) const { return exps == o.exps; }
};

// Integer-coefficient Laurent polynomial over basis-indexed variables.
// Terms are kept normalized: like monomials combined, zero coefficients
// dropped, descending canonical monomial order.
struct TropicalPolynomial {
  std::vector<Term> terms;

  void normalize();
  bool is_zero() const { return terms.empty(); }
  std::set<int> variables() const;

  // Divide out the monomial gcd so every variable attains exponent 0 in
  // some term (Laurent content removal), then divide coefficients by their
  // integer content.  Sign is left untouched.
  void remove_content();

  // Variables occurring in exactly one term with exponent exactly 1 there,
  // assuming remove_content() ran (all exponents >= 0, min 0 per variable).
  std::vector<int> degree_one_variables() const;

  bool operator==(const TropicalPolynomial& o) const { return terms == o.terms; }
};

inline bool operator==(const Term& a, const Term& b) {
  return a.coeff == b.coeff && a.exps == b.exps;
}

inline bool operator<(const Term& a, const Term& b) {
  if (a.exps != b.exps) return a.exps < b.exps;
  return a.coeff < b.coeff;
}

// Text form, e.g. "+ p_{0,3}*p_{1,2} - p_{0,2}*p_{1,3} + p_{0,1}*p_{2,3}";
// names[v] is the basis tuple printed inside p_{...}.
std::string poly_to_string(const TropicalPolynomial& p,
                           const std::vector<Subset>& names);

}  // namespace dressian

#endif  // DRESSIAN_TROPICAL_HPP_
