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

#include "dressian/tropical.hpp"

#include <algorithm>

#include <boost/multiprecision/gmp.hpp>

namespace dressian {

void TropicalPolynomial::normalize() {
  // descending monomial order; ties merged
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exps > b.exps; });
  std::vector<Term> out;
  for (Term& t : terms) {
    if (!out.empty() && out.back().same_monomial(t))
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.coeff == 0; }),
            out.end());
  terms = std::move(out);
}

std::set<int> TropicalPolynomial::variables() const {
  std::set<int> vars;
  for (const Term& t : terms)
    for (const auto& [v, e] : t.exps) vars.insert(v);
  return vars;
}

void TropicalPolynomial::remove_content() {
  if (terms.empty()) return;
  // per-variable min exponent across terms, a missing variable counting 0
  std::map<int, int> min_exp;
  std::map<int, size_t> count;
  for (const Term& t : terms)
    for (const auto& [v, e] : t.exps) {
      auto [it, fresh] = min_exp.emplace(v, e);
      if (!fresh && e < it->second) it->second = e;
      ++count[v];
    }
  for (auto it = min_exp.begin(); it != min_exp.end();) {
    if (count[it->first] < terms.size() && it->second > 0) it->second = 0;
    if (it->second == 0)
      it = min_exp.erase(it);
    else
      ++it;
  }
  if (!min_exp.empty()) {
    for (Term& t : terms) {
      for (const auto& [v, m] : min_exp) {
        int e = (t.exps.count(v) ? t.exps[v] : 0) - m;
        if (e == 0)
          t.exps.erase(v);
        else
          t.exps[v] = e;
      }
    }
    normalize();
  }
  Int g = 0;
  for (const Term& t : terms) g = boost::multiprecision::gcd(g, t.coeff);
  if (g > 1)
    for (Term& t : terms) t.coeff /= g;
}

std::vector<int> TropicalPolynomial::degree_one_variables() const {
  std::map<int, std::pair<int, int>> occ;  // var -> (#terms, last exponent)
  for (const Term& t : terms)
    for (const auto& [v, e] : t.exps) {
      auto& o = occ[v];
      ++o.first;
      o.second = e;
    }
  std::vector<int> out;
  for (const auto& [v, o] : occ)
    if (o.first == 1 && o.second == 1) out.push_back(v);
  return out;
}

std::string poly_to_string(const TropicalPolynomial& p,
                           const std::vector<Subset>& names) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    const Term& t = p.terms[i];
    if (i) out += " ";
    out += (t.coeff < 0) ? "- " : "+ ";
    Int mag = boost::multiprecision::abs(t.coeff);
    bool printed = false;
    if (mag != 1 || t.exps.empty()) {
      out += mag.str();
      printed = true;
    }
    for (const auto& [v, e] : t.exps) {
      if (printed) out += "*";
      out += "p_{";
      const Subset& name = names.at(v);
      for (size_t k = 0; k < name.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(name[k]);
      }
      out += "}";
      if (e != 1) out += "^" + std::to_string(e);
      printed = true;
    }
  }
  return out;
}

}  // namespace dressian
