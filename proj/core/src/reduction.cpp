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

#include "dressian/reduction.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <boost/multiprecision/gmp.hpp>

#include "dressian/errors.hpp"

namespace dressian {

namespace {

// exponent map of term after substituting s into it (monomial part only)
std::map<int, int> substituted_monomial(const Term& t, const Substitution& s) {
  auto it = t.exps.find(s.eliminated);
  if (it == t.exps.end()) return t.exps;
  int e = it->second;
  std::map<int, int> out = t.exps;
  out.erase(s.eliminated);
  for (const auto& [v, k] : s.exponents) {
    int& dst = out[v];
    dst += k * e;
    if (dst == 0) out.erase(v);
  }
  return out;
}

// rational coefficient of term after substitution: coeff * c^e
Rat substituted_coeff(const Term& t, const Substitution& s) {
  auto it = t.exps.find(s.eliminated);
  Rat c = Rat(t.coeff);
  if (it == t.exps.end()) return c;
  int e = it->second;
  Rat f = s.coefficient;
  if (e < 0) {
    f = 1 / f;
    e = -e;
  }
  for (int i = 0; i < e; ++i) c *= f;
  return c;
}

// scale rational coefficients by the lcm of denominators
std::vector<Term> clear_denominators(
    const std::vector<std::pair<Rat, std::map<int, int>>>& raw) {
  Int den_lcm = 1;
  for (const auto& [c, m] : raw)
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         boost::multiprecision::denominator(c));
  std::vector<Term> out;
  for (const auto& [c, m] : raw) {
    Term t;
    t.coeff = boost::multiprecision::numerator(c) *
              (den_lcm / boost::multiprecision::denominator(c));
    t.exps = m;
    out.push_back(std::move(t));
  }
  return out;
}

std::string monomial_str(const std::map<int, int>& m) {
  std::string s = "[";
  bool first = true;
  for (const auto& [v, e] : m) {
    if (!first) s += " ";
    first = false;
    s += "x" + std::to_string(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s + "]";
}

}  // namespace

TropicalPolynomial substitute(const TropicalPolynomial& p,
                              const Substitution& s) {
  std::vector<std::pair<Rat, std::map<int, int>>> raw;
  for (const Term& t : p.terms)
    raw.emplace_back(substituted_coeff(t, s), substituted_monomial(t, s));
  TropicalPolynomial out;
  out.terms = clear_denominators(raw);
  out.normalize();
  return out;
}

ReducedSystem reduce(const std::vector<TropicalPolynomial>& relations,
                     int num_vars, const ReduceOptions& options) {
  ReducedSystem sys;
  sys.num_vars = num_vars;

  std::vector<TropicalPolynomial> polys = relations;
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(polys.begin(), polys.end(), rng);
  }
  for (TropicalPolynomial& p : polys) {
    p.normalize();
    p.remove_content();
  }
  polys.erase(std::remove_if(polys.begin(), polys.end(),
                             [](const TropicalPolynomial& p) {
                               return p.terms.size() < 2;
                             }),
              polys.end());

  std::vector<bool> alive(num_vars, true);
  int step = 0;
  while (true) {
    // earliest binomial with a degree-1 variable; smallest such variable
    int pick_poly = -1, pick_var = -1;
    for (size_t i = 0; i < polys.size() && pick_poly < 0; ++i) {
      if (polys[i].terms.size() != 2) continue;
      std::vector<int> vars = polys[i].degree_one_variables();
      if (!vars.empty()) {
        pick_poly = static_cast<int>(i);
        pick_var = *std::min_element(vars.begin(), vars.end());
      }
    }
    if (pick_poly < 0) break;

    const TropicalPolynomial& f = polys[pick_poly];
    // f = c1 * x * u + c2 * v with x absent from u and v
    const Term* with_x = &f.terms[0];
    const Term* other = &f.terms[1];
    if (!with_x->exps.count(pick_var)) std::swap(with_x, other);
    Substitution s;
    s.eliminated = pick_var;
    s.order_index = step++;
    s.coefficient = -Rat(other->coeff) / Rat(with_x->coeff);
    s.exponents = other->exps;
    for (const auto& [v, e] : with_x->exps) {
      if (v == pick_var) continue;
      int& dst = s.exponents[v];
      dst -= e;
      if (dst == 0) s.exponents.erase(v);
    }
    if (options.trace)
      sys.log.push_back("eliminate x" + std::to_string(pick_var) + " via " +
                        monomial_str(with_x->exps) + " -> " +
                        monomial_str(s.exponents));
    alive[pick_var] = false;

    std::vector<TropicalPolynomial> next;
    next.reserve(polys.size());
    for (size_t i = 0; i < polys.size(); ++i) {
      TropicalPolynomial& g = polys[i];
      if (static_cast<int>(i) == pick_poly) continue;  // becomes 0 = c2v - c2v
      bool touches = false;
      for (const Term& t : g.terms)
        if (t.exps.count(pick_var)) {
          touches = true;
          break;
        }
      if (!touches) {
        next.push_back(std::move(g));
        continue;
      }
      // group terms by post-substitution monomial
      std::vector<std::pair<Rat, std::map<int, int>>> raw;
      for (const Term& t : g.terms)
        raw.emplace_back(substituted_coeff(t, s), substituted_monomial(t, s));
      std::map<std::map<int, int>, int> group_size;
      for (const auto& [c, m] : raw) ++group_size[m];
      size_t groups = group_size.size();
      if (groups == raw.size()) {
        // (a) all singletons: keep
        TropicalPolynomial g2;
        g2.terms = clear_denominators(raw);
        g2.normalize();
        g2.remove_content();
        next.push_back(std::move(g2));
      } else if (groups == 1) {
        // (c) fully collapsed: minimum attained >= 2 automatically
        ++sys.dropped_collapsed;
        if (options.trace)
          sys.log.push_back("drop (collapsed) " +
                            monomial_str(raw[0].second));
      } else {
        // (b) pair {A,A} + singleton {B}: tropically min(A,A,B) is attained
        // twice iff A <= B, independent of the pair's coefficient sum
        const std::map<int, int>*pair_m = nullptr, *single_m = nullptr;
        for (const auto& [m, cnt] : group_size)
          (cnt == 2 ? pair_m : single_m) = &m;
        if (!pair_m || !single_m)
          throw InternalError("impossible term grouping in reduction");
        TropicalInequality ineq;
        for (const auto& [v, e] : *pair_m)
          if (e != 0) ineq.lesser[v] = e;
        for (const auto& [v, e] : *single_m)
          if (e != 0) ineq.greater[v] = e;
        Rat pair_sum = 0;
        for (const auto& [c, m] : raw)
          if (m == *pair_m) pair_sum += c;
        if (pair_sum == 0)
          ++sys.dropped_pair_cancel;
        else
          ++sys.dropped_pair_merge;
        if (options.trace)
          sys.log.push_back(
              std::string("drop (pair ") +
              (pair_sum == 0 ? "cancel" : "merge") + "), record " +
              monomial_str(*pair_m) + " <= " + monomial_str(*single_m));
        sys.inequalities.push_back(std::move(ineq));
      }
    }
    polys = std::move(next);

    // propagate the elimination into recorded inequalities
    for (TropicalInequality& q : sys.inequalities) {
      for (auto* form : {&q.lesser, &q.greater}) {
        auto it = form->find(pick_var);
        if (it == form->end()) continue;
        int e = it->second;
        form->erase(it);
        for (const auto& [v, k] : s.exponents) {
          int& dst = (*form)[v];
          dst += k * e;
          if (dst == 0) form->erase(v);
        }
      }
    }
    sys.chain.push_back(std::move(s));
  }

  // tight-equal inequalities hold everywhere; remove them
  sys.inequalities.erase(
      std::remove_if(sys.inequalities.begin(), sys.inequalities.end(),
                     [](const TropicalInequality& q) {
                       return q.lesser == q.greater;
                     }),
      sys.inequalities.end());
  sys.polynomials = std::move(polys);
  std::set<int> support;
  for (const TropicalPolynomial& p : sys.polynomials)
    for (const Term& t : p.terms)
      for (const auto& [v, e] : t.exps) support.insert(v);
  for (const TropicalInequality& q : sys.inequalities) {
    for (const auto& [v, e] : q.lesser) support.insert(v);
    for (const auto& [v, e] : q.greater) support.insert(v);
  }
  for (int v = 0; v < num_vars; ++v) {
    if (!alive[v]) continue;
    (support.count(v) ? sys.surviving : sys.free_vars).push_back(v);
  }
  return sys;
}

Vec lift_point(const Vec& w, const ReducedSystem& sys) {
  if (w.size() != sys.surviving.size() + sys.free_vars.size())
    throw InvalidArgument("lift_point: wrong number of coordinates");
  Vec full(sys.num_vars, Rat(0));
  std::vector<int> non_elim(sys.surviving.size() + sys.free_vars.size());
  std::merge(sys.surviving.begin(), sys.surviving.end(),
             sys.free_vars.begin(), sys.free_vars.end(), non_elim.begin());
  for (size_t i = 0; i < non_elim.size(); ++i) full[non_elim[i]] = w[i];
  for (auto it = sys.chain.rbegin(); it != sys.chain.rend(); ++it) {
    Rat val = 0;  // trivial valuation: val(coefficient) = 0
    for (const auto& [v, e] : it->exponents) val += e * full[v];
    full[it->eliminated] = val;
  }
  return full;
}

}  // namespace dressian
