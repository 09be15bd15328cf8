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

#ifndef DRESSIAN_RATIONAL_HPP_
#define DRESSIAN_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "dressian/errors.hpp"

namespace dressian {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// Serialize as "p" or "p/q"; parse both forms.  This is the wire format for
// rationals in all JSON outputs.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

int sign(const Rat& q);

// --- dense exact linear algebra -------------------------------------------

Rat dot(const Vec& a, const Vec& b);

// Scale a nonzero vector by the unique positive rational making its entries
// coprime integers.  Orientation (overall sign) is preserved.
void make_primitive(Vec& v);

// Like make_primitive, but additionally flips sign so the first nonzero
// entry is positive.  Only valid for covectors where orientation is free
// (equality rows, lineality basis vectors).
void make_primitive_signed(Vec& v);

bool is_zero(const Vec& v);

// In-place reduced row echelon form.  Zero rows are removed, pivot columns
// are increasing, each pivot is the leading nonzero of its row, rows are
// scaled to primitive integer vectors with positive pivot.
void rref(Mat& m);

int rank(Mat m);

// Reduce v modulo the row span of an RREF matrix; returns the canonical
// representative of v + rowspan(m).
Vec reduce_mod_rowspan(const Mat& rref_m, Vec v);

// Basis (RREF rows) of the kernel {x : m x = 0}.
Mat kernel_basis(const Mat& m, int ncols);

// Solve m x = rhs exactly; returns empty optional-style flag via bool.
bool solve_linear(const Mat& m, const Vec& rhs, Vec& out);

std::string vec_to_string(const Vec& v);

}  // namespace dressian

#endif  // DRESSIAN_RATIONAL_HPP_
