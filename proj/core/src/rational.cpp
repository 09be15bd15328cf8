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

#include "dressian/rational.hpp"

#include <algorithm>
#include <sstream>

namespace dressian {

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw InvalidArgument("malformed rational literal '" + s + "'");
  }
}

int sign(const Rat& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InternalError("dot: length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

void make_primitive(Vec& v) {
  Int den_lcm = 1, num_gcd = 0;
  for (const Rat& x : v) {
    if (x == 0) continue;
    den_lcm = lcm(den_lcm, denominator(x));
  }
  for (const Rat& x : v) {
    if (x == 0) continue;
    num_gcd = gcd(num_gcd, Int(numerator(x) * (den_lcm / denominator(x))));
  }
  if (num_gcd == 0) return;  // zero vector
  Rat scale(den_lcm, num_gcd);
  for (Rat& x : v) x *= scale;
}

void make_primitive_signed(Vec& v) {
  make_primitive(v);
  for (const Rat& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Rat& y : v) y = -y;
    break;
  }
}

void rref(Mat& m) {
  if (m.empty()) return;
  const size_t cols = m[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[pivot_row], m[sel]);
    const Rat piv = m[pivot_row][col];
    for (Rat& x : m[pivot_row]) x /= piv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (size_t c = col; c < cols; ++c)
        if (m[pivot_row][c] != 0) m[r][c] -= f * m[pivot_row][c];
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  for (Vec& row : m) make_primitive_signed(row);
}

int rank(Mat m) {
  rref(m);
  return static_cast<int>(m.size());
}

Vec reduce_mod_rowspan(const Mat& rref_m, Vec v) {
  for (const Vec& row : rref_m) {
    size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (piv == row.size()) continue;
    if (v[piv] == 0) continue;
    const Rat f = v[piv] / row[piv];
    for (size_t c = piv; c < v.size(); ++c)
      if (row[c] != 0) v[c] -= f * row[c];
  }
  return v;
}

Mat kernel_basis(const Mat& m, int ncols) {
  Mat a = m;
  rref(a);
  std::vector<int> pivot_col(a.size());
  std::vector<bool> is_pivot(ncols, false);
  for (size_t r = 0; r < a.size(); ++r) {
    size_t c = 0;
    while (c < a[r].size() && a[r][c] == 0) ++c;
    pivot_col[r] = static_cast<int>(c);
    is_pivot[c] = true;
  }
  Mat basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(ncols, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < a.size(); ++r) {
      if (a[r][free_col] != 0) v[pivot_col[r]] = -a[r][free_col] / a[r][pivot_col[r]];
    }
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

bool solve_linear(const Mat& m, const Vec& rhs, Vec& out) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  Mat aug(rows, Vec(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    std::copy(m[r].begin(), m[r].end(), aug[r].begin());
    aug[r][cols] = rhs[r];
  }
  rref(aug);
  out.assign(cols, Rat(0));
  for (const Vec& row : aug) {
    size_t piv = 0;
    while (piv < cols + 1 && row[piv] == 0) ++piv;
    if (piv == cols) return false;  // 0 = nonzero
    if (piv == cols + 1) continue;
    out[piv] = row[cols] / row[piv];
  }
  return true;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace dressian
