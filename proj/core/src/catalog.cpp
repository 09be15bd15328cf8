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

#include "dressian/catalog.hpp"

#include <array>
#include <cstdlib>

#include "dressian/errors.hpp"

namespace dressian {

namespace {

std::vector<Subset> triples(std::initializer_list<int> packed) {
  // each entry holds digits of a sorted triple, e.g. 26 -> {0,2,6}
  std::vector<Subset> out;
  for (int v : packed)
    out.push_back({v / 100, (v / 10) % 10, v % 10});
  return out;
}

std::vector<Subset> quads(std::initializer_list<int> packed) {
  std::vector<Subset> out;
  for (int v : packed)
    out.push_back({v / 1000, (v / 100) % 10, (v / 10) % 10, v % 10});
  return out;
}

Matroid non_fano() {
  return from_nonbases(7, 3, triples({14, 25, 36, 126, 234, 456}), "non-fano");
}

Matroid fano() {
  return from_nonbases(7, 3, triples({14, 25, 36, 126, 234, 456, 135}), "fano");
}

Matroid non_pappus() {
  // The 9-point configuration with 8 three-point lines; adding {6,7,8}
  // as a ninth line gives the Pappus configuration.
  return from_nonbases(9, 3, triples({12, 345, 48, 57, 138, 156, 237, 246}),
                       "non-pappus");
}

Matroid pappus() {
  return from_nonbases(9, 3,
                       triples({12, 345, 48, 57, 138, 156, 237, 246, 678}),
                       "pappus");
}

Matroid star() {
  return from_nonbases(
      10, 3, triples({26, 39, 58, 137, 145, 169, 248, 257, 368, 479}), "star");
}

Matroid desargues() {
  return from_nonbases(
      10, 3, triples({27, 36, 58, 135, 149, 168, 234, 259, 467, 789}),
      "desargues");
}

Matroid vamos() {
  return from_nonbases(8, 4, quads({134, 125, 2345, 3467, 2567}), "vamos");
}

Matroid non_vamos() {
  return from_nonbases(8, 4, quads({134, 125, 2345, 3467, 2567, 167}),
                       "non-vamos");
}

Matroid twisted_vamos() {
  return from_nonbases(8, 4, quads({123, 145, 2345, 2567, 3467}),
                       "twisted-vamos");
}

Matroid cube() {
  // The twelve planes through four vertices of a cube: six facets plus six
  // diagonal planes.  Vertex i carries coordinates (bit0, bit1, bit2 of i).
  return from_nonbases(8, 4,
                       quads({134, 125, 3467, 2567, 246, 356, 1247, 1357, 237,
                              457, 1236, 1456}),
                       "cube");
}

Matroid p2f3() {
  // 13 projective points over the field with three elements; a triple is a
  // nonbasis exactly when its 3x3 coordinate determinant vanishes mod 3.
  static const std::array<std::array<int, 3>, 13> pts = {{{1, 0, 0},
                                                          {1, 0, 1},
                                                          {1, 0, 2},
                                                          {1, 1, 0},
                                                          {1, 1, 1},
                                                          {1, 1, 2},
                                                          {1, 2, 0},
                                                          {1, 2, 1},
                                                          {1, 2, 2},
                                                          {0, 1, 0},
                                                          {0, 1, 1},
                                                          {0, 1, 2},
                                                          {0, 0, 1}}};
  std::vector<Subset> nb;
  for (const Subset& t : all_subsets(13, 3)) {
    const auto &a = pts[t[0]], &b = pts[t[1]], &c = pts[t[2]];
    int det = a[0] * (b[1] * c[2] - b[2] * c[1]) -
              a[1] * (b[0] * c[2] - b[2] * c[0]) +
              a[2] * (b[0] * c[1] - b[1] * c[0]);
    if (((det % 3) + 3) % 3 == 0) nb.push_back(t);
  }
  return from_nonbases(13, 3, nb, "p2f3");
}

Matroid partial_plane() {
  Matroid plane = p2f3();
  std::vector<Subset> bases = plane.bases();
  bases.push_back({3, 6, 9});
  bases.push_back({0, 6, 9});
  bases.push_back({0, 3, 9});
  bases.push_back({0, 3, 6});
  return from_bases(13, 3, bases, "partial-plane");
}

// "name(a,b,...;c,d,...)" -> args before ';', sizes after.  Either part may
// be absent.
bool parse_call(const std::string& name, const std::string& head,
                std::vector<int>* args, std::vector<int>* sizes) {
  if (name.size() < head.size() + 2 || name.compare(0, head.size(), head) != 0)
    return false;
  if (name[head.size()] != '(' || name.back() != ')') return false;
  std::string body = name.substr(head.size() + 1,
                                 name.size() - head.size() - 2);
  std::string first = body, second;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    first = body.substr(0, semi);
    second = body.substr(semi + 1);
  }
  auto parse_ints = [](const std::string& s, std::vector<int>* out) {
    size_t pos = 0;
    while (pos < s.size()) {
      while (pos < s.size() && (s[pos] == ',' || s[pos] == ' ')) ++pos;
      if (pos >= s.size()) break;
      char* end = nullptr;
      long v = std::strtol(s.c_str() + pos, &end, 10);
      if (end == s.c_str() + pos) return false;
      out->push_back(static_cast<int>(v));
      pos = end - s.c_str();
    }
    return true;
  };
  return parse_ints(first, args) && parse_ints(second, sizes);
}

}  // namespace

Matroid catalog(const std::string& name) {
  if (name == "fano") return fano();
  if (name == "non-fano") return non_fano();
  if (name == "pappus") return pappus();
  if (name == "non-pappus") return non_pappus();
  if (name == "star") return star();
  if (name == "desargues") return desargues();
  if (name == "vamos") return vamos();
  if (name == "non-vamos") return non_vamos();
  if (name == "twisted-vamos") return twisted_vamos();
  if (name == "cube") return cube();
  if (name == "p2f3") return p2f3();
  if (name == "partial-plane") return partial_plane();

  std::vector<int> args, sizes;
  if (parse_call(name, "uniform", &args, &sizes)) {
    if (args.size() != 2 || !sizes.empty())
      throw UnknownName("expected uniform(d,n): " + name);
    return uniform(args[0], args[1]);
  }
  args.clear();
  sizes.clear();
  if (parse_call(name, "parallel-ext", &args, &sizes)) {
    if (args.size() != 2)
      throw UnknownName("expected parallel-ext(r,k;sizes): " + name);
    Matroid m = parallel_extension(args[0], args[1], sizes);
    m.set_name(name);
    return m;
  }
  throw UnknownName("unknown catalog matroid: " + name);
}

std::vector<std::string> catalog_names() {
  return {"uniform(d,n)", "fano",          "non-fano",      "pappus",
          "non-pappus",   "star",          "desargues",     "vamos",
          "non-vamos",    "twisted-vamos", "cube",          "p2f3",
          "partial-plane", "parallel-ext(r,k;s1,...,sk)"};
}

}  // namespace dressian
