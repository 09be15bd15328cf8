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

#include "dressian/io.hpp"

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dressian/catalog.hpp"
#include "dressian/errors.hpp"
#include "dressian/matroid.hpp"
#include "dressian/pipeline.hpp"
#include "dressian/rational.hpp"
#include "dressian/subdivision.hpp"

using namespace dressian;

namespace {

Vec rvec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("matroid files round-trip") {
  for (const char* name :
       {"uniform(2,4)", "fano", "vamos", "cube", "partial-plane"}) {
    Matroid m = catalog(name);
    Matroid back = parse_matroid(matroid_json(m));
    CHECK(back.n() == m.n());
    CHECK(back.rank() == m.rank());
    CHECK(back.bases() == m.bases());
    CHECK(back.name() == m.name());
  }
}

TEST_CASE("matroid serialization picks the shorter side") {
  // uniform: no nonbases; fano: 7 nonbases vs 28 bases
  CHECK(matroid_json(uniform(2, 4)).find("\"nonbases\": []") !=
        std::string::npos);
  CHECK(matroid_json(catalog("fano")).find("\"nonbases\"") !=
        std::string::npos);
  Matroid few = from_bases(4, 2, {{0, 1}, {0, 2}, {0, 3}}, "star3");
  CHECK(matroid_json(few).find("\"bases\"") != std::string::npos);
}

TEST_CASE("matroid parse errors name the offending field") {
  CHECK_THROWS_AS(parse_matroid("not json"), InvalidArgument);
  CHECK_THROWS_AS(parse_matroid("[1,2]"), InvalidArgument);
  CHECK_THROWS_AS(parse_matroid(R"({"n":4,"rank":2})"), InvalidArgument);
  CHECK_THROWS_AS(
      parse_matroid(R"({"n":4,"rank":2,"bases":[[0,1]],"nonbases":[]})"),
      InvalidArgument);
  CHECK_THROWS_AS(parse_matroid(R"({"n":"4","rank":2,"nonbases":[]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_matroid(R"({"n":4,"rank":2,"bases":[[0,7]]})"),
                  InputError);
  // exchange axiom violation: {01, 23} misses the crossing bases
  CHECK_THROWS_AS(parse_matroid(R"({"n":4,"rank":2,"bases":[[0,1],[2,3]]})"),
                  AxiomViolation);
}

TEST_CASE("weight files round-trip against the basis order") {
  Matroid m = uniform(2, 4);
  Vec w = rvec({1, 0, 0, 0, 0, 1});
  w[1] = Rat(3, 2);
  Vec back = parse_weights(weights_json(m, w), m);
  CHECK(back == w);

  CHECK_THROWS_AS(parse_weights(R"({"weights":{"0,1":1}})", m),
                  MissingCoordinate);
  CHECK_THROWS_AS(parse_weights(R"({"nope":{}})", m), InvalidArgument);
  std::string all = weights_json(m, w);
  CHECK_THROWS_AS(
      parse_weights(all.substr(0, all.rfind('}', all.rfind('}') - 1)) +
                        R"(,"4,5":1}})",
                    m),
      InvalidArgument);
  CHECK_THROWS_AS(weights_json(m, Vec(3, Rat(0))), DimMismatch);
  // rationals survive as exact strings
  CHECK(weights_json(m, w).find("\"3/2\"") != std::string::npos);
}

TEST_CASE("fan serialization is deterministic and indexes rays") {
  DressianResult res = compute_dressian(uniform(2, 4));
  std::string a = fan_json(res.lifted);
  std::string b = fan_json(res.lifted);
  CHECK(a == b);
  CHECK(a.find("\"ambient_dim\": 6") != std::string::npos);
  CHECK(a.find("\"f_vector_spherical\": [\n    3\n  ]") != std::string::npos);
  // three rays, and the lineality cell references none of them
  CHECK(a.find("\"rays\": []") != std::string::npos);
}

TEST_CASE("subdivision reports carry witnesses and tags") {
  Matroid m = uniform(2, 4);
  auto cells = regular_subdivision(m, rvec({1, 0, 0, 0, 0, 1}));
  std::string s = subdivision_json(m, cells);
  CHECK(s == subdivision_json(m, cells));
  CHECK(s.find("\"vertex_count\": 5") != std::string::npos);
  CHECK(s.find("\"witness_offset\": \"-1\"") != std::string::npos);
  CHECK(s.find("\"is_matroid\": true") != std::string::npos);
}

TEST_CASE("unreadable paths are input errors") {
  CHECK_THROWS_AS(load_matroid("/nonexistent/m.json"), InvalidArgument);
  CHECK_THROWS_AS(load_weights("/nonexistent/w.json", uniform(2, 4)),
                  InvalidArgument);
}
