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

#include <fstream>
#include <sstream>

#include "dressian/errors.hpp"
#include "json.hpp"

namespace dressian {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

int int_field(const json& j, const char* field) {
  if (!j.contains(field))
    throw InvalidArgument(std::string("missing field \"") + field + "\"");
  if (!j[field].is_number_integer())
    throw InvalidArgument(std::string("field \"") + field +
                          "\" must be an integer");
  return j[field].get<int>();
}

std::vector<Subset> subset_list(const json& j, const char* field) {
  if (!j.is_array())
    throw InvalidArgument(std::string("field \"") + field +
                          "\" must be an array of element lists");
  std::vector<Subset> out;
  for (const json& row : j) {
    if (!row.is_array())
      throw InvalidArgument(std::string("field \"") + field +
                            "\" must contain lists of elements");
    Subset s;
    for (const json& e : row) {
      if (!e.is_number_integer())
        throw InvalidArgument(std::string("field \"") + field +
                              "\" holds a non-integer element");
      s.push_back(e.get<int>());
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string basis_key(const Subset& s) {
  std::string key;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(s[i]);
  }
  return key;
}

json rat_array(const Vec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

json rat_matrix(const Mat& m) {
  json a = json::array();
  for (const Vec& row : m) a.push_back(rat_array(row));
  return a;
}

}  // namespace

Matroid parse_matroid(const std::string& json_text) {
  json j = parse_or_throw(json_text);
  if (!j.is_object()) throw InvalidArgument("matroid file must be an object");
  int n = int_field(j, "n");
  int rank = int_field(j, "rank");
  std::string name = j.value("name", std::string());
  bool has_bases = j.contains("bases"), has_nonbases = j.contains("nonbases");
  if (has_bases == has_nonbases)
    throw InvalidArgument(
        "matroid needs exactly one of \"bases\" or \"nonbases\"");
  if (has_bases) return from_bases(n, rank, subset_list(j["bases"], "bases"), name);
  return from_nonbases(n, rank, subset_list(j["nonbases"], "nonbases"), name);
}

std::string matroid_json(const Matroid& m) {
  json j;
  j["name"] = m.name();
  j["n"] = m.n();
  j["rank"] = m.rank();
  std::vector<Subset> nb = m.nonbases();
  // whichever list is shorter; ties go to bases
  if (nb.size() < m.bases().size())
    j["nonbases"] = nb;
  else
    j["bases"] = m.bases();
  return j.dump(2) + "\n";
}

Vec parse_weights(const std::string& json_text, const Matroid& m) {
  json j = parse_or_throw(json_text);
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_object())
    throw InvalidArgument("weight file needs a \"weights\" object");
  Vec w(m.bases().size());
  std::vector<bool> seen(m.bases().size(), false);
  for (const auto& [key, value] : j["weights"].items()) {
    Subset s;
    std::istringstream in(key);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        s.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InvalidArgument("weight key \"" + key +
                              "\" is not a comma-separated element list");
      }
    }
    int idx = m.basis_index(s);
    if (idx < 0)
      throw InvalidArgument("weight key \"" + key + "\" is not a basis");
    if (value.is_number_integer())
      w[idx] = Rat(value.get<long long>());
    else if (value.is_string())
      w[idx] = rat_from_string(value.get<std::string>());
    else
      throw InvalidArgument("weight for \"" + key +
                            "\" must be an integer or a \"p/q\" string");
    seen[idx] = true;
  }
  for (size_t v = 0; v < seen.size(); ++v)
    if (!seen[v])
      throw MissingCoordinate("no weight for basis \"" +
                              basis_key(m.bases()[v]) + "\"");
  return w;
}

std::string weights_json(const Matroid& m, const Vec& w) {
  if (w.size() != m.bases().size())
    throw DimMismatch("one weight per basis required");
  json entries;
  for (size_t v = 0; v < w.size(); ++v)
    entries[basis_key(m.bases()[v])] = rat_to_string(w[v]);
  json j;
  j["weights"] = entries;
  return j.dump(2) + "\n";
}

std::string fan_json(const PrevarietyComplex& c) {
  json j;
  j["ambient_dim"] = c.ambient_dim;
  j["lineality_basis"] = rat_matrix(c.lineality.basis);
  j["rays"] = rat_matrix(c.rays);
  j["f_vector_spherical"] = c.f_vector_spherical;
  json cells = json::array();
  for (const PrevarietyCell& cell : c.cells) {
    json jc;
    jc["dim"] = cell.dim;
    std::vector<int> rays;
    for (size_t r = 0; r < c.rays.size(); ++r)
      if (cone_contains_point(cell.cone, c.rays[r]))
        rays.push_back(static_cast<int>(r));
    jc["rays"] = rays;
    cells.push_back(std::move(jc));
  }
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

std::string subdivision_json(const Matroid& m,
                             const std::vector<SubdivisionCell>& cells) {
  json list = json::array();
  for (const SubdivisionCell& c : cells) {
    json jc;
    jc["vertex_count"] = c.bases.size();
    json vertices = json::array();
    for (int v : c.bases) vertices.push_back(m.bases()[v]);
    jc["vertices"] = vertices;
    jc["witness"] = rat_array(c.witness);
    jc["witness_offset"] = rat_to_string(c.witness_offset);
    jc["is_matroid"] = c.matroid.has_value();
    jc["iso_tag"] = c.iso_tag;
    list.push_back(std::move(jc));
  }
  json j;
  j["cells"] = list;
  return j.dump(2) + "\n";
}

Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matroid(buf.str());
}

Vec load_weights(const std::string& path, const Matroid& m) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_weights(buf.str(), m);
}

}  // namespace dressian
