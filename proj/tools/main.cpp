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
//
// Command-line frontend.  Reports are JSON by default (--format text mirrors
// the same content); byte-identical across runs for fixed inputs unless
// --timings is given.  Exit codes: 0 ok, 1 input error, 2 resource cap hit,
// 3 internal invariant violation.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dressian/catalog.hpp"
#include "dressian/errors.hpp"
#include "dressian/io.hpp"
#include "dressian/matroid.hpp"
#include "dressian/pipeline.hpp"
#include "dressian/plucker.hpp"
#include "dressian/prevariety.hpp"
#include "dressian/rational.hpp"
#include "dressian/reduction.hpp"
#include "dressian/subdivision.hpp"
#include "dressian/suite.hpp"
#include "dressian/tropical.hpp"
#include "dressian/tutte.hpp"

namespace {

using json = nlohmann::json;
using namespace dressian;

constexpr const char* kVersion = "1.0.0";

struct Globals {
  std::string format = "json";
  int threads = 1;
  size_t max_cells = 1000000;
  std::string out_file;
  bool timings = false;
};

// content fingerprint of the canonical matroid serialization (FNV-1a)
std::string matroid_hash(const Matroid& m) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : matroid_json(m)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// positional inputs accept a file path or a catalog name
Matroid load_input(const std::string& arg) {
  if (std::ifstream probe(arg); probe) return load_matroid(arg);
  try {
    return catalog(arg);
  } catch (const UnknownName&) {
    throw InvalidArgument("\"" + arg +
                          "\": no such file and not a catalog name");
  }
}

bool scalar_array(const json& a) {
  for (const auto& v : a)
    if (v.is_array() || v.is_object()) return false;
  return true;
}

void render_text(const json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !scalar_array(value))) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || (item.is_array() && !scalar_array(item))) {
        os << pad << "-\n";
        render_text(item, os, indent + 2);
      } else {
        os << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const json& report, const Globals& g) {
  std::ostringstream os;
  if (g.format == "text")
    render_text(report, os, 0);
  else
    os << report.dump(2) << "\n";
  if (g.out_file.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(g.out_file);
    if (!out) throw InvalidArgument("cannot write file: " + g.out_file);
    out << os.str();
  }
}

// raw text payloads (matroid files, listings) bypass the JSON mirror
void emit_raw(const std::string& text, const Globals& g) {
  if (g.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out_file);
    if (!out) throw InvalidArgument("cannot write file: " + g.out_file);
    out << text;
  }
}

json header(const Matroid& m) {
  json j;
  j["name"] = m.name();
  j["hash"] = matroid_hash(m);
  j["version"] = kVersion;
  return j;
}

std::optional<uint64_t> parse_order(const std::string& order) {
  if (order.empty()) return std::nullopt;
  if (order.rfind("random:", 0) != 0)
    throw InvalidArgument("--order expects random:<seed>, got \"" + order +
                          "\"");
  try {
    return std::stoull(order.substr(7));
  } catch (const std::exception&) {
    throw InvalidArgument("--order expects random:<seed>, got \"" + order +
                          "\"");
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_catalog(const std::string& name, const Globals& g) {
  if (name.empty()) {
    if (g.format == "text") {
      std::string text;
      for (const std::string& n : catalog_names()) text += n + "\n";
      emit_raw(text, g);
    } else {
      json j;
      j["version"] = kVersion;
      j["names"] = catalog_names();
      emit(j, g);
    }
    return 0;
  }
  emit_raw(matroid_json(catalog(name)), g);
  return 0;
}

int cmd_relations(const std::string& input, bool list, const Globals& g) {
  Matroid m = load_input(input);
  RelationSet rel = generate_relations(m);
  json j = header(m);
  j["num_vars"] = m.bases().size();
  j["raw_count"] = rel.raw_count;
  j["relations"] = rel.relations.size();
  if (list) {
    std::vector<std::string> printed;
    printed.reserve(rel.relations.size());
    for (const TropicalPolynomial& p : rel.relations)
      printed.push_back(poly_to_string(p, m.bases()));
    j["polynomials"] = printed;
  }
  emit(j, g);
  return 0;
}

int cmd_reduce(const std::string& input, bool trace, const std::string& order,
               const Globals& g) {
  Matroid m = load_input(input);
  RelationSet rel = generate_relations(m);
  ReduceOptions ro;
  ro.shuffle_seed = parse_order(order);
  ro.trace = trace;
  auto t0 = std::chrono::steady_clock::now();
  ReducedSystem sys =
      reduce(rel.relations, static_cast<int>(m.bases().size()), ro);
  double elapsed = ms_since(t0);

  json j = header(m);
  j["num_vars"] = sys.num_vars;
  j["raw_count"] = rel.raw_count;
  j["relations_before"] = rel.relations.size();
  j["surviving"] = sys.surviving;
  j["free_variables"] = sys.free_vars;
  j["polynomials"] = sys.polynomials.size();
  j["inequalities"] = sys.inequalities.size();
  j["chain_length"] = sys.chain.size();
  j["dropped"] = {{"pair_cancel", sys.dropped_pair_cancel},
                  {"pair_merge", sys.dropped_pair_merge},
                  {"collapsed", sys.dropped_collapsed}};
  if (ro.shuffle_seed) j["order_seed"] = *ro.shuffle_seed;
  if (trace) {
    json chain = json::array();
    for (const Substitution& s : sys.chain) {
      json e;
      e["eliminated"] = s.eliminated;
      e["coefficient"] = rat_to_string(s.coefficient);
      json exps;
      for (const auto& [v, exp] : s.exponents) exps[std::to_string(v)] = exp;
      e["exponents"] = exps;
      chain.push_back(std::move(e));
    }
    j["chain"] = chain;
    j["log"] = sys.log;
  }
  if (g.timings) j["timings_ms"] = {{"reduce", elapsed}};
  emit(j, g);
  return 0;
}

int cmd_compute(const std::string& input, bool no_reduce,
                const std::string& order, const Globals& g) {
  Matroid m = load_input(input);
  ComputeOptions co;
  co.use_reduction = !no_reduce;
  co.lift = !no_reduce;
  co.order_seed = parse_order(order);
  co.prevariety.threads = g.threads;
  co.prevariety.max_cells = g.max_cells;
  auto t0 = std::chrono::steady_clock::now();
  DressianResult res = compute_dressian(m, co);
  double elapsed = ms_since(t0);
  const PrevarietyComplex& fan = no_reduce ? res.complex : res.lifted;

  json j = header(m);
  j["num_vars"] = res.num_vars;
  j["reduced"] = !no_reduce;
  if (!no_reduce) {
    j["surviving"] = res.reduction.surviving.size();
    j["free_variables"] = res.reduction.free_vars.size();
    j["chain_length"] = res.reduction.chain.size();
  }
  if (co.order_seed) j["order_seed"] = *co.order_seed;
  j["lineality_dim"] = res.full_lineality_dim;
  j["f_vector_spherical"] = fan.f_vector_spherical;
  j["fan"] = json::parse(fan_json(fan));
  if (g.timings) j["timings_ms"] = {{"compute", elapsed}};
  emit(j, g);
  return 0;
}

int cmd_subdivide(const std::string& input, const std::string& weights,
                  const Globals& g) {
  Matroid m = load_input(input);
  Vec w = load_weights(weights, m);
  SubdivisionOptions so;
  so.max_cells = g.max_cells;
  auto t0 = std::chrono::steady_clock::now();
  auto cells = regular_subdivision(m, w, so);
  double elapsed = ms_since(t0);
  json j = header(m);
  j.update(json::parse(subdivision_json(m, cells)));
  j["num_cells"] = cells.size();
  j["is_matroid_subdivision"] =
      std::all_of(cells.begin(), cells.end(),
                  [](const SubdivisionCell& c) { return c.matroid.has_value(); });
  if (g.timings) j["timings_ms"] = {{"subdivide", elapsed}};
  emit(j, g);
  return 0;
}

int cmd_initial(const std::string& input, const std::string& weights,
                const Globals& g) {
  Matroid m = load_input(input);
  Vec w = load_weights(weights, m);
  Matroid init = initial_matroid(m, w);
  init.set_name(m.name().empty() ? "initial" : m.name() + ":initial");
  emit_raw(matroid_json(init), g);
  return 0;
}

int cmd_rigidity(const std::string& input, const Globals& g) {
  Matroid m = load_input(input);
  RigidityReport rep = rigidity_report(m);
  json j = header(m);
  j["hom_dim"] = rep.hom_dim;
  j["phi_rank"] = rep.phi_rank;
  j["certificate"] =
      rep.certificate == Rigidity::Rigid ? "Rigid" : "Unknown";
  emit(j, g);
  return 0;
}

int cmd_suite(const std::string& tier, const Globals& g) {
  SuiteOptions so;
  if (tier == "small")
    so.tier = Tier::Small;
  else if (tier == "medium")
    so.tier = Tier::Medium;
  else
    so.tier = Tier::Extended;
  so.threads = g.threads;
  so.max_cells = g.max_cells;
  so.progress = &std::cerr;
  auto results = run_suite(so);

  bool all_acceptable = true;
  json criteria = json::array();
  std::ostringstream lines;
  for (const CheckResult& r : results) {
    all_acceptable = all_acceptable && r.acceptable();
    lines << (r.passed()       ? "pass"
              : r.acceptable() ? "pass (expected-fail subchecks)"
                               : "FAIL")
          << "  " << r.id << ". " << r.name << "\n";
    json jc;
    jc["id"] = r.id;
    jc["name"] = r.name;
    jc["passed"] = r.passed();
    jc["acceptable"] = r.acceptable();
    json checks = json::array();
    for (const SubCheck& c : r.checks) {
      if (!c.passed)
        lines << "        " << (c.expected_fail ? "[expected-fail] " : "[FAIL] ")
              << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")")
              << "\n";
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"expected_fail", c.expected_fail},
                        {"detail", c.detail}});
    }
    jc["checks"] = checks;
    criteria.push_back(std::move(jc));
  }
  if (g.format == "text") {
    emit_raw(lines.str(), g);
  } else {
    json j;
    j["version"] = kVersion;
    j["tier"] = tier;
    j["criteria"] = criteria;
    j["acceptable"] = all_acceptable;
    emit(j, g);
  }
  if (!all_acceptable) throw InternalError("acceptance criteria violated");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dressians of matroids as tropical prevarieties"};
  app.set_version_flag("--version", std::string("dressian ") + kVersion);
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", g.threads, "Worker pool size")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-cells", g.max_cells, "Cap on live cones/cells");
  app.add_option("--out", g.out_file, "Write the report to a file");
  app.add_flag("--timings", g.timings,
               "Include wall-clock timings (breaks byte-reproducibility)");

  std::string cat_name;
  auto* cat = app.add_subcommand("catalog", "List catalog names or print one");
  cat->add_option("name", cat_name, "Catalog entry to print");

  std::string rel_input;
  bool rel_list = false;
  auto* rel = app.add_subcommand("relations", "Restricted three-term relations");
  rel->add_option("matroid", rel_input, "Matroid file or catalog name")
      ->required();
  rel->add_flag("--list", rel_list, "Print every polynomial");

  std::string red_input, red_order;
  bool red_trace = false;
  auto* red = app.add_subcommand("reduce", "Eliminate degree-1 binomials");
  red->add_option("matroid", red_input, "Matroid file or catalog name")
      ->required();
  red->add_flag("--trace", red_trace, "Include the elimination chain and log");
  red->add_option("--order", red_order, "random:<seed> shuffles the order");

  std::string comp_input, comp_order;
  bool comp_no_reduce = false;
  auto* comp = app.add_subcommand("compute", "Dressian as a polyhedral fan");
  comp->add_option("matroid", comp_input, "Matroid file or catalog name")
      ->required();
  comp->add_flag("--no-reduce", comp_no_reduce,
                 "Intersect the raw relations without elimination");
  comp->add_option("--order", comp_order, "random:<seed> shuffles the order");

  std::string sub_input, sub_weights;
  auto* sub = app.add_subcommand("subdivide",
                                 "Regular subdivision of the matroid polytope");
  sub->add_option("matroid", sub_input, "Matroid file or catalog name")
      ->required();
  sub->add_option("--weights", sub_weights, "Weight file")->required();

  std::string ini_input, ini_weights;
  auto* ini = app.add_subcommand("initial", "Initial matroid of a weight vector");
  ini->add_option("matroid", ini_input, "Matroid file or catalog name")
      ->required();
  ini->add_option("--weights", ini_weights, "Weight file")->required();

  std::string rig_input;
  auto* rig = app.add_subcommand("rigidity", "Rigidity certificate");
  rig->add_option("matroid", rig_input, "Matroid file or catalog name")
      ->required();

  std::string tier = "small";
  auto* suite = app.add_subcommand("paper-suite",
                                   "Curated verification battery");
  suite->add_option("--tier", tier, "small | medium | extended")
      ->check(CLI::IsMember({"small", "medium", "extended"}));

  for (auto* s : {cat, rel, red, comp, sub, ini, rig, suite}) s->fallthrough();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(cat)) return cmd_catalog(cat_name, g);
    if (app.got_subcommand(rel)) return cmd_relations(rel_input, rel_list, g);
    if (app.got_subcommand(red))
      return cmd_reduce(red_input, red_trace, red_order, g);
    if (app.got_subcommand(comp))
      return cmd_compute(comp_input, comp_no_reduce, comp_order, g);
    if (app.got_subcommand(sub)) return cmd_subdivide(sub_input, sub_weights, g);
    if (app.got_subcommand(ini)) return cmd_initial(ini_input, ini_weights, g);
    if (app.got_subcommand(rig)) return cmd_rigidity(rig_input, g);
    if (app.got_subcommand(suite)) return cmd_suite(tier, g);
    return 3;  // unreachable with require_subcommand(1)
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
