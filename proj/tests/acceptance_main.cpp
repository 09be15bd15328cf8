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
// Acceptance gate: runs one tier of the verification battery and prints a
// pass/fail line per criterion.  Sub-checks marked expected-fail document
// reference values this implementation measurably disagrees with; each is
// paired with a regression guard pinning the measured value.  Exit status is
// 0 iff every failure is an expected one.

#include <cstring>
#include <iostream>
#include <string>

#include "dressian/suite.hpp"

int main(int argc, char** argv) {
  using namespace dressian;
  SuiteOptions options;
  options.tier = Tier::Small;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "medium")
      options.tier = Tier::Medium;
    else if (arg == "extended")
      options.tier = Tier::Extended;
    else if (arg == "small")
      options.tier = Tier::Small;
    else if (arg == "--progress")
      options.progress = &std::cerr;
    else {
      std::cerr << "usage: " << argv[0]
                << " [small|medium|extended] [--progress]\n";
      return 2;
    }
  }

  auto results = run_suite(options);
  bool all_acceptable = true;
  int passed = 0;
  for (const CheckResult& r : results) {
    all_acceptable = all_acceptable && r.acceptable();
    passed += r.passed();
    std::cout << (r.passed()       ? "pass"
                  : r.acceptable() ? "pass (expected-fail subchecks)"
                                   : "FAIL")
              << "  " << r.id << ". " << r.name << "\n";
    for (const SubCheck& c : r.checks) {
      if (c.passed) continue;
      std::cout << "        "
                << (c.expected_fail ? "[expected-fail] " : "[FAIL] ") << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
  }
  std::cout << passed << "/" << results.size() << " criteria fully green ("
            << tier_name(options.tier) << " tier), "
            << (all_acceptable ? "gate open" : "gate CLOSED") << "\n";
  return all_acceptable ? 0 : 1;
}
