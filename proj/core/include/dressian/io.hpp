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
// JSON file formats.  All serializers emit keys in sorted order with exact
// "p/q" rationals, so output for a fixed input is byte-identical across runs.
//
// matroid:  {"name": str, "n": int, "rank": int, "nonbases": [[int,...],...]}
//           (or "bases" instead of "nonbases"; exactly one of the two)
// weights:  {"weights": {"0,1": "3/2", ...}}, one entry per basis, keyed by
//           the sorted basis tuple
// fan:      {"ambient_dim": int, "lineality_basis": [[rat,...],...],
//            "rays": [[rat,...],...], "cells": [{"dim": int,
//            "rays": [int,...]},...], "f_vector_spherical": [int,...]}

#ifndef DRESSIAN_IO_HPP_
#define DRESSIAN_IO_HPP_

#include <string>
#include <vector>

#include "dressian/matroid.hpp"
#include "dressian/prevariety.hpp"
#include "dressian/rational.hpp"
#include "dressian/subdivision.hpp"

namespace dressian {

// Parse errors throw InvalidArgument naming the offending field; a weight
// table without some basis throws MissingCoordinate.
Matroid parse_matroid(const std::string& json_text);
std::string matroid_json(const Matroid& m);

// Weight entries are validated against m: every basis needs exactly one
// entry and unknown keys are rejected.
Vec parse_weights(const std::string& json_text, const Matroid& m);
std::string weights_json(const Matroid& m, const Vec& w);

// Cells reference rays by index into the top-level ray list; the lineality
// cell reports no rays.
std::string fan_json(const PrevarietyComplex& c);

// Per-cell vertex count, vertex list, witness functional, and catalog tag.
std::string subdivision_json(const Matroid& m,
                             const std::vector<SubdivisionCell>& cells);

// File wrappers; unreadable paths or invalid JSON throw InvalidArgument.
Matroid load_matroid(const std::string& path);
Vec load_weights(const std::string& path, const Matroid& m);

}  // namespace dressian

#endif  // DRESSIAN_IO_HPP_
