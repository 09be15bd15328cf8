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

#ifndef DRESSIAN_ERRORS_HPP_
#define DRESSIAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dressian {

// Bad user-supplied data (malformed files, axiom violations, out-of-range
// arguments).  CLI maps these to exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct AxiomViolation : InputError {
  explicit AxiomViolation(const std::string& what) : InputError(what) {}
};

// B0 violated: a matroid must have at least one basis.
struct EmptyBasisSet : AxiomViolation {
  explicit EmptyBasisSet(const std::string& what) : AxiomViolation(what) {}
};

// Subset with wrong cardinality, repeats, or out-of-range elements.
struct MalformedSubset : InputError {
  explicit MalformedSubset(const std::string& what) : InputError(what) {}
};

// Bad parallel-class size list.
struct InvalidSizes : InputError {
  explicit InvalidSizes(const std::string& what) : InputError(what) {}
};

struct DuplicateBasis : InputError {
  explicit DuplicateBasis(const std::string& what) : InputError(what) {}
};

struct RankMismatch : InputError {
  explicit RankMismatch(const std::string& what) : InputError(what) {}
};

struct UnknownName : InputError {
  explicit UnknownName(const std::string& what) : InputError(what) {}
};

struct InvalidArgument : InputError {
  explicit InvalidArgument(const std::string& what) : InputError(what) {}
};

struct MissingCoordinate : InputError {
  explicit MissingCoordinate(const std::string& what) : InputError(what) {}
};

struct NotAMatroid : InputError {
  explicit NotAMatroid(const std::string& what) : InputError(what) {}
};

// Polynomial with fewer than two distinct monomials where at least two are
// required (tropical hypersurfaces of constants are undefined).
struct VacuousInput : InputError {
  explicit VacuousInput(const std::string& what) : InputError(what) {}
};

// A configured resource cap was hit.  CLI maps these to exit code 2.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// A "cannot happen" condition; indicates a bug, not bad input.  CLI maps
// these to exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct MonomialRelation : InternalError {
  explicit MonomialRelation(const std::string& what) : InternalError(what) {}
};

struct DimMismatch : InvalidArgument {
  explicit DimMismatch(const std::string& what) : InvalidArgument(what) {}
};

}  // namespace dressian

#endif  // DRESSIAN_ERRORS_HPP_
