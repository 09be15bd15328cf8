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

#ifndef DRESSIAN_MATROID_HPP_
#define DRESSIAN_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace dressian {

using Subset = std::vector<int>;  // strictly increasing elements

// Partition of {0,...,n-1} into blocks; blocks and their contents sorted.
struct GroundPartition {
  int n = 0;
  std::vector<Subset> blocks;
};

// A matroid on {0,...,n-1} given by its list of bases, kept in lexicographic
// order.  Construction goes through the validating factories below; axioms
// B0 (nonempty) and B1 (exchange) are enforced there.
class Matroid {
 public:
  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool is_basis(const Subset& s) const;
  bool is_basis_mask(uint32_t mask) const { return basis_masks_.count(mask) > 0; }
  const std::vector<uint32_t>& basis_masks() const { return mask_list_; }

  // Index of a basis in the canonical (lexicographic) order, or -1.
  int basis_index(const Subset& s) const;

  // All d-subsets of the ground set that are not bases, lexicographic.
  std::vector<Subset> nonbases() const;

  // rank of an arbitrary subset: size of the largest intersection with a
  // basis (bases are the maximal independent sets).
  int subset_rank(const Subset& s) const;

  // Blocks of the direct-sum decomposition, via basis-exchange reachability:
  // i ~ j when some basis contains i, omits j, and stays a basis under the
  // swap.  Coloops and loops end up as singleton blocks.
  GroundPartition connected_components() const;
  bool connected() const;

  Matroid relabel(const std::vector<int>& perm) const;

  // FNV-1a over the canonical basis serialization; stable across runs.
  std::string content_hash() const;

  // Trusted constructor for internal use and tests; skips axiom checks.
  static Matroid unchecked(int n, int rank, std::vector<Subset> bases,
                           std::string name = "");

  friend Matroid from_bases(int n, int rank, const std::vector<Subset>& bases,
                            const std::string& name);

 private:
  Matroid() = default;
  void index();

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
  std::vector<uint32_t> mask_list_;
  std::unordered_set<uint32_t> basis_masks_;
  std::string name_;
};

uint32_t subset_mask(const Subset& s);
Subset mask_subset(uint32_t mask, int n);
std::string subset_to_string(const Subset& s);

// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<Subset> all_subsets(int n, int k);

// Factories.  All validate B0/B1 and throw AxiomViolation / DuplicateBasis /
// RankMismatch / InvalidArgument on bad input.
Matroid from_bases(int n, int rank, const std::vector<Subset>& bases,
                   const std::string& name = "");
Matroid from_nonbases(int n, int rank, const std::vector<Subset>& nonbases,
                      const std::string& name = "");
Matroid uniform(int rank, int n);
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Parallel extension of U(rank, blocks.size()): replace point i of the
// uniform matroid by the class blocks[i].  A subset is a basis iff its
// elements lie in pairwise distinct blocks.  blocks must partition the
// ground set 0..n-1.
Matroid parallel_extension(int rank, const std::vector<Subset>& blocks);
// Convenience form with consecutive blocks of the given sizes.
Matroid parallel_extension(int rank, int k, const std::vector<int>& class_sizes);

// Brute-force isomorphism search, n <= 10 only; returns a witness
// permutation (image of each element) if the matroids are isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

}  // namespace dressian

#endif  // DRESSIAN_MATROID_HPP_
