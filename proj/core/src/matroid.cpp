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

#include "dressian/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dressian/errors.hpp"

namespace dressian {

uint32_t subset_mask(const Subset& s) {
  uint32_t m = 0;
  for (int e : s) m |= (uint32_t{1} << e);
  return m;
}

Subset mask_subset(uint32_t mask, int n) {
  Subset s;
  for (int e = 0; e < n; ++e)
    if (mask & (uint32_t{1} << e)) s.push_back(e);
  return s;
}

std::string subset_to_string(const Subset& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<Subset> all_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool Matroid::is_basis(const Subset& s) const {
  if (static_cast<int>(s.size()) != rank_) return false;
  return is_basis_mask(subset_mask(s));
}

int Matroid::basis_index(const Subset& s) const {
  auto it = std::lower_bound(bases_.begin(), bases_.end(), s);
  if (it == bases_.end() || *it != s) return -1;
  return static_cast<int>(it - bases_.begin());
}

std::vector<Subset> Matroid::nonbases() const {
  std::vector<Subset> out;
  for (const Subset& s : all_subsets(n_, rank_))
    if (!is_basis_mask(subset_mask(s))) out.push_back(s);
  return out;
}

int Matroid::subset_rank(const Subset& s) const {
  uint32_t sm = subset_mask(s);
  int best = 0;
  for (uint32_t bm : mask_list_) {
    int c = __builtin_popcount(bm & sm);
    if (c > best) best = c;
  }
  return best;
}

GroundPartition Matroid::connected_components() const {
  // Union-find over elements; i ~ j when a single basis exchange swaps them.
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (uint32_t bm : mask_list_) {
    for (int i = 0; i < n_; ++i) {
      if (!(bm & (uint32_t{1} << i))) continue;
      for (int j = 0; j < n_; ++j) {
        if (bm & (uint32_t{1} << j)) continue;
        uint32_t swapped = (bm & ~(uint32_t{1} << i)) | (uint32_t{1} << j);
        if (basis_masks_.count(swapped)) {
          int a = find(i), b = find(j);
          if (a != b) parent[a] = b;
        }
      }
    }
  }
  GroundPartition part;
  part.n = n_;
  std::vector<std::vector<int>> buckets(n_);
  for (int e = 0; e < n_; ++e) buckets[find(e)].push_back(e);
  for (auto& b : buckets)
    if (!b.empty()) part.blocks.push_back(std::move(b));
  std::sort(part.blocks.begin(), part.blocks.end());
  return part;
}

bool Matroid::connected() const {
  return connected_components().blocks.size() == 1;
}

Matroid Matroid::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InvalidArgument("relabel: permutation length mismatch");
  std::vector<bool> seen(n_, false);
  for (int v : perm) {
    if (v < 0 || v >= n_ || seen[v])
      throw InvalidArgument("relabel: not a permutation");
    seen[v] = true;
  }
  std::vector<Subset> nb;
  for (const Subset& b : bases_) {
    Subset img;
    for (int e : b) img.push_back(perm[e]);
    std::sort(img.begin(), img.end());
    nb.push_back(std::move(img));
  }
  std::sort(nb.begin(), nb.end());
  return unchecked(n_, rank_, std::move(nb), name_);
}

std::string Matroid::content_hash() const {
  std::string data = std::to_string(n_) + ";" + std::to_string(rank_) + ";";
  for (const Subset& b : bases_) data += subset_to_string(b);
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

void Matroid::index() {
  std::sort(bases_.begin(), bases_.end());
  mask_list_.clear();
  basis_masks_.clear();
  for (const Subset& b : bases_) {
    uint32_t m = subset_mask(b);
    mask_list_.push_back(m);
    basis_masks_.insert(m);
  }
}

Matroid Matroid::unchecked(int n, int rank, std::vector<Subset> bases,
                           std::string name) {
  Matroid m;
  m.n_ = n;
  m.rank_ = rank;
  m.bases_ = std::move(bases);
  m.name_ = std::move(name);
  m.index();
  return m;
}

Matroid from_bases(int n, int rank, const std::vector<Subset>& bases,
                   const std::string& name) {
  if (n < 0 || n > 31) throw InvalidArgument("ground set size out of range");
  if (rank < 0 || rank > n) throw RankMismatch("rank out of range");
  if (bases.empty()) throw EmptyBasisSet("B0: basis list is empty");
  std::set<Subset> seen;
  for (const Subset& b : bases) {
    if (static_cast<int>(b.size()) != rank)
      throw MalformedSubset("basis " + subset_to_string(b) + " has wrong size");
    for (size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 0 || b[i] >= n)
        throw MalformedSubset("basis element out of range in " +
                              subset_to_string(b));
      if (i > 0 && b[i] <= b[i - 1])
        throw MalformedSubset("basis not strictly increasing: " +
                              subset_to_string(b));
    }
    if (!seen.insert(b).second)
      throw DuplicateBasis("duplicate basis " + subset_to_string(b));
  }
  Matroid m = Matroid::unchecked(n, rank, bases, name);
  // B1 exchange: every a in A\B admits some b in B\A with A-a+b a basis.
  const auto& masks = m.basis_masks();
  for (uint32_t am : masks) {
    for (uint32_t bm : masks) {
      uint32_t only_a = am & ~bm;
      uint32_t only_b = bm & ~am;
      while (only_a) {
        uint32_t abit = only_a & (~only_a + 1);
        only_a ^= abit;
        uint32_t rest = only_b;
        bool found = false;
        while (rest) {
          uint32_t bbit = rest & (~rest + 1);
          rest ^= bbit;
          if (m.is_basis_mask((am ^ abit) | bbit)) {
            found = true;
            break;
          }
        }
        if (!found)
          throw AxiomViolation(
              "B1: no exchange for " + subset_to_string(mask_subset(am, n)) +
              " -> " + subset_to_string(mask_subset(bm, n)));
      }
    }
  }
  return m;
}

Matroid from_nonbases(int n, int rank, const std::vector<Subset>& nonbases,
                      const std::string& name) {
  std::set<Subset> excl;
  for (const Subset& s : nonbases) {
    if (static_cast<int>(s.size()) != rank)
      throw MalformedSubset("nonbasis " + subset_to_string(s) + " has wrong size");
    Subset sorted = s;
    std::sort(sorted.begin(), sorted.end());
    excl.insert(sorted);
  }
  std::vector<Subset> bases;
  for (const Subset& s : all_subsets(n, rank))
    if (!excl.count(s)) bases.push_back(s);
  return from_bases(n, rank, bases, name);
}

Matroid uniform(int rank, int n) {
  if (rank < 0 || rank > n) throw RankMismatch("uniform: rank out of range");
  return from_bases(n, rank, all_subsets(n, rank),
                    "U(" + std::to_string(rank) + "," + std::to_string(n) + ")");
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<Subset> bases;
  for (const Subset& x : a.bases())
    for (const Subset& y : b.bases()) {
      Subset s = x;
      for (int e : y) s.push_back(e + a.n());
      bases.push_back(std::move(s));
    }
  std::sort(bases.begin(), bases.end());
  return Matroid::unchecked(a.n() + b.n(), a.rank() + b.rank(),
                            std::move(bases));
}

Matroid parallel_extension(int rank, const std::vector<Subset>& blocks) {
  int n = 0;
  for (const Subset& blk : blocks) {
    if (blk.empty()) throw InvalidSizes("parallel class is empty");
    n += static_cast<int>(blk.size());
  }
  std::vector<int> block_of(n, -1);
  for (size_t c = 0; c < blocks.size(); ++c)
    for (int e : blocks[c]) {
      if (e < 0 || e >= n || block_of[e] != -1)
        throw InvalidSizes("parallel classes do not partition the ground set");
      block_of[e] = static_cast<int>(c);
    }
  if (rank > static_cast<int>(blocks.size()))
    throw InvalidSizes("fewer parallel classes than the rank");
  std::vector<Subset> bases;
  for (const Subset& s : all_subsets(n, rank)) {
    uint32_t used = 0;
    bool ok = true;
    for (int e : s) {
      uint32_t bit = uint32_t{1} << block_of[e];
      if (used & bit) {
        ok = false;
        break;
      }
      used |= bit;
    }
    if (ok) bases.push_back(s);
  }
  return Matroid::unchecked(n, rank, std::move(bases));
}

Matroid parallel_extension(int rank, int k, const std::vector<int>& class_sizes) {
  if (static_cast<int>(class_sizes.size()) != k)
    throw InvalidSizes("class size list length != number of classes");
  std::vector<Subset> blocks;
  int next = 0;
  for (int sz : class_sizes) {
    Subset blk;
    for (int i = 0; i < sz; ++i) blk.push_back(next++);
    blocks.push_back(std::move(blk));
  }
  return parallel_extension(rank, blocks);
}

namespace {

// Backtracking with element/pair basis-degree pruning; full recheck at leaf.
struct IsoSearch {
  const Matroid *a, *b;
  int n;
  std::vector<int> deg_a, deg_b;
  std::vector<std::vector<int>> pair_a, pair_b;
  std::vector<int> img;
  std::vector<bool> used;

  bool run() {
    if (extend(0)) return verify();
    return false;
  }

  bool extend(int e) {
    if (e == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[t] || deg_a[e] != deg_b[t]) continue;
      bool ok = true;
      for (int f = 0; f < e; ++f)
        if (pair_a[e][f] != pair_b[t][img[f]]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      img[e] = t;
      used[t] = true;
      if (extend(e + 1) && (e + 1 < n || verify())) return true;
      used[t] = false;
    }
    return false;
  }

  bool verify() const {
    for (const Subset& bas : a->bases()) {
      Subset m;
      for (int e : bas) m.push_back(img[e]);
      std::sort(m.begin(), m.end());
      if (!b->is_basis(m)) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a,
                                                 const Matroid& b) {
  if (a.n() != b.n() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size())
    return std::nullopt;
  int n = a.n();
  if (n > 10) throw InvalidArgument("isomorphism search limited to n <= 10");
  IsoSearch s;
  s.a = &a;
  s.b = &b;
  s.n = n;
  s.deg_a.assign(n, 0);
  s.deg_b.assign(n, 0);
  s.pair_a.assign(n, std::vector<int>(n, 0));
  s.pair_b.assign(n, std::vector<int>(n, 0));
  for (const Subset& bas : a.bases())
    for (size_t i = 0; i < bas.size(); ++i) {
      ++s.deg_a[bas[i]];
      for (size_t j = 0; j < i; ++j) {
        ++s.pair_a[bas[i]][bas[j]];
        ++s.pair_a[bas[j]][bas[i]];
      }
    }
  for (const Subset& bas : b.bases())
    for (size_t i = 0; i < bas.size(); ++i) {
      ++s.deg_b[bas[i]];
      for (size_t j = 0; j < i; ++j) {
        ++s.pair_b[bas[i]][bas[j]];
        ++s.pair_b[bas[j]][bas[i]];
      }
    }
  s.img.assign(n, -1);
  s.used.assign(n, false);
  if (s.run()) return s.img;
  return std::nullopt;
}

}  // namespace dressian
