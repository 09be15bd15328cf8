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

#ifndef DRESSIAN_PIPELINE_HPP_
#define DRESSIAN_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "dressian/matroid.hpp"
#include "dressian/prevariety.hpp"
#include "dressian/reduction.hpp"

namespace dressian {

struct ComputeOptions {
  bool use_reduction = true;
  // also transport every cell back to full Plücker coordinates (the lifted
  // complex); skip for large fans where only f-vector/ray data is needed
  bool lift = true;
  std::optional<uint64_t> order_seed;  // shuffles the elimination order
  PrevarietyOptions prevariety;
};

// End-to-end Dressian computation for one matroid.
//
// The reduced prevariety is computed over dense coordinates (one column per
// surviving variable, mapping dense_to_var); free and eliminated variables
// re-enter when cells are lifted: free variables are unconstrained lineality
// directions and each chain entry contributes the equality
// w_eliminated = sum_e e * w_v.  Cell argmin types always refer to the
// reduced system's polynomials/inequalities.
struct DressianResult {
  int num_vars = 0;  // one per basis of the matroid
  ReducedSystem reduction;
  std::vector<int> dense_to_var;
  PrevarietyComplex complex;  // over dense coordinates
  PrevarietyComplex lifted;   // full ambient; filled when options.lift
  // lineality dimension of the Dressian in full Plücker space; equals
  // complex lineality + (unconstrained variables) - (chain equalities), and
  // lifted.lineality.dim() when the lift is computed
  int full_lineality_dim = 0;
};

DressianResult compute_dressian(const Matroid& m,
                                const ComputeOptions& options = {});

// Remap a dense-coordinate cone into `ambient` columns via dense_to_var and
// append the chain's equality rows.
Cone lift_cone(const Cone& c, const std::vector<int>& dense_to_var,
               int ambient, const ReducedSystem& sys);

// Same transport for a whole complex: lift every cell, recompute dimensions,
// lineality, f-vector, and rays in the full ambient space.
PrevarietyComplex lift_complex(const PrevarietyComplex& dense,
                               const std::vector<int>& dense_to_var,
                               int ambient, const ReducedSystem& sys,
                               int threads = 1);

}  // namespace dressian

#endif  // DRESSIAN_PIPELINE_HPP_
