/* Copyright 2026 The vqeid Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vqeid/common/types.hpp"
#include "vqeid/pauli/pauli_sum.hpp"

namespace vqeid::models {

struct FermionOp {
  std::size_t mode = 0;
  bool creation = false;
};

/// coeff * op_0 op_1 ... (leftmost acts last). An empty product is the
/// identity.
struct FermionTerm {
  complex_t coeff{1.0, 0.0};
  std::vector<FermionOp> ops;
};

/// Jordan-Wigner image with c_j^dag = (prod_{k<j} Z_k)(X_j - i Y_j)/2, so an
/// occupied mode is bit value 1 and n_j = (I - Z_j)/2. The sum must be
/// Hermitian; an imaginary residue above 1e-12 throws InputError.
pauli::PauliSum jw_map(std::size_t n_modes, std::span<const FermionTerm> terms);

FermionTerm number_term(std::size_t mode, complex_t coeff = 1.0);
/// coeff (c_i^dag c_j + c_j^dag c_i).
std::vector<FermionTerm> hopping_terms(std::size_t i, std::size_t j,
                                       double coeff);

/// -t sum_<ij>,s (c_is^dag c_js + h.c.) + U sum_i (n_iu - 1/2)(n_id - 1/2)
/// with mode i for spin up and i + sites for spin down, open chain.
std::vector<FermionTerm> hubbard_fermionic(std::size_t sites, double t,
                                           double U);

}  // namespace vqeid::models
