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

#include <optional>
#include <span>
#include <vector>

#include "vqeid/common/types.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid::sim {

/// Lowest eigenvalue of H and an orthonormal basis of its eigenspace.
struct GroundTruth {
  double energy = 0.0;
  std::vector<Statevector> subspace;
  double degeneracy_tolerance = 0.0;

  std::size_t degeneracy() const { return subspace.size(); }
};

/// Default degeneracy window: 1e-8 times the spectral-range bound
/// 2 * sum_k |c_k|.
double default_degeneracy_tolerance(const pauli::PauliSum& h);

/// Dense diagonalisation (LAPACK ?syevr / ?heevr, lowest eigenpairs only).
/// The eigenspace collects every eigenvector within `degeneracy_tolerance`
/// of the minimum. Refuses n > kMaxDenseQubits.
GroundTruth exact_ground(const pauli::PauliSum& h,
                         std::optional<double> degeneracy_tolerance = {});

/// As exact_ground, restricted to span{|i> : i in sector}. H must leave the
/// sector invariant; the returned vectors live in the full register.
GroundTruth exact_ground_in_sector(
    const pauli::PauliSum& h, std::span<const basis_index> sector,
    std::optional<double> degeneracy_tolerance = {});

/// sum_v |<v|psi>|^2 over the ground subspace.
double fidelity(const Statevector& state, const GroundTruth& truth);

}  // namespace vqeid::sim
