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
#include <string_view>
#include <variant>

#include "vqeid/circuits/circuit.hpp"

namespace vqeid::circuits {

enum class Entangler { ring, chain };

/// How HVA gates map onto parameter slots: one slot per commuting group per
/// layer, or one slot per gate.
enum class ParameterSharing { shared, per_gate };

std::string_view to_string(ParameterSharing s);

struct Ring1D {
  std::size_t sites = 0;
};
struct Torus2D {
  std::size_t rows = 0;
  std::size_t cols = 0;
};
using TfimGeometry = std::variant<Ring1D, Torus2D>;

/// Hardware-efficient ansatz: per layer RY then RZ on every qubit (distinct
/// slots), then a CZ ladder (ring or chain). 2 n p parameters.
Circuit build_hea(std::size_t n, std::size_t layers, Entangler entangler);

/// TFIM HVA: Hadamard layer, then per layer UZZ on odd bonds, UZZ on even
/// bonds and RX on every site with RX(theta) = exp(-i theta X). On the torus
/// the odd group holds horizontal bonds and the even group vertical bonds.
Circuit build_hva_tfim(const TfimGeometry& geometry, std::size_t layers,
                       ParameterSharing sharing = ParameterSharing::shared);

/// Cluster-Ising HVA on an open chain: Hadamard layer, then per layer UZXZ on
/// every triple, UXX on odd bonds, UXX on even bonds, RX on every site.
Circuit build_hva_cluster(std::size_t n, std::size_t layers,
                          ParameterSharing sharing = ParameterSharing::shared);

/// Fermi-Hubbard HVA over 2N qubits (spin-up i, spin-down i + N): per layer
/// on-site UZZ(theta) = exp(-i (theta/4) ZZ) on (i, i+N), then UXY on odd and
/// even hopping bonds of both registers. The reference occupation is not part
/// of the circuit.
Circuit build_hva_hubbard(std::size_t sites, std::size_t layers,
                          ParameterSharing sharing = ParameterSharing::shared);

}  // namespace vqeid::circuits
