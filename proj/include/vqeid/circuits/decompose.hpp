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
#include <vector>

#include "vqeid/circuits/circuit.hpp"

namespace vqeid::circuits {

/// exp(-i (phi/2) Z_i X_{i+1} Z_{i+2}) as
///   CZ(i,i+1) CZ(i+2,i+1) RX_{i+1}(phi) CZ(i,i+1) CZ(i+2,i+1),
/// carrying the parameter binding of `zxz` onto the RX.
std::vector<Gate> decompose_zxz(const Gate& zxz);

/// Hardware-level expansion of a composite gate into CNOT/CZ, controlled
/// rotations and single-qubit gates:
///   UXX  -> CNOT RX CNOT
///   UXY  -> UXX part, then RZ-conjugated UXX part for YY
///   UZXZ -> decompose_zxz
///   CCRY/CCRZ -> CR(V) CNOT CR(V^dag) CNOT CR(V), V = half-angle rotation
/// UZZ is treated as a native two-qubit interaction. Other kinds expand to
/// themselves. MCRY/MCRZ are not expanded (see count_resources).
std::vector<Gate> expand(const Gate& g);

/// Applies `expand` to every gate.
Circuit expand_composites(const Circuit& c);

}  // namespace vqeid::circuits
