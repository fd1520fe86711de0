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

#include "vqeid/common/rng.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid::sim {

/// Shot-based estimate of <psi|H|psi>. Each non-identity term is measured in
/// its own eigenbasis with `shots` repetitions; outcomes are +-1 draws with
/// P(+1) = (1 + <P>) / 2, which is the exact outcome law of rotating the
/// state into the term's basis and reading the parity of its support.
double expectation_sampled(const Statevector& state, const pauli::PauliSum& h,
                           std::size_t shots, Rng& rng);

}  // namespace vqeid::sim
