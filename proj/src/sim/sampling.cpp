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
#include "vqeid/sim/sampling.hpp"

#include <algorithm>
#include <random>

#include "vqeid/common/error.hpp"

namespace vqeid::sim {

double expectation_sampled(const Statevector& state, const pauli::PauliSum& h,
                           std::size_t shots, Rng& rng) {
  VQEID_REQUIRE(shots > 0, "shot count must be positive");
  VQEID_REQUIRE(state.n_qubits() == h.n_qubits(),
                "state and operator registers differ");
  double total = 0.0;
  for (const auto& term : h.terms()) {
    if (term.string.is_identity()) {
      total += term.coeff;
      continue;
    }
    const pauli::PauliAction p(term.string);
    const double exact =
        pauli::pauli_inner(state.amplitudes(), state.amplitudes(), p).real();
    const double plus = std::clamp((1.0 + exact) / 2.0, 0.0, 1.0);
    std::binomial_distribution<std::size_t> draw(shots, plus);
    const auto k = static_cast<double>(draw(rng));
    const auto s = static_cast<double>(shots);
    total += term.coeff * (2.0 * k - s) / s;
  }
  return total;
}

}  // namespace vqeid::sim
