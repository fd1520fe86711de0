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

#include "vqeid/circuits/circuit.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid::vqe {

enum class GradientMode { adjoint, finite_difference };

/// E(theta) = <in| U^dag(theta) H U(theta) |in>.
double cost(const circuits::Circuit& u, const sim::Statevector& input,
            const pauli::PauliSum& h, std::span<const double> theta);

/// Reverse-mode gradient; shared slots accumulate every gate bound to them.
std::vector<double> gradient(const circuits::Circuit& u,
                             const sim::Statevector& input,
                             const pauli::PauliSum& h,
                             std::span<const double> theta);

/// Central differences with the given step.
std::vector<double> gradient_fd(const circuits::Circuit& u,
                                const sim::Statevector& input,
                                const pauli::PauliSum& h,
                                std::span<const double> theta,
                                double step = 1e-6);

struct Evaluation {
  double energy = 0.0;
  std::vector<double> grad;
  sim::Statevector state;  // U(theta)|in>
};

/// Energy, gradient and output state in one forward/backward pass.
Evaluation evaluate(const circuits::Circuit& u, const sim::Statevector& input,
                    const pauli::PauliSum& h, std::span<const double> theta,
                    GradientMode mode = GradientMode::adjoint,
                    double fd_step = 1e-6);

}  // namespace vqeid::vqe
