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
#include "vqeid/vqe/objective.hpp"

#include <vector>

#include "vqeid/common/error.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/execute.hpp"

namespace vqeid::vqe {

namespace {

void check(const circuits::Circuit& u, const sim::Statevector& input,
           const pauli::PauliSum& h, std::span<const double> theta) {
  VQEID_REQUIRE(theta.size() == u.n_params(),
                "circuit expects " + std::to_string(u.n_params()) +
                    " parameters, got " + std::to_string(theta.size()));
  VQEID_REQUIRE(input.n_qubits() == u.n_qubits() &&
                    h.n_qubits() == u.n_qubits(),
                "circuit, input state and Hamiltonian registers differ");
}

}  // namespace

double cost(const circuits::Circuit& u, const sim::Statevector& input,
            const pauli::PauliSum& h, std::span<const double> theta) {
  check(u, input, h, theta);
  return sim::expectation(sim::evolve(input, u, theta), h);
}

std::vector<double> gradient(const circuits::Circuit& u,
                             const sim::Statevector& input,
                             const pauli::PauliSum& h,
                             std::span<const double> theta) {
  return evaluate(u, input, h, theta, GradientMode::adjoint).grad;
}

std::vector<double> gradient_fd(const circuits::Circuit& u,
                                const sim::Statevector& input,
                                const pauli::PauliSum& h,
                                std::span<const double> theta, double step) {
  check(u, input, h, theta);
  VQEID_REQUIRE(step > 0.0, "finite-difference step must be positive");
  std::vector<double> x(theta.begin(), theta.end());
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double x0 = x[k];
    x[k] = x0 + step;
    const double up = cost(u, input, h, x);
    x[k] = x0 - step;
    const double dn = cost(u, input, h, x);
    x[k] = x0;
    g[k] = (up - dn) / (2.0 * step);
  }
  return g;
}

Evaluation evaluate(const circuits::Circuit& u, const sim::Statevector& input,
                    const pauli::PauliSum& h, std::span<const double> theta,
                    GradientMode mode, double fd_step) {
  check(u, input, h, theta);
  Evaluation ev;
  ev.state = sim::evolve(input, u, theta);
  if (mode == GradientMode::finite_difference) {
    ev.energy = sim::expectation(ev.state, h);
    ev.grad = gradient_fd(u, input, h, theta, fd_step);
    return ev;
  }
  // lambda = H psi, then both vectors are walked back through the circuit.
  sim::Statevector psi = ev.state;
  sim::Statevector lambda = psi;
  pauli::apply_sum(h, psi.amplitudes(), lambda.mutable_amplitudes());
  ev.energy = psi.inner(lambda).real();
  ev.grad.assign(u.n_params(), 0.0);
  const auto& gates = u.gates();
  for (std::size_t k = gates.size(); k-- > 0;) {
    const auto& g = gates[k];
    if (k == 0) {
      if (g.slot) ev.grad[*g.slot] += sim::generator_overlap(lambda, psi, g);
      break;
    }
    const double d = sim::adjoint_step(psi, lambda, g, theta);
    if (g.slot) ev.grad[*g.slot] += d;
  }
  return ev;
}

}  // namespace vqeid::vqe
