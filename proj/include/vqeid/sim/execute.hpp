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

#include <span>

#include "vqeid/circuits/circuit.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid::sim {

/// In-place strided kernels. Nothing here materialises a 2^n x 2^n matrix.
namespace kernels {

/// exp(-i (phi/2) P) on the subspace where all `ctrl_mask` bits are set.
/// The control bits must be disjoint from P's support.
void pauli_rotation(std::span<complex_t> amps, const circuits::RotationTerm& p,
                    basis_index ctrl_mask, double phi);
void hadamard(std::span<complex_t> amps, std::size_t q);
void pauli_x(std::span<complex_t> amps, std::size_t q);
void cz(std::span<complex_t> amps, std::size_t a, std::size_t b);
void cnot(std::span<complex_t> amps, std::size_t control, std::size_t target);

}  // namespace kernels

void apply_gate(Statevector& state, const circuits::Gate& gate,
                std::span<const double> params);
/// Applies gate^dagger.
void apply_gate_inverse(Statevector& state, const circuits::Gate& gate,
                        std::span<const double> params);

/// Runs every gate of `c` in order.
void run(Statevector& state, const circuits::Circuit& c,
         std::span<const double> params);

/// Value-returning convenience over `run`.
Statevector evolve(Statevector state, const circuits::Circuit& c,
                   std::span<const double> params);

/// 2 Im <bra| G |ket> with G = (angle_scale / 2) sum_k Pi_ctrl P_k the
/// generator of a rotation gate. With bra = U_later^dag H psi and ket the
/// state just after the gate, this is the gate's share of dE/dtheta.
double generator_overlap(const Statevector& bra, const Statevector& ket,
                         const circuits::Gate& gate);

/// One step of the reverse sweep: returns generator_overlap(bra, ket, gate)
/// (zero for fixed gates) and then applies gate^dagger to both states.
/// Single-term rotations do this in one pass over the amplitudes.
double adjoint_step(Statevector& ket, Statevector& bra,
                    const circuits::Gate& gate, std::span<const double> params);

}  // namespace vqeid::sim
