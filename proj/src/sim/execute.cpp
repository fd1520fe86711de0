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
#include "vqeid/sim/execute.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "vqeid/common/error.hpp"
#include "vqeid/pauli/pauli_sum.hpp"

namespace vqeid::sim {

using circuits::Gate;
using circuits::GateKind;

namespace kernels {

// Complex products written out; keeps the hot loops free of the library's
// NaN-recovery path.
inline complex_t mul(complex_t a, complex_t b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

namespace {

complex_t y_phase(std::size_t ny) {
  static constexpr std::array<complex_t, 4> table{
      complex_t{1, 0}, complex_t{0, 1}, complex_t{-1, 0}, complex_t{0, -1}};
  return table[ny % 4];
}

// [[u00, u01], [u10, u11]] on qubit `t` where the control bits are set.
void single_qubit(std::span<complex_t> amps, std::size_t t,
                  basis_index ctrl, complex_t u00, complex_t u01,
                  complex_t u10, complex_t u11) {
  const std::size_t dim = amps.size();
  const std::size_t tb = std::size_t{1} << t;
  complex_t* a = amps.data();
  for (std::size_t base = 0; base < dim; base += 2 * tb) {
    for (std::size_t i = base; i < base + tb; ++i) {
      if ((i & ctrl) != ctrl) continue;
      const complex_t a0 = a[i];
      const complex_t a1 = a[i + tb];
      a[i] = mul(u00, a0) + mul(u01, a1);
      a[i + tb] = mul(u10, a0) + mul(u11, a1);
    }
  }
}

}  // namespace

void pauli_rotation(std::span<complex_t> amps, const circuits::RotationTerm& p,
                    basis_index ctrl_mask, double phi) {
  const std::size_t dim = amps.size();
  const double c = std::cos(phi / 2);
  const double s = std::sin(phi / 2);
  complex_t* a = amps.data();
  if (p.x_mask == 0) {
    const complex_t even{c, -s};  // exp(-i phi/2) on the +1 eigenspace
    const complex_t odd{c, s};
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & ctrl_mask) != ctrl_mask) continue;
      a[i] = mul(a[i], (std::popcount(i & p.z_mask) & 1U) ? odd : even);
    }
    return;
  }
  if (std::has_single_bit(p.x_mask) && (p.z_mask == 0 || p.z_mask == p.x_mask)) {
    const auto t = static_cast<std::size_t>(std::countr_zero(p.x_mask));
    if (p.z_mask == 0) {  // X
      single_qubit(amps, t, ctrl_mask, {c, 0}, {0, -s}, {0, -s}, {c, 0});
    } else {  // Y
      single_qubit(amps, t, ctrl_mask, {c, 0}, {-s, 0}, {s, 0}, {c, 0});
    }
    return;
  }
  const complex_t yph = y_phase(p.y_count);
  const basis_index pivot = p.x_mask & (~p.x_mask + 1);
  const complex_t mis{0.0, -s};
  const complex_t ph_even = mul(mis, yph);
  const complex_t ph_odd = -ph_even;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & pivot) || (i & ctrl_mask) != ctrl_mask) continue;
    const std::size_t j = i ^ p.x_mask;
    const complex_t ai = a[i];
    const complex_t aj = a[j];
    // P|j> = phase(j)|i>, P|i> = phase(i)|j>
    const complex_t pj = (std::popcount(j & p.z_mask) & 1U) ? ph_odd : ph_even;
    const complex_t pi = (std::popcount(i & p.z_mask) & 1U) ? ph_odd : ph_even;
    a[i] = c * ai + mul(pj, aj);
    a[j] = c * aj + mul(pi, ai);
  }
}

void hadamard(std::span<complex_t> amps, std::size_t q) {
  const double r = 1.0 / std::sqrt(2.0);
  single_qubit(amps, q, 0, {r, 0}, {r, 0}, {r, 0}, {-r, 0});
}

void pauli_x(std::span<complex_t> amps, std::size_t q) {
  const std::size_t dim = amps.size();
  const std::size_t tb = std::size_t{1} << q;
  for (std::size_t base = 0; base < dim; base += 2 * tb) {
    for (std::size_t i = base; i < base + tb; ++i) {
      std::swap(amps[i], amps[i + tb]);
    }
  }
}

void cz(std::span<complex_t> amps, std::size_t a, std::size_t b) {
  const basis_index m = (basis_index{1} << a) | (basis_index{1} << b);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & m) == m) amps[i] = -amps[i];
  }
}

void cnot(std::span<complex_t> amps, std::size_t control, std::size_t target) {
  const std::size_t dim = amps.size();
  const basis_index cb = basis_index{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t base = 0; base < dim; base += 2 * tb) {
    for (std::size_t i = base; i < base + tb; ++i) {
      if (i & cb) std::swap(amps[i], amps[i + tb]);
    }
  }
}

}  // namespace kernels

namespace {

void check_register(const Statevector& state, const Gate& gate) {
  for (auto q : gate.qubits) {
    VQEID_REQUIRE(q < state.n_qubits(),
                  "gate qubit " + std::to_string(q) + " outside a " +
                      std::to_string(state.n_qubits()) + "-qubit state");
  }
}

void apply_signed(Statevector& state, const Gate& gate,
                  std::span<const double> params, double sign) {
  check_register(state, gate);
  auto amps = state.mutable_amplitudes();
  const auto& q = gate.qubits;
  switch (gate.kind) {
    case GateKind::H:
      kernels::hadamard(amps, q[0]);
      return;
    case GateKind::X:
      kernels::pauli_x(amps, q[0]);
      return;
    case GateKind::CZ:
      kernels::cz(amps, q[0], q[1]);
      return;
    case GateKind::CNOT:
      kernels::cnot(amps, q[0], q[1]);
      return;
    default:
      break;
  }
  const double phi = sign * gate.phi(params);
  const auto gen = circuits::rotation_generator(gate);
  for (const auto& term : gen.terms) {
    kernels::pauli_rotation(amps, term, gen.ctrl_mask, phi);
  }
}

}  // namespace

void apply_gate(Statevector& state, const Gate& gate,
                std::span<const double> params) {
  apply_signed(state, gate, params, 1.0);
}

void apply_gate_inverse(Statevector& state, const Gate& gate,
                        std::span<const double> params) {
  apply_signed(state, gate, params, -1.0);
}

void run(Statevector& state, const circuits::Circuit& c,
         std::span<const double> params) {
  VQEID_REQUIRE(state.n_qubits() == c.n_qubits(),
                "circuit and state registers differ");
  VQEID_REQUIRE(params.size() == c.n_params(),
                "circuit expects " + std::to_string(c.n_params()) +
                    " parameters, got " + std::to_string(params.size()));
  for (const auto& g : c.gates()) apply_gate(state, g, params);
}

Statevector evolve(Statevector state, const circuits::Circuit& c,
                   std::span<const double> params) {
  run(state, c, params);
  return state;
}

double generator_overlap(const Statevector& bra, const Statevector& ket,
                         const Gate& gate) {
  const auto gen = circuits::rotation_generator(gate);
  const complex_t* l = bra.amplitudes().data();
  const complex_t* k = ket.amplitudes().data();
  const std::size_t dim = ket.dim();
  const basis_index ctrl = gen.ctrl_mask;
  double acc = 0.0;
  for (const auto& t : gen.terms) {
    if (t.x_mask == 0) {
      // Im sum conj(l_i) (+-1) k_i
      double im = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ctrl) != ctrl) continue;
        const double v = l[i].real() * k[i].imag() - l[i].imag() * k[i].real();
        im += (std::popcount(i & t.z_mask) & 1U) ? -v : v;
      }
      acc += im;
      continue;
    }
    if (std::has_single_bit(t.x_mask) &&
        (t.z_mask == 0 || t.z_mask == t.x_mask)) {
      const std::size_t tb = t.x_mask;
      double im = 0.0;
      for (std::size_t base = 0; base < dim; base += 2 * tb) {
        for (std::size_t i = base; i < base + tb; ++i) {
          if ((i & ctrl) != ctrl) continue;
          const complex_t l0 = l[i], l1 = l[i + tb];
          const complex_t k0 = k[i], k1 = k[i + tb];
          if (t.z_mask == 0) {
            // conj(l0) k1 + conj(l1) k0
            im += l0.real() * k1.imag() - l0.imag() * k1.real() +
                  l1.real() * k0.imag() - l1.imag() * k0.real();
          } else {
            // Y: conj(l0)(-i k1) + conj(l1)(i k0); imaginary part
            im += -(l0.real() * k1.real() + l0.imag() * k1.imag()) +
                  (l1.real() * k0.real() + l1.imag() * k0.imag());
          }
        }
      }
      acc += im;
      continue;
    }
    const pauli::PauliAction p(t.x_mask, t.z_mask, t.y_count);
    acc += pauli::pauli_inner(bra.amplitudes(), ket.amplitudes(), p, ctrl)
               .imag();
  }
  return gate.angle_scale * acc;
}

double adjoint_step(Statevector& ket, Statevector& bra, const Gate& gate,
                    std::span<const double> params) {
  if (!circuits::is_rotation(gate.kind)) {
    apply_gate_inverse(ket, gate, params);
    apply_gate_inverse(bra, gate, params);
    return 0.0;
  }
  const auto gen = circuits::rotation_generator(gate);
  const auto& t = gen.terms.front();
  const bool single = std::has_single_bit(t.x_mask) &&
                      (t.z_mask == 0 || t.z_mask == t.x_mask);
  if (gen.terms.size() != 1 || !(t.x_mask == 0 || single) ||
      ket.dim() != bra.dim()) {
    const double g = gate.slot ? generator_overlap(bra, ket, gate) : 0.0;
    apply_gate_inverse(ket, gate, params);
    apply_gate_inverse(bra, gate, params);
    return g;
  }
  check_register(ket, gate);
  const double phi = -gate.phi(params);
  const double c = std::cos(phi / 2);
  const double s = std::sin(phi / 2);
  complex_t* k = ket.mutable_amplitudes().data();
  complex_t* l = bra.mutable_amplitudes().data();
  const std::size_t dim = ket.dim();
  const basis_index ctrl = gen.ctrl_mask;
  double im = 0.0;
  if (t.x_mask == 0) {
    const complex_t even{c, -s};
    const complex_t odd{c, s};
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & ctrl) != ctrl) continue;
      const bool par = std::popcount(i & t.z_mask) & 1U;
      const double v = l[i].real() * k[i].imag() - l[i].imag() * k[i].real();
      im += par ? -v : v;
      const complex_t f = par ? odd : even;
      k[i] = kernels::mul(k[i], f);
      l[i] = kernels::mul(l[i], f);
    }
    return gate.angle_scale * im;
  }
  const std::size_t tb = t.x_mask;
  const bool is_y = t.z_mask != 0;
  for (std::size_t base = 0; base < dim; base += 2 * tb) {
    for (std::size_t i = base; i < base + tb; ++i) {
      if ((i & ctrl) != ctrl) continue;
      const complex_t l0 = l[i], l1 = l[i + tb];
      const complex_t k0 = k[i], k1 = k[i + tb];
      if (!is_y) {
        im += l0.real() * k1.imag() - l0.imag() * k1.real() +
              l1.real() * k0.imag() - l1.imag() * k0.real();
        // [[c, -is], [-is, c]]
        k[i] = {c * k0.real() + s * k1.imag(), c * k0.imag() - s * k1.real()};
        k[i + tb] = {c * k1.real() + s * k0.imag(),
                     c * k1.imag() - s * k0.real()};
        l[i] = {c * l0.real() + s * l1.imag(), c * l0.imag() - s * l1.real()};
        l[i + tb] = {c * l1.real() + s * l0.imag(),
                     c * l1.imag() - s * l0.real()};
      } else {
        im += -(l0.real() * k1.real() + l0.imag() * k1.imag()) +
              (l1.real() * k0.real() + l1.imag() * k0.imag());
        // [[c, -s], [s, c]]
        k[i] = c * k0 - s * k1;
        k[i + tb] = s * k0 + c * k1;
        l[i] = c * l0 - s * l1;
        l[i + tb] = s * l0 + c * l1;
      }
    }
  }
  return gate.angle_scale * im;
}

}  // namespace vqeid::sim
