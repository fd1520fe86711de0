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
#include "vqeid/circuits/decompose.hpp"

#include <numbers>

#include "vqeid/common/error.hpp"

namespace vqeid::circuits {

namespace {
// Copy of `g`'s angle binding onto a different kind / qubit list.
Gate rebind(const Gate& g, GateKind kind, std::vector<std::size_t> qubits,
            double scale_factor = 1.0) {
  Gate out = g;
  out.kind = kind;
  out.qubits = std::move(qubits);
  out.angle_scale = g.angle_scale * scale_factor;
  return out;
}

Gate cnot(std::size_t c, std::size_t t) {
  return Gate::fixed(GateKind::CNOT, {c, t});
}
}  // namespace

std::vector<Gate> decompose_zxz(const Gate& zxz) {
  VQEID_REQUIRE(zxz.kind == GateKind::UZXZ && zxz.qubits.size() == 3,
                "decompose_zxz expects a UZXZ gate");
  const std::size_t a = zxz.qubits[0], b = zxz.qubits[1], c = zxz.qubits[2];
  return {
      Gate::fixed(GateKind::CZ, {a, b}), Gate::fixed(GateKind::CZ, {c, b}),
      rebind(zxz, GateKind::RX, {b}),    Gate::fixed(GateKind::CZ, {a, b}),
      Gate::fixed(GateKind::CZ, {c, b}),
  };
}

std::vector<Gate> expand(const Gate& g) {
  switch (g.kind) {
    case GateKind::UXX: {
      const std::size_t a = g.qubits[0], b = g.qubits[1];
      return {cnot(a, b), rebind(g, GateKind::RX, {a}), cnot(a, b)};
    }
    case GateKind::UXY: {
      const std::size_t a = g.qubits[0], b = g.qubits[1];
      constexpr double half_pi = std::numbers::pi / 2;
      // YY = (S (x) S) XX (S (x) S)^dag, S ~ RZ(pi/2).
      return {
          cnot(a, b),
          rebind(g, GateKind::RX, {a}),
          cnot(a, b),
          Gate::angle(GateKind::RZ, {a}, -half_pi),
          Gate::angle(GateKind::RZ, {b}, -half_pi),
          cnot(a, b),
          rebind(g, GateKind::RX, {a}),
          cnot(a, b),
          Gate::angle(GateKind::RZ, {a}, half_pi),
          Gate::angle(GateKind::RZ, {b}, half_pi),
      };
    }
    case GateKind::UZXZ:
      return decompose_zxz(g);
    case GateKind::CCRY:
    case GateKind::CCRZ: {
      const GateKind single =
          g.kind == GateKind::CCRY ? GateKind::CRY : GateKind::CRZ;
      const std::size_t c1 = g.qubits[0], c2 = g.qubits[1], t = g.qubits[2];
      return {
          rebind(g, single, {c2, t}, 0.5),  cnot(c1, c2),
          rebind(g, single, {c2, t}, -0.5), cnot(c1, c2),
          rebind(g, single, {c1, t}, 0.5),
      };
    }
    default:
      return {g};
  }
}

Circuit expand_composites(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (std::size_t s = 0; s < c.n_params(); ++s) out.new_slot();
  for (const auto& g : c.gates()) {
    for (auto& e : expand(g)) out.push(std::move(e));
  }
  out.set_layers(c.layers());
  return out;
}

}  // namespace vqeid::circuits
