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
#include "vqeid/circuits/builders.hpp"


#include <tuple>
#include "vqeid/common/error.hpp"
#include "vqeid/common/lattice.hpp"

namespace vqeid::circuits {

std::string_view to_string(ParameterSharing s) {
  return s == ParameterSharing::shared ? "shared" : "per_gate";
}

namespace {

// Hands out slots for one commuting group: a single shared slot, or a fresh
// slot per gate.
class GroupSlots {
 public:
  GroupSlots(Circuit& c, ParameterSharing sharing)
      : c_(c), sharing_(sharing) {}
  void begin_group() {
    if (sharing_ == ParameterSharing::shared) shared_ = c_.new_slot();
  }
  std::size_t next() {
    return sharing_ == ParameterSharing::shared ? shared_ : c_.new_slot();
  }

 private:
  Circuit& c_;
  ParameterSharing sharing_;
  std::size_t shared_ = 0;
};

void hadamard_layer(Circuit& c) {
  for (std::size_t q = 0; q < c.n_qubits(); ++q) {
    c.push(Gate::fixed(GateKind::H, {q}));
  }
}

void bond_group(Circuit& c, GroupSlots& slots, GateKind kind,
                const std::vector<Bond>& bonds, double scale = 1.0) {
  if (bonds.empty()) return;
  slots.begin_group();
  for (const Bond& b : bonds) {
    c.push(Gate::param(kind, {b.a, b.b}, slots.next(), scale));
  }
}

// RX(theta) = exp(-i theta X) in the HVA field layers.
void field_group(Circuit& c, GroupSlots& slots) {
  slots.begin_group();
  for (std::size_t q = 0; q < c.n_qubits(); ++q) {
    c.push(Gate::param(GateKind::RX, {q}, slots.next(), 2.0));
  }
}

}  // namespace

Circuit build_hea(std::size_t n, std::size_t layers, Entangler entangler) {
  VQEID_REQUIRE(n >= 2, "HEA needs at least two qubits");
  VQEID_REQUIRE(layers >= 1, "HEA needs at least one layer");
  Circuit c(n);
  const auto bonds = chain_bonds(n, entangler == Entangler::ring);
  for (std::size_t l = 0; l < layers; ++l) {
    for (std::size_t q = 0; q < n; ++q) {
      c.push(Gate::param(GateKind::RY, {q}, c.new_slot()));
      c.push(Gate::param(GateKind::RZ, {q}, c.new_slot()));
    }
    for (const Bond& b : bonds) c.push(Gate::fixed(GateKind::CZ, {b.a, b.b}));
  }
  c.set_layers(layers);
  return c;
}

Circuit build_hva_tfim(const TfimGeometry& geometry, std::size_t layers,
                       ParameterSharing sharing) {
  VQEID_REQUIRE(layers >= 1, "HVA needs at least one layer");
  std::vector<Bond> first, second;
  std::size_t n = 0;
  if (const auto* ring = std::get_if<Ring1D>(&geometry)) {
    VQEID_REQUIRE(ring->sites >= 2 && ring->sites % 2 == 0,
                  "1D TFIM HVA needs an even ring length for the odd/even "
                  "bond partition");
    n = ring->sites;
    std::tie(first, second) = odd_even_bonds(chain_bonds(n, true));
  } else {
    const auto& t = std::get<Torus2D>(geometry);
    VQEID_REQUIRE(t.rows >= 1 && t.cols >= 1 && t.rows * t.cols >= 2,
                  "2D TFIM HVA needs at least two sites");
    n = t.rows * t.cols;
    auto grid = grid_bonds(t.rows, t.cols, true);
    first = std::move(grid.horizontal);
    second = std::move(grid.vertical);
  }
  Circuit c(n);
  GroupSlots slots(c, sharing);
  hadamard_layer(c);
  for (std::size_t l = 0; l < layers; ++l) {
    bond_group(c, slots, GateKind::UZZ, first);
    bond_group(c, slots, GateKind::UZZ, second);
    field_group(c, slots);
  }
  c.set_layers(layers);
  return c;
}

Circuit build_hva_cluster(std::size_t n, std::size_t layers,
                          ParameterSharing sharing) {
  VQEID_REQUIRE(n >= 3, "cluster-Ising HVA needs at least three qubits");
  VQEID_REQUIRE(layers >= 1, "HVA needs at least one layer");
  // Odd group: odd 1-based i in [1, n-1]; even group: even i in [2, n-2].
  std::vector<Bond> odd, even;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    if (i % 2 == 1) odd.push_back({i - 1, i});
    if (i % 2 == 0 && i + 2 <= n) even.push_back({i - 1, i});
  }
  Circuit c(n);
  GroupSlots slots(c, sharing);
  hadamard_layer(c);
  for (std::size_t l = 0; l < layers; ++l) {
    slots.begin_group();
    for (std::size_t i = 0; i + 2 < n; ++i) {
      c.push(Gate::param(GateKind::UZXZ, {i, i + 1, i + 2}, slots.next()));
    }
    bond_group(c, slots, GateKind::UXX, odd);
    bond_group(c, slots, GateKind::UXX, even);
    field_group(c, slots);
  }
  c.set_layers(layers);
  return c;
}

Circuit build_hva_hubbard(std::size_t sites, std::size_t layers,
                          ParameterSharing sharing) {
  VQEID_REQUIRE(sites >= 2, "Hubbard HVA needs at least two sites");
  VQEID_REQUIRE(layers >= 1, "HVA needs at least one layer");
  const std::size_t n = 2 * sites;
  auto [odd, even] = odd_even_bonds(chain_bonds(sites, false));
  auto both_registers = [sites](const std::vector<Bond>& bonds) {
    std::vector<Bond> out = bonds;
    for (const Bond& b : bonds) out.push_back({b.a + sites, b.b + sites});
    return out;
  };
  std::vector<Bond> onsite;
  for (std::size_t i = 0; i < sites; ++i) onsite.push_back({i, i + sites});
  const auto odd_both = both_registers(odd);
  const auto even_both = both_registers(even);

  Circuit c(n);
  GroupSlots slots(c, sharing);
  for (std::size_t l = 0; l < layers; ++l) {
    // exp(-i (theta/4) ZZ) is UZZ at half the angle.
    bond_group(c, slots, GateKind::UZZ, onsite, 0.5);
    bond_group(c, slots, GateKind::UXY, odd_both);
    bond_group(c, slots, GateKind::UXY, even_both);
  }
  c.set_layers(layers);
  return c;
}

}  // namespace vqeid::circuits
