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
#include "vqeid/circuits/gate.hpp"

#include <array>
#include <utility>

#include "vqeid/common/error.hpp"

namespace vqeid::circuits {

namespace {
constexpr std::array<std::pair<GateKind, std::string_view>, 17> kNames{{
    {GateKind::H, "H"},       {GateKind::X, "X"},
    {GateKind::CZ, "CZ"},     {GateKind::CNOT, "CNOT"},
    {GateKind::RX, "RX"},     {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},     {GateKind::CRY, "CRY"},
    {GateKind::CRZ, "CRZ"},   {GateKind::CCRY, "CCRY"},
    {GateKind::CCRZ, "CCRZ"}, {GateKind::MCRY, "MCRY"},
    {GateKind::MCRZ, "MCRZ"}, {GateKind::UZZ, "UZZ"},
    {GateKind::UXX, "UXX"},   {GateKind::UXY, "UXY"},
    {GateKind::UZXZ, "UZXZ"},
}};

basis_index bit(std::size_t q) { return basis_index{1} << q; }
}  // namespace

std::string_view to_string(GateKind k) {
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view s) {
  for (const auto& [kind, name] : kNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

bool is_rotation(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::CZ:
    case GateKind::CNOT:
      return false;
    default:
      return true;
  }
}

std::size_t arity(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return 1;
    case GateKind::CZ:
    case GateKind::CNOT:
    case GateKind::CRY:
    case GateKind::CRZ:
    case GateKind::UZZ:
    case GateKind::UXX:
    case GateKind::UXY:
      return 2;
    case GateKind::CCRY:
    case GateKind::CCRZ:
    case GateKind::UZXZ:
      return 3;
    case GateKind::MCRY:
    case GateKind::MCRZ:
      return 0;
  }
  return 0;
}

std::size_t control_count(GateKind k, std::size_t n_qubits_in_gate) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CRY:
    case GateKind::CRZ:
    case GateKind::CCRY:
    case GateKind::CCRZ:
    case GateKind::MCRY:
    case GateKind::MCRZ:
      return n_qubits_in_gate - 1;
    default:
      return 0;
  }
}

Gate Gate::fixed(GateKind kind, std::vector<std::size_t> qubits) {
  VQEID_REQUIRE(!is_rotation(kind), "rotation gates need an angle or slot");
  return Gate{kind, std::move(qubits), std::nullopt, std::nullopt, 1.0};
}

Gate Gate::param(GateKind kind, std::vector<std::size_t> qubits,
                 std::size_t slot, double angle_scale) {
  VQEID_REQUIRE(is_rotation(kind), "only rotation gates take parameters");
  return Gate{kind, std::move(qubits), slot, std::nullopt, angle_scale};
}

Gate Gate::angle(GateKind kind, std::vector<std::size_t> qubits, double angle,
                 double angle_scale) {
  VQEID_REQUIRE(is_rotation(kind), "only rotation gates take angles");
  return Gate{kind, std::move(qubits), std::nullopt, angle, angle_scale};
}

double Gate::phi(std::span<const double> params) const {
  if (slot) {
    VQEID_REQUIRE(*slot < params.size(),
                  "parameter slot " + std::to_string(*slot) +
                      " unbound (only " + std::to_string(params.size()) +
                      " parameters supplied)");
    return angle_scale * params[*slot];
  }
  VQEID_REQUIRE(fixed_angle.has_value(), "rotation gate without an angle");
  return angle_scale * *fixed_angle;
}

RotationGenerator rotation_generator(const Gate& g) {
  VQEID_REQUIRE(is_rotation(g.kind), "gate has no rotation generator");
  const auto& q = g.qubits;
  RotationGenerator gen;
  auto controlled = [&](bool y_axis) {
    for (std::size_t k = 0; k + 1 < q.size(); ++k) gen.ctrl_mask |= bit(q[k]);
    const basis_index t = bit(q.back());
    gen.terms.push_back(y_axis ? RotationTerm{t, t, 1} : RotationTerm{0, t, 0});
  };
  switch (g.kind) {
    case GateKind::RX:
      gen.terms.push_back({bit(q[0]), 0, 0});
      break;
    case GateKind::RY:
      gen.terms.push_back({bit(q[0]), bit(q[0]), 1});
      break;
    case GateKind::RZ:
      gen.terms.push_back({0, bit(q[0]), 0});
      break;
    case GateKind::CRY:
    case GateKind::CCRY:
    case GateKind::MCRY:
      controlled(true);
      break;
    case GateKind::CRZ:
    case GateKind::CCRZ:
    case GateKind::MCRZ:
      controlled(false);
      break;
    case GateKind::UZZ:
      gen.terms.push_back({0, bit(q[0]) | bit(q[1]), 0});
      break;
    case GateKind::UXX:
      gen.terms.push_back({bit(q[0]) | bit(q[1]), 0, 0});
      break;
    case GateKind::UXY: {
      const basis_index m = bit(q[0]) | bit(q[1]);
      gen.terms.push_back({m, 0, 0});
      gen.terms.push_back({m, m, 2});
      break;
    }
    case GateKind::UZXZ:
      gen.terms.push_back({bit(q[1]), bit(q[0]) | bit(q[2]), 0});
      break;
    default:
      break;
  }
  return gen;
}

}  // namespace vqeid::circuits
