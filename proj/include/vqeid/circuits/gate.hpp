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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqeid/common/types.hpp"

namespace vqeid::circuits {

/// Gate vocabulary. Every rotation kind is exp(-i (phi/2) P) for its Pauli
/// generator P, with phi = angle_scale * (parameter or fixed angle):
///
///   RX/RY/RZ          P = X/Y/Z on the target
///   CRY/CRZ           controlled RY/RZ, one control
///   CCRY/CCRZ         two controls
///   MCRY/MCRZ         three or more controls
///   UZZ, UXX          P = ZZ, XX
///   UXY               P = XX + YY (the two terms commute)
///   UZXZ              P = Z X Z on (q0, q1, q2)
///
/// Controls always come first in `qubits` and fire on |1>; anti-controls are
/// built by X conjugation.
enum class GateKind {
  H,
  X,
  CZ,
  CNOT,
  RX,
  RY,
  RZ,
  CRY,
  CRZ,
  CCRY,
  CCRZ,
  MCRY,
  MCRZ,
  UZZ,
  UXX,
  UXY,
  UZXZ,
};

std::string_view to_string(GateKind k);
std::optional<GateKind> parse_gate_kind(std::string_view s);

bool is_rotation(GateKind k);
/// Qubit count for fixed-arity kinds; 0 for MCRY/MCRZ (>= 4 qubits).
std::size_t arity(GateKind k);
/// Number of control qubits carried by a (multi-)controlled rotation.
std::size_t control_count(GateKind k, std::size_t n_qubits_in_gate);

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> qubits;
  std::optional<std::size_t> slot;
  std::optional<double> fixed_angle;
  double angle_scale = 1.0;

  static Gate fixed(GateKind kind, std::vector<std::size_t> qubits);
  static Gate param(GateKind kind, std::vector<std::size_t> qubits,
                    std::size_t slot, double angle_scale = 1.0);
  static Gate angle(GateKind kind, std::vector<std::size_t> qubits,
                    double angle, double angle_scale = 1.0);

  /// Effective rotation angle phi. Throws when the slot is unbound.
  double phi(std::span<const double> params) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Pauli generator of a rotation gate: U = prod_k exp(-i (phi/2) P_k) on the
/// subspace where every `ctrl_mask` bit is set.
struct RotationTerm {
  basis_index x_mask = 0;
  basis_index z_mask = 0;
  std::size_t y_count = 0;
};

struct RotationGenerator {
  basis_index ctrl_mask = 0;
  std::vector<RotationTerm> terms;
};

RotationGenerator rotation_generator(const Gate& g);

}  // namespace vqeid::circuits
