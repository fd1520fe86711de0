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
#include <string>
#include <string_view>
#include <vector>

#include "vqeid/circuits/gate.hpp"

namespace vqeid::circuits {

/// Ordered gate list plus a parameter-slot table. Slots may be shared by many
/// gates. A circuit is built once and treated as immutable afterwards.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t n_params() const { return n_params_; }
  /// Ansatz layers represented by this circuit (an encoder counts as one).
  std::size_t layers() const { return layers_; }
  void set_layers(std::size_t layers) { layers_ = layers; }
  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }

  /// Allocates a fresh parameter slot.
  std::size_t new_slot() { return n_params_++; }

  /// Appends a gate after checking arity, qubit range and slot binding.
  void push(Gate g);

  /// Every slot is referenced by at least one gate.
  void validate() const;

  /// Gate indices bound to each slot.
  std::vector<std::vector<std::size_t>> slot_users() const;

  /// One gate per line: `KIND q... [slot=S] [angle=A] [scale=C]`, preceded by a
  /// `# qubits N params P layers L` header line.
  std::string to_text() const;
  static Circuit parse(std::string_view text);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::size_t n_params_ = 0;
  std::size_t layers_ = 0;
  std::vector<Gate> gates_;
};

/// `first` then `second`; the parameters of `second` follow those of `first`.
Circuit compose(const Circuit& first, const Circuit& second);

/// The adjoint circuit: reversed order, rotation angles negated.
Circuit inverse(const Circuit& c);

}  // namespace vqeid::circuits
