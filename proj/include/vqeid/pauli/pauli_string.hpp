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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vqeid/common/types.hpp"

namespace vqeid::pauli {

enum class PauliLetter : std::uint8_t { X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter l);

/// Tensor product of single-qubit Paulis, stored sparsely as (qubit, letter)
/// pairs sorted by qubit. Absent qubits carry the identity, so the empty list
/// is the identity string.
class PauliString {
 public:
  using Entry = std::pair<std::size_t, PauliLetter>;

  PauliString() = default;
  explicit PauliString(std::size_t n_qubits) : n_qubits_(n_qubits) {}
  PauliString(std::size_t n_qubits, std::vector<Entry> letters);

  /// Parses "X0 Z3", "Y2" or "I" (identity).
  static PauliString parse(std::size_t n_qubits, std::string_view text);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Entry>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t weight() const { return letters_.size(); }

  /// Qubits carrying X or Y (the bit-flip pattern).
  basis_index x_mask() const;
  /// Qubits carrying Z or Y (the phase pattern).
  basis_index z_mask() const;
  std::size_t y_count() const;
  /// True when the dense matrix of the string is real (even number of Y).
  bool is_real() const { return y_count() % 2 == 0; }

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b);

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Entry> letters_;
};

/// Phase factor and flipped index of a Pauli string acting on |i>:
///   P|i> = phase(i) |i ^ x_mask>,  phase(i) = i^{ny} (-1)^{popcount(i & z_mask)}.
struct PauliAction {
  basis_index x_mask = 0;
  basis_index z_mask = 0;
  complex_t y_phase{1.0, 0.0};

  explicit PauliAction(const PauliString& s);
  PauliAction(basis_index x, basis_index z, std::size_t ny);

  complex_t phase(basis_index i) const {
    return (std::popcount(i & z_mask) & 1U) ? -y_phase : y_phase;
  }
};

}  // namespace vqeid::pauli
