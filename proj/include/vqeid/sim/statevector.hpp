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
#include <string>
#include <string_view>
#include <vector>

#include "vqeid/common/types.hpp"
#include "vqeid/pauli/pauli_sum.hpp"

namespace vqeid::sim {

/// 2^n complex amplitudes; basis index bit q is the state of qubit q.
class Statevector {
 public:
  Statevector() = default;
  /// |0...0>.
  explicit Statevector(std::size_t n_qubits);

  /// Takes ownership of `amplitudes`; the length must be a power of two and
  /// the vector normalized to within `tolerance`.
  static Statevector from_amplitudes(std::vector<complex_t> amplitudes,
                                     double tolerance = 1e-10);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const complex_t> amplitudes() const { return amps_; }
  std::span<complex_t> mutable_amplitudes() { return amps_; }
  complex_t operator[](basis_index i) const { return amps_[i]; }

  double norm_squared() const;
  /// <this|other>.
  complex_t inner(const Statevector& other) const;

  /// index,bitstring,real,imag,probability rows (bitstring printed as qubit
  /// n-1 ... 0).
  std::string to_csv() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<complex_t> amps_;
};

/// |index> on n qubits.
Statevector init_basis_state(std::size_t n_qubits, basis_index index);

/// Reads a bitstring written left-to-right as qubit n-1 ... 0 (so "011" is
/// index 3 on three qubits).
basis_index parse_bitstring(std::string_view bits);
std::string to_bitstring(basis_index index, std::size_t n_qubits);

/// Exact <psi|H|psi>.
double expectation(const Statevector& state, const pauli::PauliSum& h);

}  // namespace vqeid::sim
