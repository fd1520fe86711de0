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
#include "vqeid/sim/statevector.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "vqeid/common/error.hpp"

namespace vqeid::sim {

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  VQEID_REQUIRE(n_qubits >= 1 && n_qubits <= kMaxQubits,
                "statevector must hold 1.." + std::to_string(kMaxQubits) +
                    " qubits");
  amps_.assign(std::size_t{1} << n_qubits, complex_t{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<complex_t> amplitudes,
                                         double tolerance) {
  const std::size_t dim = amplitudes.size();
  VQEID_REQUIRE(dim >= 2 && (dim & (dim - 1)) == 0,
                "amplitude count must be a power of two >= 2");
  Statevector s;
  s.n_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
  s.amps_ = std::move(amplitudes);
  VQEID_REQUIRE(std::abs(s.norm_squared() - 1.0) <= tolerance,
                "amplitudes are not normalized");
  return s;
}

double Statevector::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amps_) n += std::norm(a);
  return n;
}

complex_t Statevector::inner(const Statevector& other) const {
  VQEID_REQUIRE(other.dim() == dim(), "inner product of mismatched states");
  complex_t acc{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    acc += std::conj(amps_[i]) * other.amps_[i];
  }
  return acc;
}

std::string Statevector::to_csv() const {
  std::ostringstream os;
  os << "index,bitstring,real,imag,probability\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    os << i << ',' << to_bitstring(i, n_qubits_) << ',' << amps_[i].real()
       << ',' << amps_[i].imag() << ',' << std::norm(amps_[i]) << '\n';
  }
  return os.str();
}

Statevector init_basis_state(std::size_t n_qubits, basis_index index) {
  Statevector s(n_qubits);
  VQEID_REQUIRE(index < s.dim(), "basis index " + std::to_string(index) +
                                     " out of range for " +
                                     std::to_string(n_qubits) + " qubits");
  auto a = s.mutable_amplitudes();
  a[0] = 0.0;
  a[index] = 1.0;
  return s;
}

basis_index parse_bitstring(std::string_view bits) {
  VQEID_REQUIRE(!bits.empty() && bits.size() <= 64, "bad bitstring length");
  basis_index v = 0;
  for (char c : bits) {
    VQEID_REQUIRE(c == '0' || c == '1', "bitstring must contain only 0/1");
    v = (v << 1) | static_cast<basis_index>(c == '1');
  }
  return v;
}

std::string to_bitstring(basis_index index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((index >> q) & 1U) s[n_qubits - 1 - q] = '1';
  }
  return s;
}

double expectation(const Statevector& state, const pauli::PauliSum& h) {
  VQEID_REQUIRE(state.n_qubits() == h.n_qubits(),
                "state has " + std::to_string(state.n_qubits()) +
                    " qubits, operator has " + std::to_string(h.n_qubits()));
  return pauli::expectation(state.amplitudes(), h);
}

}  // namespace vqeid::sim
