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

#include <Eigen/Dense>

#include "vqeid/common/types.hpp"
#include "vqeid/pauli/pauli_string.hpp"

namespace vqeid::pauli {

struct PauliTerm {
  double coeff = 0.0;
  PauliString string;
};

/// Real-weighted sum of Pauli strings over a fixed register. Construction
/// merges duplicate strings, drops |c| < kDropTolerance and sorts the terms in
/// canonical order, so two sums describing the same operator compare equal.
class PauliSum {
 public:
  static constexpr double kDropTolerance = 1e-15;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}
  PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms);

  /// Parses the one-term-per-line text form; blank lines and '#' comments are
  /// skipped.
  static PauliSum parse(std::size_t n_qubits, std::string_view text);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Sum of |c_k|; an upper bound on the operator norm.
  double coefficient_l1() const;
  double max_abs_coeff() const;
  bool is_real() const;

  PauliSum& operator+=(const PauliSum& other);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(double s, const PauliSum& a);

  /// `<coeff> <letter><index> ...` per line, identity spelled `<coeff> I`.
  std::string to_text() const;

  friend bool operator==(const PauliSum&, const PauliSum&);

 private:
  void canonicalize();

  std::size_t n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// out += coeff * P * in.
void accumulate_pauli(std::span<const complex_t> in, std::span<complex_t> out,
                      const PauliAction& p, complex_t coeff);

/// <bra| P |ket>, optionally restricted to indices where all `ctrl_mask`
/// bits are set.
complex_t pauli_inner(std::span<const complex_t> bra,
                      std::span<const complex_t> ket, const PauliAction& p,
                      basis_index ctrl_mask = 0);

/// out = H * in.
void apply_sum(const PauliSum& h, std::span<const complex_t> in,
               std::span<complex_t> out);

/// <psi|H|psi> for a raw amplitude vector. The imaginary residue (zero for a
/// Hermitian H up to rounding) is discarded.
double expectation(std::span<const complex_t> amplitudes, const PauliSum& h);

/// Dense 2^n x 2^n matrix of H. Refuses n > kMaxDenseQubits.
Eigen::MatrixXcd to_dense_matrix(const PauliSum& h);

/// Dense real matrix; requires h.is_real() (no odd-Y strings).
Eigen::MatrixXd to_dense_real_matrix(const PauliSum& h);

}  // namespace vqeid::pauli
