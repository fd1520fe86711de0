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
#include "vqeid/pauli/pauli_sum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "vqeid/common/error.hpp"

namespace vqeid::pauli {

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  VQEID_REQUIRE(n_qubits_ > 0, "PauliSum needs at least one qubit");
  canonicalize();
}

void PauliSum::canonicalize() {
  for (auto& t : terms_) {
    VQEID_REQUIRE(std::isfinite(t.coeff), "non-finite Pauli coefficient");
    if (t.string.n_qubits() == 0) t.string = PauliString(n_qubits_);
    VQEID_REQUIRE(t.string.n_qubits() == n_qubits_,
                  "Pauli term register size differs from the sum's");
  }
  std::stable_sort(
      terms_.begin(), terms_.end(),
      [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
  std::vector<PauliTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().string == t.string) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const PauliTerm& t) {
    return std::abs(t.coeff) < kDropTolerance;
  });
  terms_ = std::move(merged);
}

PauliSum PauliSum::parse(std::size_t n_qubits, std::string_view text) {
  std::vector<PauliTerm> terms;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto space = line.find_first_of(" \t", first);
    const std::string coeff_tok = line.substr(first, space - first);
    double c = 0.0;
    auto [ptr, ec] = std::from_chars(coeff_tok.data(),
                                     coeff_tok.data() + coeff_tok.size(), c);
    if (ec != std::errc{} || ptr != coeff_tok.data() + coeff_tok.size()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": bad coefficient '" + coeff_tok + "'");
    }
    const std::string rest =
        space == std::string::npos ? std::string{} : line.substr(space);
    if (rest.find_first_not_of(" \t\r") == std::string::npos) {
      throw InputError("line " + std::to_string(line_no) +
                       ": missing Pauli string (use 'I' for identity)");
    }
    try {
      terms.push_back({c, PauliString::parse(n_qubits, rest)});
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return PauliSum(n_qubits, std::move(terms));
}

double PauliSum::coefficient_l1() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

double PauliSum::max_abs_coeff() const {
  double s = 0.0;
  for (const auto& t : terms_) s = std::max(s, std::abs(t.coeff));
  return s;
}

bool PauliSum::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PauliTerm& t) { return t.string.is_real(); });
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (n_qubits_ == 0) n_qubits_ = other.n_qubits_;
  VQEID_REQUIRE(other.n_qubits_ == n_qubits_,
                "cannot add Pauli sums over different registers");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PauliSum operator*(double s, const PauliSum& a) {
  std::vector<PauliTerm> terms = a.terms_;
  for (auto& t : terms) t.coeff *= s;
  return PauliSum(a.n_qubits_, std::move(terms));
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].coeff != b.terms_[k].coeff ||
        a.terms_[k].string != b.terms_[k].string)
      return false;
  }
  return true;
}

namespace {
// Shortest round-trip decimal, always with a decimal point or exponent.
std::string format_coeff(double c) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), c);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}
}  // namespace

std::string PauliSum::to_text() const {
  std::string out;
  for (const auto& t : terms_) {
    out += format_coeff(t.coeff);
    out += ' ';
    out += t.string.to_string();
    out += '\n';
  }
  return out;
}

void accumulate_pauli(std::span<const complex_t> in, std::span<complex_t> out,
                      const PauliAction& p, complex_t coeff) {
  const std::size_t dim = in.size();
  for (basis_index i = 0; i < dim; ++i) {
    out[i ^ p.x_mask] += coeff * p.phase(i) * in[i];
  }
}

complex_t pauli_inner(std::span<const complex_t> bra,
                      std::span<const complex_t> ket, const PauliAction& p,
                      basis_index ctrl_mask) {
  const std::size_t dim = ket.size();
  complex_t acc{0.0, 0.0};
  if (ctrl_mask == 0) {
    for (basis_index i = 0; i < dim; ++i) {
      acc += std::conj(bra[i ^ p.x_mask]) * p.phase(i) * ket[i];
    }
  } else {
    for (basis_index i = 0; i < dim; ++i) {
      if ((i & ctrl_mask) != ctrl_mask) continue;
      acc += std::conj(bra[i ^ p.x_mask]) * p.phase(i) * ket[i];
    }
  }
  return acc;
}

namespace {
void require_dim(const PauliSum& h, std::size_t size) {
  VQEID_REQUIRE(h.n_qubits() < 64 && size == (std::size_t{1} << h.n_qubits()),
                "state dimension " + std::to_string(size) +
                    " does not match a " + std::to_string(h.n_qubits()) +
                    "-qubit operator");
}
}  // namespace

void apply_sum(const PauliSum& h, std::span<const complex_t> in,
               std::span<complex_t> out) {
  require_dim(h, in.size());
  VQEID_REQUIRE(out.size() == in.size(), "output buffer size mismatch");
  std::fill(out.begin(), out.end(), complex_t{0.0, 0.0});
  for (const auto& t : h.terms()) {
    accumulate_pauli(in, out, PauliAction(t.string), complex_t{t.coeff, 0.0});
  }
}

double expectation(std::span<const complex_t> amplitudes, const PauliSum& h) {
  require_dim(h, amplitudes.size());
  double e = 0.0;
  for (const auto& t : h.terms()) {
    e += t.coeff *
         pauli_inner(amplitudes, amplitudes, PauliAction(t.string)).real();
  }
  return e;
}

Eigen::MatrixXcd to_dense_matrix(const PauliSum& h) {
  VQEID_REQUIRE(h.n_qubits() <= kMaxDenseQubits,
                "dense matrices are limited to " +
                    std::to_string(kMaxDenseQubits) + " qubits");
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    const PauliAction p(t.string);
    for (basis_index i = 0; i < dim; ++i) {
      m(static_cast<Eigen::Index>(i ^ p.x_mask), static_cast<Eigen::Index>(i)) +=
          t.coeff * p.phase(i);
    }
  }
  return m;
}

Eigen::MatrixXd to_dense_real_matrix(const PauliSum& h) {
  VQEID_REQUIRE(h.n_qubits() <= kMaxDenseQubits,
                "dense matrices are limited to " +
                    std::to_string(kMaxDenseQubits) + " qubits");
  VQEID_REQUIRE(h.is_real(), "operator has complex matrix elements");
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    const PauliAction p(t.string);
    for (basis_index i = 0; i < dim; ++i) {
      m(static_cast<Eigen::Index>(i ^ p.x_mask), static_cast<Eigen::Index>(i)) +=
          t.coeff * p.phase(i).real();
    }
  }
  return m;
}

}  // namespace vqeid::pauli
