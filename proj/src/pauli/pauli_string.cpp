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
#include "vqeid/pauli/pauli_string.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "vqeid/common/error.hpp"

namespace vqeid::pauli {

char to_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::size_t n_qubits, std::vector<Entry> letters)
    : n_qubits_(n_qubits), letters_(std::move(letters)) {
  VQEID_REQUIRE(n_qubits_ > 0, "PauliString needs at least one qubit");
  VQEID_REQUIRE(n_qubits_ <= 64, "PauliString supports at most 64 qubits");
  std::sort(letters_.begin(), letters_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    VQEID_REQUIRE(letters_[k].first < n_qubits_,
                  "Pauli index " + std::to_string(letters_[k].first) +
                      " out of range for " + std::to_string(n_qubits_) +
                      " qubits");
    VQEID_REQUIRE(k == 0 || letters_[k].first != letters_[k - 1].first,
                  "qubit " + std::to_string(letters_[k].first) +
                      " appears twice in a Pauli string");
  }
}

PauliString PauliString::parse(std::size_t n_qubits, std::string_view text) {
  std::vector<Entry> letters;
  std::istringstream is{std::string(text)};
  std::string tok;
  bool saw_identity = false;
  while (is >> tok) {
    if (tok == "I") {
      saw_identity = true;
      continue;
    }
    PauliLetter l;
    switch (std::toupper(static_cast<unsigned char>(tok[0]))) {
      case 'X':
        l = PauliLetter::X;
        break;
      case 'Y':
        l = PauliLetter::Y;
        break;
      case 'Z':
        l = PauliLetter::Z;
        break;
      default:
        throw InputError("bad Pauli token '" + tok + "'");
    }
    std::size_t idx = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
    if (tok.size() < 2 || ec != std::errc{} ||
        ptr != tok.data() + tok.size()) {
      throw InputError("bad Pauli token '" + tok + "'");
    }
    letters.emplace_back(idx, l);
  }
  VQEID_REQUIRE(!(saw_identity && !letters.empty()),
                "identity token mixed with Pauli letters");
  return PauliString(n_qubits, std::move(letters));
}

basis_index PauliString::x_mask() const {
  basis_index m = 0;
  for (const auto& [q, l] : letters_) {
    if (l != PauliLetter::Z) m |= basis_index{1} << q;
  }
  return m;
}

basis_index PauliString::z_mask() const {
  basis_index m = 0;
  for (const auto& [q, l] : letters_) {
    if (l != PauliLetter::X) m |= basis_index{1} << q;
  }
  return m;
}

std::size_t PauliString::y_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(),
                    [](const Entry& e) { return e.second == PauliLetter::Y; }));
}

std::string PauliString::to_string() const {
  if (letters_.empty()) return "I";
  std::string out;
  for (const auto& [q, l] : letters_) {
    if (!out.empty()) out += ' ';
    out += to_char(l);
    out += std::to_string(q);
  }
  return out;
}

std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
  if (auto c = a.n_qubits_ <=> b.n_qubits_; c != 0) return c;
  // Index lists first, then letter codes.
  const auto& la = a.letters_;
  const auto& lb = b.letters_;
  const std::size_t n = std::min(la.size(), lb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = la[k].first <=> lb[k].first; c != 0) return c;
  }
  if (auto c = la.size() <=> lb.size(); c != 0) return c;
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = static_cast<int>(la[k].second) <=>
                 static_cast<int>(lb[k].second);
        c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

namespace {
complex_t y_phase_for(std::size_t ny) {
  switch (ny % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}
}  // namespace

PauliAction::PauliAction(const PauliString& s)
    : PauliAction(s.x_mask(), s.z_mask(), s.y_count()) {}

PauliAction::PauliAction(basis_index x, basis_index z, std::size_t ny)
    : x_mask(x), z_mask(z), y_phase(y_phase_for(ny)) {}

}  // namespace vqeid::pauli
