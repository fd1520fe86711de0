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
#include "vqeid/models/fermion.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <utility>

#include "vqeid/common/error.hpp"

namespace vqeid::models {

namespace {

// phase * X^x Z^z over the register.
struct XzProduct {
  basis_index x = 0;
  basis_index z = 0;
  complex_t phase{1.0, 0.0};
};

XzProduct multiply(const XzProduct& a, const XzProduct& b) {
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  const double sign = (std::popcount(a.z & b.x) & 1U) ? -1.0 : 1.0;
  return {a.x ^ b.x, a.z ^ b.z, a.phase * b.phase * sign};
}

// c_j^dag = Z_<j X_j (I + Z_j)/2, c_j = Z_<j X_j (I - Z_j)/2.
std::vector<XzProduct> ladder(std::size_t mode, bool creation) {
  const basis_index bit = basis_index{1} << mode;
  const basis_index low = bit - 1;
  const double s = creation ? 0.5 : -0.5;
  return {{bit, low, {0.5, 0.0}}, {bit, low | bit, {s, 0.0}}};
}

}  // namespace

pauli::PauliSum jw_map(std::size_t n_modes,
                       std::span<const FermionTerm> terms) {
  VQEID_REQUIRE(n_modes >= 1 && n_modes <= 64, "mode count out of range");
  std::map<std::pair<basis_index, basis_index>, complex_t> acc;
  for (const auto& term : terms) {
    std::vector<XzProduct> cur{{0, 0, term.coeff}};
    for (const auto& op : term.ops) {
      VQEID_REQUIRE(op.mode < n_modes, "fermion mode out of range");
      std::vector<XzProduct> next;
      for (const auto& a : cur) {
        for (const auto& b : ladder(op.mode, op.creation)) {
          next.push_back(multiply(a, b));
        }
      }
      cur = std::move(next);
    }
    for (const auto& p : cur) acc[{p.x, p.z}] += p.phase;
  }
  std::vector<pauli::PauliTerm> out;
  for (const auto& [key, value] : acc) {
    const auto [x, z] = key;
    // X Z = -i Y on each qubit carrying both.
    const auto ny = static_cast<unsigned>(std::popcount(x & z));
    static constexpr complex_t kMinusI[4] = {
        {1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const complex_t c = value * kMinusI[ny % 4];
    if (std::abs(c) < pauli::PauliSum::kDropTolerance) continue;
    VQEID_REQUIRE(std::abs(c.imag()) <= 1e-12,
                  "fermionic operator is not Hermitian");
    std::vector<pauli::PauliString::Entry> letters;
    for (std::size_t q = 0; q < n_modes; ++q) {
      const bool bx = (x >> q) & 1U;
      const bool bz = (z >> q) & 1U;
      if (bx && bz) {
        letters.emplace_back(q, pauli::PauliLetter::Y);
      } else if (bx) {
        letters.emplace_back(q, pauli::PauliLetter::X);
      } else if (bz) {
        letters.emplace_back(q, pauli::PauliLetter::Z);
      }
    }
    out.push_back({c.real(), pauli::PauliString(n_modes, std::move(letters))});
  }
  return pauli::PauliSum(n_modes, std::move(out));
}

FermionTerm number_term(std::size_t mode, complex_t coeff) {
  return {coeff, {{mode, true}, {mode, false}}};
}

std::vector<FermionTerm> hopping_terms(std::size_t i, std::size_t j,
                                       double coeff) {
  return {{coeff, {{i, true}, {j, false}}}, {coeff, {{j, true}, {i, false}}}};
}

std::vector<FermionTerm> hubbard_fermionic(std::size_t sites, double t,
                                           double U) {
  std::vector<FermionTerm> out;
  for (std::size_t reg = 0; reg < 2; ++reg) {
    for (std::size_t i = 0; i + 1 < sites; ++i) {
      for (auto& h : hopping_terms(reg * sites + i, reg * sites + i + 1, -t)) {
        out.push_back(std::move(h));
      }
    }
  }
  for (std::size_t i = 0; i < sites; ++i) {
    const std::size_t up = i;
    const std::size_t dn = i + sites;
    // U (n_u - 1/2)(n_d - 1/2)
    out.push_back({U, {{up, true}, {up, false}, {dn, true}, {dn, false}}});
    out.push_back(number_term(up, -U / 2));
    out.push_back(number_term(dn, -U / 2));
    out.push_back({U / 4, {}});
  }
  return out;
}

}  // namespace vqeid::models
