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
#include "vqeid/encoder/encoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "vqeid/common/error.hpp"
#include "vqeid/sim/execute.hpp"

namespace vqeid::encoder {

using circuits::Gate;
using circuits::GateKind;

void BasisSet::validate() const {
  VQEID_REQUIRE(n_qubits >= 1 && n_qubits <= kMaxQubits,
                "basis register out of range");
  VQEID_REQUIRE(!members.empty(), "basis set is empty");
  VQEID_REQUIRE(members.size() <= (std::size_t{1} << n_qubits),
                "basis set larger than the state space");
  std::vector<basis_index> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  VQEID_REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) ==
                    sorted.end(),
                "basis set has duplicate members");
  VQEID_REQUIRE(sorted.back() < (basis_index{1} << n_qubits),
                "basis member " + std::to_string(sorted.back()) +
                    " outside the register");
  VQEID_REQUIRE(contains(reference), "reference " + std::to_string(reference) +
                                         " is not a basis member");
}

bool BasisSet::contains(basis_index i) const {
  return std::find(members.begin(), members.end(), i) != members.end();
}

std::string BasisSet::to_text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) os << ' ';
    os << members[k];
  }
  return os.str();
}

namespace {

basis_index apply_cnots(basis_index s, const MergeStep& st) {
  if (!((s >> st.pivot) & 1U)) return s;
  for (auto t : st.cnot_targets) s ^= basis_index{1} << t;
  return s;
}

// Reduction plan over the member strings.
std::vector<MergeStep> plan_merges(const BasisSet& basis, basis_index& root) {
  std::vector<basis_index> cur = basis.members;
  std::vector<MergeStep> plan;
  while (cur.size() > 1) {
    std::sort(cur.begin(), cur.end());
    std::size_t bi = 0, bj = 1;
    int best = 65;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        const int d = std::popcount(cur[i] ^ cur[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    const basis_index diff = cur[bi] ^ cur[bj];
    MergeStep st;
    st.pivot = static_cast<std::size_t>(std::countr_zero(diff));
    for (basis_index rest = diff & (diff - 1); rest; rest &= rest - 1) {
      st.cnot_targets.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    const bool i_low = !((cur[bi] >> st.pivot) & 1U);
    for (auto& s : cur) s = apply_cnots(s, st);
    st.keep = i_low ? cur[bi] : cur[bj];
    st.drop = i_low ? cur[bj] : cur[bi];

    // Greedy cover: every other string must disagree with keep on a control.
    std::vector<basis_index> others;
    for (auto s : cur) {
      if (s != st.keep && s != st.drop) others.push_back(s);
    }
    basis_index controls = 0;
    while (!others.empty()) {
      std::size_t best_bit = 0;
      std::size_t best_cover = 0;
      for (std::size_t q = 0; q < basis.n_qubits; ++q) {
        if (q == st.pivot || ((controls >> q) & 1U)) continue;
        std::size_t cover = 0;
        for (auto s : others) cover += ((s ^ st.keep) >> q) & 1U;
        if (cover > best_cover) {
          best_cover = cover;
          best_bit = q;
        }
      }
      controls |= basis_index{1} << best_bit;
      std::erase_if(others, [&](basis_index s) {
        return ((s ^ st.keep) >> best_bit) & 1U;
      });
    }
    for (basis_index rest = controls; rest; rest &= rest - 1) {
      st.controls.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    st.control_values = st.keep & controls;
    std::erase(cur, st.drop);
    plan.push_back(std::move(st));
  }
  root = cur.front();
  return plan;
}

GateKind rotation_kind(std::size_t controls, bool is_y) {
  switch (controls) {
    case 0:
      return is_y ? GateKind::RY : GateKind::RZ;
    case 1:
      return is_y ? GateKind::CRY : GateKind::CRZ;
    case 2:
      return is_y ? GateKind::CCRY : GateKind::CCRZ;
    default:
      return is_y ? GateKind::MCRY : GateKind::MCRZ;
  }
}

}  // namespace

Encoder synthesize(const BasisSet& basis) {
  basis.validate();
  Encoder enc;
  enc.basis = basis;
  enc.plan = plan_merges(basis, enc.root);
  circuits::Circuit c(basis.n_qubits);
  for (std::size_t k = 0; k < 2 * enc.plan.size(); ++k) c.new_slot();
  for (std::size_t q = 0; q < basis.n_qubits; ++q) {
    if ((enc.root >> q) & 1U) c.push(Gate::fixed(GateKind::X, {q}));
  }
  for (std::size_t k = enc.plan.size(); k-- > 0;) {
    const auto& st = enc.plan[k];
    std::vector<std::size_t> anti;
    for (auto q : st.controls) {
      if (!((st.control_values >> q) & 1U)) anti.push_back(q);
    }
    for (auto q : anti) c.push(Gate::fixed(GateKind::X, {q}));
    std::vector<std::size_t> qubits = st.controls;
    qubits.push_back(st.pivot);
    c.push(Gate::param(rotation_kind(st.controls.size(), true), qubits, 2 * k));
    c.push(Gate::param(rotation_kind(st.controls.size(), false), qubits,
                       2 * k + 1));
    for (auto q : anti) c.push(Gate::fixed(GateKind::X, {q}));
    for (auto t = st.cnot_targets.rbegin(); t != st.cnot_targets.rend(); ++t) {
      c.push(Gate::fixed(GateKind::CNOT, {st.pivot, *t}));
    }
  }
  c.set_layers(enc.plan.empty() ? 0 : 1);
  c.validate();
  enc.circuit = std::move(c);
  return enc;
}

std::vector<double> solve_parameters(const Encoder& enc,
                                     std::span<const complex_t> target) {
  const auto& members = enc.basis.members;
  VQEID_REQUIRE(target.size() == members.size(),
                "target has " + std::to_string(target.size()) +
                    " amplitudes, basis has " + std::to_string(members.size()));
  double norm = 0.0;
  for (const auto& a : target) norm += std::norm(a);
  VQEID_REQUIRE(norm > 0.0 && std::isfinite(norm), "target has zero norm");
  const double scale = 1.0 / std::sqrt(norm);

  std::map<basis_index, complex_t> amp;
  for (std::size_t k = 0; k < members.size(); ++k) {
    amp[members[k]] = target[k] * scale;
  }
  std::vector<double> params(enc.n_params(), 0.0);
  for (std::size_t k = 0; k < enc.plan.size(); ++k) {
    const auto& st = enc.plan[k];
    std::map<basis_index, complex_t> moved;
    for (const auto& [s, a] : amp) moved[apply_cnots(s, st)] = a;
    amp = std::move(moved);
    const complex_t a0 = amp.at(st.keep);
    const complex_t a1 = amp.at(st.drop);
    const double r = std::hypot(std::abs(a0), std::abs(a1));
    const double ph0 = std::arg(a0);
    const double ph1 = std::arg(a1);
    params[2 * k] = 2.0 * std::atan2(std::abs(a1), std::abs(a0));
    params[2 * k + 1] = ph1 - ph0;
    amp.erase(st.drop);
    amp[st.keep] = std::polar(r, 0.5 * (ph0 + ph1));
  }
  return params;
}

double leakage(const sim::Statevector& state, const BasisSet& basis) {
  std::vector<basis_index> sorted = basis.members;
  std::sort(sorted.begin(), sorted.end());
  double out = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (!std::binary_search(sorted.begin(), sorted.end(),
                            static_cast<basis_index>(i))) {
      out += std::norm(amps[i]);
    }
  }
  return out;
}

SupportReport verify_support(const Encoder& enc, std::size_t trials, Rng& rng,
                             double threshold) {
  VQEID_REQUIRE(trials >= 1, "verify_support needs at least one trial");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  SupportReport rep;
  std::vector<double> gamma(enc.n_params());
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& g : gamma) g = angle(rng);
    const auto out =
        sim::evolve(sim::Statevector(enc.circuit.n_qubits()), enc.circuit, gamma);
    rep.worst_leakage = std::max(rep.worst_leakage, leakage(out, enc.basis));
  }
  rep.pass = rep.worst_leakage < threshold;
  return rep;
}

}  // namespace vqeid::encoder
