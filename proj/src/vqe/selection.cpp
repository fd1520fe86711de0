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
#include "vqeid/vqe/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "vqeid/common/error.hpp"
#include "vqeid/sim/execute.hpp"
#include "vqeid/sim/sampling.hpp"

namespace vqeid::vqe {

std::string_view to_string(ThresholdRule r) {
  switch (r) {
    case ThresholdRule::percentile:
      return "percentile";
    case ThresholdRule::absolute:
      return "absolute";
    case ThresholdRule::offset:
      return "offset";
  }
  return "?";
}

void SelectionConfig::validate() const {
  VQEID_REQUIRE(m >= 1, "selection.m must be at least 1");
  VQEID_REQUIRE(M >= 1, "selection.M must be at least 1");
  VQEID_REQUIRE(m <= M, "selection.m must not exceed selection.M");
  VQEID_REQUIRE(std::isfinite(rule_value), "selection threshold must be finite");
  if (rule == ThresholdRule::percentile) {
    VQEID_REQUIRE(rule_value >= 0.0 && rule_value <= 100.0,
                  "selection percentile must lie in [0, 100]");
  }
}

SampleResult sample_basis(std::size_t n_qubits, std::size_t M,
                          basis_index reference,
                          std::optional<std::span<const basis_index>> sector,
                          Rng& rng) {
  VQEID_REQUIRE(n_qubits >= 1 && n_qubits <= kMaxQubits,
                "register out of range");
  VQEID_REQUIRE(M >= 1, "sample count must be positive");
  const std::size_t space =
      sector ? sector->size() : (std::size_t{1} << n_qubits);
  std::size_t ref_pos = static_cast<std::size_t>(reference);
  if (sector) {
    auto it = std::find(sector->begin(), sector->end(), reference);
    VQEID_REQUIRE(it != sector->end(), "reference lies outside the sector");
    ref_pos = static_cast<std::size_t>(it - sector->begin());
  } else {
    VQEID_REQUIRE(reference < space, "reference outside the register");
  }
  SampleResult out;
  out.requested = M;
  if (M > space) {
    out.clamped = true;
    M = space;
  }
  // Floyd's algorithm over the space with the reference removed.
  const std::size_t pool = space - 1;
  const std::size_t k = M - 1;
  std::set<std::size_t> picked;
  for (std::size_t j = pool - k; j < pool; ++j) {
    std::uniform_int_distribution<std::size_t> d(0, j);
    const std::size_t t = d(rng);
    if (!picked.insert(t).second) picked.insert(j);
  }
  out.states.push_back(reference);
  for (auto p : picked) {
    const std::size_t pos = p < ref_pos ? p : p + 1;
    out.states.push_back(sector ? (*sector)[pos] : static_cast<basis_index>(pos));
  }
  std::sort(out.states.begin(), out.states.end());
  return out;
}

std::vector<double> score_basis(const circuits::Circuit& u,
                                std::span<const double> theta,
                                const pauli::PauliSum& h,
                                std::span<const basis_index> states,
                                std::optional<std::size_t> shots,
                                Rng* shot_rng) {
  VQEID_REQUIRE(!shots || shot_rng, "shot-sampled scoring needs a generator");
  std::vector<double> out;
  out.reserve(states.size());
  for (auto j : states) {
    const auto s = sim::evolve(sim::init_basis_state(u.n_qubits(), j), u, theta);
    out.push_back(shots ? sim::expectation_sampled(s, h, *shots, *shot_rng)
                        : sim::expectation(s, h));
  }
  return out;
}

namespace {

double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q / 100.0 * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace

SelectionResult select_states(std::size_t n_qubits,
                              std::span<const basis_index> states,
                              std::span<const double> scores,
                              basis_index reference, double pretrained_energy,
                              const SelectionConfig& cfg, Rng& rng) {
  cfg.validate();
  VQEID_REQUIRE(states.size() == scores.size(), "one score per state required");
  VQEID_REQUIRE(!states.empty(), "no candidates to select from");
  SelectionResult res;
  switch (cfg.rule) {
    case ThresholdRule::percentile:
      res.threshold = percentile({scores.begin(), scores.end()}, cfg.rule_value);
      break;
    case ThresholdRule::absolute:
      res.threshold = cfg.rule_value;
      break;
    case ThresholdRule::offset: {
      const double emax = *std::max_element(scores.begin(), scores.end());
      res.threshold =
          pretrained_energy + cfg.rule_value * (emax - pretrained_energy);
      break;
    }
  }
  // Candidates other than the reference, ordered by (score, index).
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k] != reference) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return states[a] < states[b];
  });
  std::vector<basis_index> pool;
  std::size_t below = 0;
  for (auto k : order) {
    if (scores[k] < res.threshold) ++below;
  }
  res.pool_size = below;
  const std::size_t want = std::min(cfg.m - 1, order.size());
  std::vector<basis_index> chosen;
  if (below < want) {
    res.fallback = true;
    for (std::size_t k = 0; k < want; ++k) chosen.push_back(states[order[k]]);
  } else if (cfg.greedy) {
    for (std::size_t k = 0; k < want; ++k) chosen.push_back(states[order[k]]);
  } else {
    for (std::size_t k = 0; k < below; ++k) pool.push_back(states[order[k]]);
    std::sort(pool.begin(), pool.end());
    // Partial Fisher-Yates: the first `want` slots are a uniform draw.
    for (std::size_t k = 0; k < want; ++k) {
      std::uniform_int_distribution<std::size_t> d(k, pool.size() - 1);
      std::swap(pool[k], pool[d(rng)]);
    }
    chosen.assign(pool.begin(), pool.begin() + static_cast<long>(want));
  }
  std::sort(chosen.begin(), chosen.end());
  res.basis.n_qubits = n_qubits;
  res.basis.reference = reference;
  res.basis.members.push_back(reference);
  res.basis.members.insert(res.basis.members.end(), chosen.begin(),
                           chosen.end());
  res.basis.validate();
  return res;
}

}  // namespace vqeid::vqe
