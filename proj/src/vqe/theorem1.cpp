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
#include "vqeid/vqe/theorem1.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "vqeid/common/error.hpp"

namespace vqeid::vqe {

namespace {

Superposition from_overlaps(const Eigen::MatrixXcd& beta) {
  // beta(j, v) = <psi_j | v>
  Superposition out;
  const auto m = beta.rows();
  out.per_state.resize(static_cast<std::size_t>(m));
  for (Eigen::Index j = 0; j < m; ++j) {
    out.per_state[static_cast<std::size_t>(j)] = beta.row(j).squaredNorm();
  }
  out.alpha.assign(static_cast<std::size_t>(m), complex_t{0.0, 0.0});
  if (beta.cols() == 1) {
    const double n2 = beta.col(0).squaredNorm();
    out.fidelity = n2;
    if (n2 == 0.0) {
      out.undefined = true;
      out.alpha[0] = 1.0;
      return out;
    }
    const double n = std::sqrt(n2);
    for (Eigen::Index j = 0; j < m; ++j) {
      out.alpha[static_cast<std::size_t>(j)] = beta(j, 0) / n;
    }
    return out;
  }
  // F(alpha) = sum_v |<v|sum_j alpha_j psi_j>|^2 = alpha^dag B alpha with
  // B = beta beta^dag.
  const Eigen::MatrixXcd b = beta * beta.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b);
  out.fidelity = es.eigenvalues()(m - 1);
  if (out.fidelity <= 0.0) {
    out.fidelity = 0.0;
    out.undefined = true;
    out.alpha[0] = 1.0;
    return out;
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    out.alpha[static_cast<std::size_t>(j)] =
        es.eigenvectors()(j, m - 1);
  }
  return out;
}

}  // namespace

Superposition optimal_superposition(std::span<const sim::Statevector> states,
                                    const sim::GroundTruth& truth) {
  VQEID_REQUIRE(!states.empty(), "no candidate states");
  VQEID_REQUIRE(!truth.subspace.empty(), "ground subspace is empty");
  for (std::size_t a = 0; a < states.size(); ++a) {
    VQEID_REQUIRE(states[a].dim() == truth.subspace.front().dim(),
                  "candidate and ground-state registers differ");
    for (std::size_t b = a; b < states.size(); ++b) {
      const complex_t g = states[a].inner(states[b]);
      const double want = a == b ? 1.0 : 0.0;
      VQEID_REQUIRE(std::abs(g - want) <= 1e-10,
                    "candidate states are not orthonormal");
    }
  }
  const auto m = static_cast<Eigen::Index>(states.size());
  const auto d = static_cast<Eigen::Index>(truth.subspace.size());
  Eigen::MatrixXcd beta(m, d);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index v = 0; v < d; ++v) {
      beta(j, v) = states[static_cast<std::size_t>(j)].inner(
          truth.subspace[static_cast<std::size_t>(v)]);
    }
  }
  return from_overlaps(beta);
}

Superposition optimal_superposition(const encoder::BasisSet& basis,
                                    const sim::GroundTruth& truth) {
  basis.validate();
  VQEID_REQUIRE(!truth.subspace.empty(), "ground subspace is empty");
  VQEID_REQUIRE(truth.subspace.front().n_qubits() == basis.n_qubits,
                "basis and ground-state registers differ");
  const auto m = static_cast<Eigen::Index>(basis.members.size());
  const auto d = static_cast<Eigen::Index>(truth.subspace.size());
  Eigen::MatrixXcd beta(m, d);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index v = 0; v < d; ++v) {
      beta(j, v) = truth.subspace[static_cast<std::size_t>(v)]
                                 [basis.members[static_cast<std::size_t>(j)]];
    }
  }
  return from_overlaps(beta);
}

}  // namespace vqeid::vqe
