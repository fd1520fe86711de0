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
#include "vqeid/sim/ground_truth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <type_traits>
#include <string>

#include <Eigen/Dense>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "vqeid/common/error.hpp"

namespace vqeid::sim {

namespace {

struct LowSpectrum {
  std::vector<double> values;
  Eigen::MatrixXcd vectors;  // columns, sector coordinates
};

// Lowest k eigenpairs of a real symmetric matrix.
LowSpectrum lowest_real(const Eigen::MatrixXd& a, int k) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd work = a;
  std::vector<double> w(n);
  Eigen::MatrixXd z(n, k);
  std::vector<lapack_int> isuppz(2 * std::max(1, k));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0, 1, k, 0.0,
      &found, w.data(), z.data(), n, isuppz.data());
  if (info != 0) {
    throw RunAborted("dsyevr failed with info " + std::to_string(info));
  }
  LowSpectrum out;
  out.values.assign(w.begin(), w.begin() + found);
  out.vectors = z.leftCols(found).cast<complex_t>();
  return out;
}

LowSpectrum lowest_complex(const Eigen::MatrixXcd& a, int k) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd work = a;
  std::vector<double> w(n);
  Eigen::MatrixXcd z(n, k);
  std::vector<lapack_int> isuppz(2 * std::max(1, k));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0, 1, k, 0.0,
      &found, w.data(), z.data(), n, isuppz.data());
  if (info != 0) {
    throw RunAborted("zheevr failed with info " + std::to_string(info));
  }
  LowSpectrum out;
  out.values.assign(w.begin(), w.begin() + found);
  out.vectors = z.leftCols(found);
  return out;
}

template <typename Matrix>
GroundTruth ground_from_dense(const Matrix& m, double tol,
                              std::size_t n_qubits,
                              std::span<const basis_index> embed) {
  const int n = static_cast<int>(m.rows());
  int k = std::min(n, 8);
  LowSpectrum spec;
  for (;;) {
    if constexpr (std::is_same_v<Matrix, Eigen::MatrixXd>) {
      spec = lowest_real(m, k);
    } else {
      spec = lowest_complex(m, k);
    }
    // Widen the window until the last eigenvalue sits outside it.
    if (k == n || spec.values.back() - spec.values.front() > tol) break;
    k = std::min(n, 2 * k);
  }
  GroundTruth g;
  g.energy = spec.values.front();
  g.degeneracy_tolerance = tol;
  for (std::size_t c = 0; c < spec.values.size(); ++c) {
    if (spec.values[c] - g.energy > tol) break;
    std::vector<complex_t> amps(std::size_t{1} << n_qubits,
                                complex_t{0.0, 0.0});
    for (int r = 0; r < n; ++r) {
      const basis_index idx = embed.empty() ? static_cast<basis_index>(r)
                                            : embed[static_cast<std::size_t>(r)];
      amps[idx] = spec.vectors(r, static_cast<Eigen::Index>(c));
    }
    g.subspace.push_back(Statevector::from_amplitudes(std::move(amps), 1e-8));
  }
  return g;
}

}  // namespace

double default_degeneracy_tolerance(const pauli::PauliSum& h) {
  return std::max(1e-8 * 2.0 * h.coefficient_l1(), 1e-14);
}

GroundTruth exact_ground(const pauli::PauliSum& h,
                         std::optional<double> degeneracy_tolerance) {
  VQEID_REQUIRE(h.n_qubits() >= 1 && h.n_qubits() <= kMaxDenseQubits,
                "dense ground truth needs 1.." +
                    std::to_string(kMaxDenseQubits) + " qubits");
  const double tol =
      degeneracy_tolerance.value_or(default_degeneracy_tolerance(h));
  VQEID_REQUIRE(tol >= 0.0, "degeneracy tolerance must be non-negative");
  if (h.is_real()) {
    return ground_from_dense(pauli::to_dense_real_matrix(h), tol,
                             h.n_qubits(), {});
  }
  return ground_from_dense(pauli::to_dense_matrix(h), tol, h.n_qubits(), {});
}

GroundTruth exact_ground_in_sector(const pauli::PauliSum& h,
                                   std::span<const basis_index> sector,
                                   std::optional<double> degeneracy_tolerance) {
  const std::size_t n = h.n_qubits();
  VQEID_REQUIRE(n >= 1 && n <= kMaxQubits, "register too large");
  VQEID_REQUIRE(!sector.empty(), "empty sector");
  VQEID_REQUIRE(sector.size() <= (std::size_t{1} << kMaxDenseQubits),
                "sector too large for dense diagonalisation");
  const double tol =
      degeneracy_tolerance.value_or(default_degeneracy_tolerance(h));
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::int64_t> position(dim, -1);
  for (std::size_t s = 0; s < sector.size(); ++s) {
    VQEID_REQUIRE(sector[s] < dim, "sector index outside the register");
    VQEID_REQUIRE(position[sector[s]] < 0, "duplicate sector index");
    position[sector[s]] = static_cast<std::int64_t>(s);
  }
  const auto d = static_cast<Eigen::Index>(sector.size());
  std::vector<pauli::PauliAction> actions;
  for (const auto& term : h.terms()) actions.emplace_back(term.string);
  // Columns are built in the full register so that leakage from individual
  // terms can cancel (XX + YY hopping) before the invariance check.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  std::vector<complex_t> column(dim);
  for (Eigen::Index c = 0; c < d; ++c) {
    const basis_index i = sector[static_cast<std::size_t>(c)];
    std::fill(column.begin(), column.end(), complex_t{});
    for (std::size_t k = 0; k < actions.size(); ++k) {
      // P|i> = phase(i) |i ^ x>
      column[i ^ actions[k].x_mask] += h.terms()[k].coeff * actions[k].phase(i);
    }
    for (basis_index j = 0; j < dim; ++j) {
      if (position[j] >= 0) {
        m(position[j], c) = column[j];
      } else {
        VQEID_REQUIRE(std::abs(column[j]) < 1e-12 * (1.0 + h.coefficient_l1()),
                      "operator does not preserve the sector");
      }
    }
  }
  if (h.is_real()) {
    return ground_from_dense(Eigen::MatrixXd(m.real()), tol, n, sector);
  }
  return ground_from_dense(m, tol, n, sector);
}

double fidelity(const Statevector& state, const GroundTruth& truth) {
  double f = 0.0;
  for (const auto& v : truth.subspace) f += std::norm(v.inner(state));
  return f;
}

}  // namespace vqeid::sim
