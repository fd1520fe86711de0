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
#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vqeid/common/error.hpp"
#include "vqeid/pauli/pauli_sum.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid {
namespace {

using pauli::PauliString;
using pauli::PauliSum;

TEST(PauliString, ParsesAndPrints) {
  const auto s = PauliString::parse(4, "Z3 X0 Y1");
  EXPECT_EQ(s.to_string(), "X0 Y1 Z3");
  EXPECT_EQ(s.x_mask(), 0b0011u);
  EXPECT_EQ(s.z_mask(), 0b1010u);
  EXPECT_EQ(s.y_count(), 1u);
  EXPECT_FALSE(s.is_real());
  EXPECT_TRUE(PauliString::parse(3, "I").is_identity());
}

TEST(PauliString, RejectsMalformedInput) {
  EXPECT_THROW(PauliString::parse(2, "X2"), InputError);
  EXPECT_THROW(PauliString::parse(2, "X0 Z0"), InputError);
  EXPECT_THROW(PauliString::parse(2, "Q1"), InputError);
}

TEST(PauliAction, MatchesKroneckerMatrix) {
  std::mt19937_64 rng(3);
  const char* letters = "IXYZ";
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::string text;
    for (std::size_t q = 0; q < n; ++q) {
      const char c = letters[rng() % 4];
      if (c != 'I') text += std::string(1, c) + std::to_string(q) + " ";
    }
    if (text.empty()) text = "I";
    const auto s = PauliString::parse(n, text);
    const auto dense = oracle::kron_string(s);
    const pauli::PauliAction act(s);
    for (basis_index i = 0; i < (basis_index{1} << n); ++i) {
      const auto j = i ^ act.x_mask;
      EXPECT_NEAR(std::abs(dense(static_cast<Eigen::Index>(j),
                                 static_cast<Eigen::Index>(i)) -
                           act.phase(i)),
                  0.0, 1e-15)
          << text << " column " << i;
    }
  }
}

TEST(PauliSum, MergesDuplicatesAndComparesCanonically) {
  const auto a = PauliSum::parse(2, "1.0 Z0 Z1\n0.5 X0\n0.5 X0\n");
  const auto b = PauliSum::parse(2, "1.0 X0\n1.0 Z0 Z1\n");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_DOUBLE_EQ(a.coefficient_l1(), 2.0);
  const auto zero = PauliSum::parse(1, "1.0 X0\n-1.0 X0\n");
  EXPECT_TRUE(zero.empty());
}

TEST(PauliSum, TextRoundTrip) {
  const auto h = PauliSum::parse(3, "-1.25 Z0 Z1\n0.5 Y0 Y2\n2 I\n");
  EXPECT_EQ(PauliSum::parse(3, h.to_text()), h);
}

TEST(PauliSum, DenseMatrixAndExpectationMatchOracle) {
  std::mt19937_64 rng(11);
  const auto h = PauliSum::parse(
      3, "0.7 X0 X1\n-0.3 Y1 Y2\n1.1 Z0\n0.2 Z0 X1 Z2\n-0.4 I\n0.9 Y0 Z2\n");
  const auto dense = oracle::kron_sum(h);
  EXPECT_LT((pauli::to_dense_matrix(h) - dense).cwiseAbs().maxCoeff(), 1e-14);
  for (int t = 0; t < 10; ++t) {
    const auto psi = testing::random_state(3, rng);
    const auto v = testing::to_eigen(psi);
    EXPECT_NEAR(sim::expectation(psi, h), v.dot(dense * v).real(), 1e-13);
  }
}

TEST(PauliSum, ApplySumMatchesOracle) {
  std::mt19937_64 rng(5);
  const auto h = PauliSum::parse(4, "0.5 X0 Y3\n-1 Z1 Z2\n0.25 Y1\n");
  const auto psi = testing::random_state(4, rng);
  std::vector<complex_t> out(psi.dim());
  pauli::apply_sum(h, psi.amplitudes(), out);
  const Eigen::VectorXcd ref = oracle::kron_sum(h) * testing::to_eigen(psi);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_NEAR(std::abs(out[i] - ref(static_cast<Eigen::Index>(i))), 0.0, 1e-14);
  }
}

}  // namespace
}  // namespace vqeid
