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

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "vqeid/common/types.hpp"
#include "vqeid/sim/statevector.hpp"

namespace vqeid::testing {

inline std::vector<complex_t> random_amplitudes(std::size_t n,
                                                std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<complex_t> v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& x : v) {
    x = {g(rng), g(rng)};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

inline sim::Statevector random_state(std::size_t n, std::mt19937_64& rng) {
  return sim::Statevector::from_amplitudes(random_amplitudes(n, rng));
}

inline Eigen::VectorXcd to_eigen(const sim::Statevector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

inline std::vector<double> random_angles(std::size_t k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.2, 3.2);
  std::vector<double> v(k);
  for (auto& x : v) x = u(rng);
  return v;
}

inline double max_abs_diff(const sim::Statevector& a, const Eigen::VectorXcd& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    d = std::max(d, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
  }
  return d;
}

}  // namespace vqeid::testing
