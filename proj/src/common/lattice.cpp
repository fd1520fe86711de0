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
#include "vqeid/common/lattice.hpp"

#include "vqeid/common/error.hpp"

namespace vqeid {

std::vector<Bond> chain_bonds(std::size_t n, bool periodic) {
  VQEID_REQUIRE(n >= 1, "empty chain");
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i + 1 < n; ++i) bonds.push_back({i, i + 1});
  if (periodic && n > 2) bonds.push_back({n - 1, 0});
  return bonds;
}

LatticeBonds grid_bonds(std::size_t rows, std::size_t cols, bool periodic) {
  VQEID_REQUIRE(rows >= 1 && cols >= 1, "empty lattice");
  LatticeBonds out;
  auto site = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (const Bond& b : chain_bonds(cols, periodic)) {
      out.horizontal.push_back({site(r, b.a), site(r, b.b)});
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    for (const Bond& b : chain_bonds(rows, periodic)) {
      out.vertical.push_back({site(b.a, c), site(b.b, c)});
    }
  }
  return out;
}

std::pair<std::vector<Bond>, std::vector<Bond>> odd_even_bonds(
    const std::vector<Bond>& chain) {
  std::vector<Bond> odd, even;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    // Bond k joins 1-based sites (k+1, k+2).
    ((k + 1) % 2 == 1 ? odd : even).push_back(chain[k]);
  }
  return {odd, even};
}

}  // namespace vqeid
