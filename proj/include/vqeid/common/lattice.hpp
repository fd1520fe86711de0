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

#include <cstddef>
#include <utility>
#include <vector>

namespace vqeid {

/// Undirected nearest-neighbour bond (a < b is not required; order is the
/// emission order).
struct Bond {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const Bond&, const Bond&) = default;
};

/// Bonds (i, i+1) of an n-site chain; the ring adds (n-1, 0). A two-site ring
/// is a single bond.
std::vector<Bond> chain_bonds(std::size_t n, bool periodic);

/// Bonds of a rows x cols lattice with site index r * cols + c. Horizontal
/// bonds come first. Periodic wrap bonds that would duplicate an existing bond
/// (extent 2) are dropped.
struct LatticeBonds {
  std::vector<Bond> horizontal;
  std::vector<Bond> vertical;
};
LatticeBonds grid_bonds(std::size_t rows, std::size_t cols, bool periodic);

/// Splits chain bonds (i, i+1) into the groups with odd and even 1-based i.
std::pair<std::vector<Bond>, std::vector<Bond>> odd_even_bonds(
    const std::vector<Bond>& chain);

}  // namespace vqeid
