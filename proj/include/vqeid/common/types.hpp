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
#include <cstddef>
#include <cstdint>

namespace vqeid {

using complex_t = std::complex<double>;

/// Computational-basis index. Qubit 0 is the least-significant bit.
using basis_index = std::uint64_t;

/// Largest register the dense oracles accept (2^14 amplitudes).
inline constexpr std::size_t kMaxDenseQubits = 14;

/// Largest register a statevector may hold.
inline constexpr std::size_t kMaxQubits = 24;

}  // namespace vqeid
