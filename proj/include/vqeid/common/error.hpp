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

#include <sstream>
#include <stdexcept>
#include <string>

namespace vqeid {

/// Raised when an operation is called with inputs that violate its contract
/// (dimension mismatches, out-of-range indices, malformed configs).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a run must be aborted mid-flight, e.g. a non-finite energy.
class RunAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
[[noreturn]] inline void fail_input(const char* expr, const std::string& msg,
                                    const char* file, int line) {
  std::ostringstream os;
  os << msg << " [" << expr << " failed at " << file << ":" << line << "]";
  throw InputError(os.str());
}
}  // namespace detail

}  // namespace vqeid

#define VQEID_REQUIRE(cond, msg)                                   \
  do {                                                             \
    if (!(cond)) {                                                 \
      ::vqeid::detail::fail_input(#cond, (msg), __FILE__, __LINE__); \
    }                                                              \
  } while (false)
