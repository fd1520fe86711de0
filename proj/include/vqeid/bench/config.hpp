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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vqeid/circuits/builders.hpp"
#include "vqeid/common/error.hpp"
#include "vqeid/common/types.hpp"
#include "vqeid/models/model_spec.hpp"
#include "vqeid/vqe/optimizer.hpp"
#include "vqeid/vqe/selection.hpp"

namespace vqeid::bench {

enum class AnsatzKind { hea, hva };
enum class ArmChoice { baseline, enhanced, both };

/// How the encoder enters the depth budget p: `replace` runs p - 1 ansatz
/// layers plus the encoder, `add` runs p ansatz layers plus the encoder.
enum class DepthConvention { replace, add };

struct AnsatzConfig {
  AnsatzKind kind = AnsatzKind::hea;
  std::size_t depth = 1;
  std::vector<std::size_t> depths;  // sweep-depth
  circuits::Entangler entangler = circuits::Entangler::ring;
  circuits::ParameterSharing sharing = circuits::ParameterSharing::shared;
  /// Unset: replace for HEA, add for HVA.
  std::optional<DepthConvention> convention;

  DepthConvention effective_convention() const;
};

struct RunConfig {
  ArmChoice arm = ArmChoice::both;
  std::size_t seeds = 10;
  std::uint64_t master_seed = 1;
  std::size_t workers = 1;
  std::string out = "out";
  std::optional<std::size_t> shots;
};

struct EncoderConfig {
  std::vector<basis_index> members;
  std::optional<basis_index> reference;
};

struct ExperimentConfig {
  models::ModelSpec model;
  AnsatzConfig ansatz;
  RunConfig run;
  vqe::SelectionConfig selection;
  std::vector<std::size_t> m_list;  // sweep-m
  vqe::OptimizerConfig optimizer;
  EncoderConfig encoder;

  /// Cross-field checks; throws ConfigError naming the field.
  void validate() const;
};

/// Parse or validation failure. `line` is 0 when the problem is not tied to
/// a single line.
class ConfigError : public InputError {
 public:
  ConfigError(std::size_t line, const std::string& msg);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// `key = value` pair supplied outside a file, e.g. on the command line.
using Override = std::pair<std::string, std::string>;

/// Flat `key.path = value` grammar, one assignment per line, '#' starts a
/// comment. Unknown keys, repeated keys and malformed values are errors.
/// Overrides are applied after the text and may replace file values. With
/// `validate` unset the caller must call ExperimentConfig::validate itself.
ExperimentConfig parse_config(std::string_view text,
                              const std::vector<Override>& overrides = {},
                              bool validate = true);
ExperimentConfig load_config(const std::string& path,
                             const std::vector<Override>& overrides = {},
                             bool validate = true);

/// Every recognised key with a one-line description.
std::string config_keys_help();

}  // namespace vqeid::bench
