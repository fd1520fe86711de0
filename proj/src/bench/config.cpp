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
#include "vqeid/bench/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "vqeid/sim/statevector.hpp"

namespace vqeid::bench {

DepthConvention AnsatzConfig::effective_convention() const {
  if (convention) return *convention;
  return kind == AnsatzKind::hea ? DepthConvention::replace
                                 : DepthConvention::add;
}

ConfigError::ConfigError(std::size_t line, const std::string& msg)
    : InputError(line ? "line " + std::to_string(line) + ": " + msg : msg),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Ctx {
  std::size_t line;
  std::string key;
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(line, key + ": " + what);
  }
};

std::uint64_t to_uint(const Ctx& c, std::string_view v) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    c.fail("expected an unsigned integer, got '" + std::string(v) + "'");
  }
  return out;
}

double to_double(const Ctx& c, std::string_view v) {
  double out = 0.0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) {
    c.fail("expected a finite number, got '" + std::string(v) + "'");
  }
  return out;
}

bool to_bool(const Ctx& c, std::string_view v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  c.fail("expected true or false, got '" + std::string(v) + "'");
}

// Integer, or 0b-prefixed bitstring read left to right as qubit n-1 ... 0.
basis_index to_index(const Ctx& c, std::string_view v) {
  if (v.starts_with("0b")) {
    try {
      return sim::parse_bitstring(v.substr(2));
    } catch (const InputError&) {
      c.fail("malformed bitstring '" + std::string(v) + "'");
    }
  }
  return to_uint(c, v);
}

template <typename F>
auto to_list(const Ctx& c, std::string_view v, F item) {
  std::vector<decltype(item(c, v))> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    const auto tok = trim(v.substr(0, comma));
    if (tok.empty()) c.fail("empty list element");
    out.push_back(item(c, tok));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  if (out.empty()) c.fail("expected a comma-separated list");
  return out;
}

template <typename E>
E to_enum(const Ctx& c, std::string_view v,
          std::initializer_list<std::pair<std::string_view, E>> options,
          const char* what) {
  std::string names;
  for (const auto& [name, e] : options) {
    if (name == v) return e;
    if (!names.empty()) names += ", ";
    names += name;
  }
  c.fail(std::string("unknown ") + what + " '" + std::string(v) +
         "' (expected " + names + ")");
}

using Setter = std::function<void(ExperimentConfig&, const Ctx&,
                                  std::string_view)>;

struct KeyInfo {
  Setter set;
  const char* help;
};

const std::map<std::string, KeyInfo>& key_table() {
  static const std::map<std::string, KeyInfo> table = [] {
    std::map<std::string, KeyInfo> t;
    auto param = [](const char* name) {
      return [name](ExperimentConfig& e, const Ctx& c, std::string_view v) {
        e.model.parameters[name] = to_double(c, v);
      };
    };
    t["model.family"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          auto f = models::parse_model_family(v);
          if (!f) {
            c.fail("unknown family '" + std::string(v) +
                   "' (expected tfim_1d, tfim_2d, cluster_ising, hubbard)");
          }
          e.model.family = *f;
        },
        "tfim_1d | tfim_2d | cluster_ising | hubbard"};
    t["model.sites"] = {[](ExperimentConfig& e, const Ctx& c,
                           std::string_view v) { e.model.sites = to_uint(c, v); },
                        "chain length (tfim_1d, cluster_ising) or site count "
                        "(hubbard)"};
    t["model.rows"] = {[](ExperimentConfig& e, const Ctx& c,
                          std::string_view v) { e.model.rows = to_uint(c, v); },
                       "tfim_2d lattice rows"};
    t["model.cols"] = {[](ExperimentConfig& e, const Ctx& c,
                          std::string_view v) { e.model.cols = to_uint(c, v); },
                       "tfim_2d lattice columns"};
    t["model.periodic"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.model.periodic = to_bool(c, v);
        },
        "boundary override (default: periodic TFIM, open otherwise)"};
    t["model.J"] = {param("J"), "coupling J (tfim, cluster_ising)"};
    t["model.h"] = {param("h"), "transverse field h (tfim)"};
    t["model.h1"] = {param("h1"), "XX coupling h1 (cluster_ising)"};
    t["model.h2"] = {param("h2"), "field h2 (cluster_ising)"};
    t["model.t"] = {param("t"), "hopping t (hubbard)"};
    t["model.U"] = {param("U"), "on-site interaction U (hubbard)"};
    t["model.n_up"] = {[](ExperimentConfig& e, const Ctx& c,
                          std::string_view v) { e.model.n_up = to_uint(c, v); },
                       "spin-up particle number (hubbard)"};
    t["model.n_down"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.model.n_down = to_uint(c, v);
        },
        "spin-down particle number (hubbard)"};
    t["model.reference"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.model.reference = to_index(c, v);
        },
        "input basis state: integer or 0b-prefixed bitstring"};

    t["ansatz.kind"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.ansatz.kind = to_enum<AnsatzKind>(
              c, v, {{"hea", AnsatzKind::hea}, {"hva", AnsatzKind::hva}},
              "ansatz");
        },
        "hea | hva"};
    t["ansatz.depth"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.ansatz.depth = to_uint(c, v);
        },
        "depth budget p for run and sweep-m"};
    t["ansatz.depths"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.ansatz.depths = to_list(c, v, [](const Ctx& cc, std::string_view s) {
            return static_cast<std::size_t>(to_uint(cc, s));
          });
        },
        "depth budgets for sweep-depth, comma-separated"};
    t["ansatz.entangler"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.ansatz.entangler = to_enum<circuits::Entangler>(
              c, v,
              {{"ring", circuits::Entangler::ring},
               {"chain", circuits::Entangler::chain}},
              "entangler");
        },
        "ring | chain (hea)"};
    t["ansatz.sharing"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.ansatz.sharing = to_enum<circuits::ParameterSharing>(
              c, v,
              {{"shared", circuits::ParameterSharing::shared},
               {"per_gate", circuits::ParameterSharing::per_gate}},
              "sharing");
        },
        "shared | per_gate (hva parameter slots)"};
    t["ansatz.convention"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.ansatz.convention = to_enum<DepthConvention>(
              c, v,
              {{"replace", DepthConvention::replace},
               {"add", DepthConvention::add}},
              "convention");
        },
        "replace | add: whether the encoder takes one layer of the budget"};

    t["run.arm"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.run.arm = to_enum<ArmChoice>(c, v,
                                         {{"baseline", ArmChoice::baseline},
                                          {"enhanced", ArmChoice::enhanced},
                                          {"both", ArmChoice::both}},
                                         "arm");
        },
        "baseline | enhanced | both"};
    t["run.seeds"] = {[](ExperimentConfig& e, const Ctx& c,
                         std::string_view v) { e.run.seeds = to_uint(c, v); },
                      "number of seeds"};
    t["run.master_seed"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.run.master_seed = to_uint(c, v);
        },
        "master seed for all random streams"};
    t["run.workers"] = {[](ExperimentConfig& e, const Ctx& c,
                           std::string_view v) { e.run.workers = to_uint(c, v); },
                        "worker threads"};
    t["run.out"] = {[](ExperimentConfig& e, const Ctx&,
                       std::string_view v) { e.run.out = std::string(v); },
                    "output directory"};
    t["run.shots"] = {[](ExperimentConfig& e, const Ctx& c,
                         std::string_view v) { e.run.shots = to_uint(c, v); },
                      "shot count for candidate scoring (exact when absent)"};

    t["selection.M"] = {[](ExperimentConfig& e, const Ctx& c,
                           std::string_view v) { e.selection.M = to_uint(c, v); },
                        "sampled candidates M"};
    t["selection.m"] = {[](ExperimentConfig& e, const Ctx& c,
                           std::string_view v) { e.selection.m = to_uint(c, v); },
                        "selected states m (reference included)"};
    t["selection.rule"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.selection.rule = to_enum<vqe::ThresholdRule>(
              c, v,
              {{"offset", vqe::ThresholdRule::offset},
               {"percentile", vqe::ThresholdRule::percentile},
               {"absolute", vqe::ThresholdRule::absolute}},
              "threshold rule");
        },
        "offset | percentile | absolute"};
    t["selection.rule_value"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.selection.rule_value = to_double(c, v);
        },
        "delta (offset), q in [0,100] (percentile) or T_e (absolute)"};
    t["selection.greedy"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.selection.greedy = to_bool(c, v);
        },
        "take the lowest-scoring pool members instead of a random draw"};
    t["selection.m_list"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.m_list = to_list(c, v, [](const Ctx& cc, std::string_view s) {
            return static_cast<std::size_t>(to_uint(cc, s));
          });
        },
        "m values for sweep-m, comma-separated"};

    t["optimizer.method"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.method = to_enum<vqe::OptimizerMethod>(
              c, v,
              {{"adam", vqe::OptimizerMethod::adam},
               {"gradient-descent", vqe::OptimizerMethod::gradient_descent}},
              "method");
        },
        "adam | gradient-descent"};
    t["optimizer.learning_rate"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.learning_rate = to_double(c, v);
        },
        "step size"};
    t["optimizer.beta1"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.beta1 = to_double(c, v);
        },
        "Adam first-moment decay"};
    t["optimizer.beta2"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.beta2 = to_double(c, v);
        },
        "Adam second-moment decay"};
    t["optimizer.pretrain_grad_tol"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.pretrain_grad_tol = to_double(c, v);
        },
        "gradient-norm stopping threshold"};
    t["optimizer.pretrain_max_iters"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.pretrain_max_iters = to_uint(c, v);
        },
        "iteration cap for pretraining (and the baseline arm)"};
    t["optimizer.joint_iters"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.joint_iters = to_uint(c, v);
        },
        "joint-phase iterations T"};
    t["optimizer.gradient_mode"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.optimizer.gradient_mode = to_enum<vqe::GradientMode>(
              c, v,
              {{"adjoint", vqe::GradientMode::adjoint},
               {"finite-difference", vqe::GradientMode::finite_difference}},
              "gradient mode");
        },
        "adjoint | finite-difference"};

    t["encoder.members"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.encoder.members = to_list(c, v, to_index);
        },
        "basis set for `dump encoder`, comma-separated"};
    t["encoder.reference"] = {
        [](ExperimentConfig& e, const Ctx& c, std::string_view v) {
          e.encoder.reference = to_index(c, v);
        },
        "reference member for `dump encoder` (default: first member)"};
    return t;
  }();
  return table;
}

}  // namespace

void ExperimentConfig::validate() const {
  auto wrap = [](auto&& fn) {
    try {
      fn();
    } catch (const ConfigError&) {
      throw;
    } catch (const InputError& e) {
      throw ConfigError(0, e.what());
    }
  };
  wrap([&] { model.validate(); });
  wrap([&] { optimizer.validate(); });
  if (run.arm != ArmChoice::baseline) wrap([&] { selection.validate(); });
  if (ansatz.depth < 1) throw ConfigError(0, "ansatz.depth must be >= 1");
  for (auto d : ansatz.depths) {
    if (d < 1) throw ConfigError(0, "ansatz.depths entries must be >= 1");
  }
  for (auto m : m_list) {
    if (m < 1) throw ConfigError(0, "selection.m_list entries must be >= 1");
  }
  if (run.seeds < 1) throw ConfigError(0, "run.seeds must be >= 1");
  if (run.workers < 1) throw ConfigError(0, "run.workers must be >= 1");
  if (run.shots && *run.shots < 1) {
    throw ConfigError(0, "run.shots must be >= 1");
  }
  if (ansatz.kind == AnsatzKind::hea && model.n_qubits() < 2) {
    throw ConfigError(0, "ansatz.kind: hea needs at least 2 qubits");
  }
}

ExperimentConfig parse_config(std::string_view text,
                              const std::vector<Override>& overrides,
                              bool validate) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  const auto& table = key_table();
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    auto it = table.find(key);
    if (it == table.end()) {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(line_no, "key '" + key + "' set twice");
    }
    if (value.empty()) throw ConfigError(line_no, key + ": missing value");
    it->second.set(cfg, Ctx{line_no, key}, value);
  }
  for (const auto& [key, value] : overrides) {
    auto it = table.find(key);
    if (it == table.end()) throw ConfigError(0, "unknown key '" + key + "'");
    const auto v = trim(value);
    if (v.empty()) throw ConfigError(0, key + ": missing value");
    it->second.set(cfg, Ctx{0, key}, v);
  }
  if (validate) cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path,
                             const std::vector<Override>& overrides,
                             bool validate) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str(), overrides, validate);
}

std::string config_keys_help() {
  std::ostringstream os;
  for (const auto& [key, info] : key_table()) {
    os << key << "  " << info.help << '\n';
  }
  return os.str();
}

}  // namespace vqeid::bench
