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
#include <CLI11.hpp>

#include <cstdio>
#include <sstream>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vqeid/bench/config.hpp"
#include "vqeid/bench/experiment.hpp"
#include "vqeid/common/error.hpp"
#include "vqeid/encoder/encoder.hpp"
#include "vqeid/sim/statevector.hpp"

namespace {

using namespace vqeid;
using namespace vqeid::bench;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct RunFlags {
  std::string config;
  std::optional<std::size_t> seeds, workers, shots;
  std::optional<std::uint64_t> master_seed;
  std::optional<std::string> out;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config, "experiment config file")->required();
  cmd->add_option("--seeds", f.seeds, "number of seeds");
  cmd->add_option("--master-seed", f.master_seed, "master seed");
  cmd->add_option("--workers", f.workers, "worker threads");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--shots", f.shots, "shot count for candidate scoring");
}

std::vector<Override> overrides_of(const RunFlags& f) {
  std::vector<Override> o;
  if (f.seeds) o.emplace_back("run.seeds", std::to_string(*f.seeds));
  if (f.master_seed) {
    o.emplace_back("run.master_seed", std::to_string(*f.master_seed));
  }
  if (f.workers) o.emplace_back("run.workers", std::to_string(*f.workers));
  if (f.out) o.emplace_back("run.out", *f.out);
  if (f.shots) o.emplace_back("run.shots", std::to_string(*f.shots));
  return o;
}

void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

void report(const JobResult& r, std::size_t done, std::size_t total) {
  if (!r.error.empty()) {
    std::fprintf(stderr, "[%zu/%zu] seed %zu %s p%zu m%zu aborted: %s\n", done,
                 total, r.job.seed, std::string(vqe::to_string(r.job.arm)).c_str(),
                 r.job.depth, r.job.m, r.error.c_str());
    return;
  }
  std::fprintf(stderr, "[%zu/%zu] seed %zu %s p%zu m%zu F=%.6f E=%.8f N_I=%zu\n",
               done, total, r.job.seed,
               std::string(vqe::to_string(r.job.arm)).c_str(), r.job.depth,
               r.job.m, r.record.fidelity, r.record.final_energy,
               r.record.n_iterations);
}

int run_jobs(const ExperimentConfig& cfg, const std::vector<Job>& jobs,
             bool m_sweep) {
  const auto setup = prepare(cfg.model);
  const auto results = execute(cfg, setup, jobs, cfg.run.out, report);
  const std::filesystem::path out(cfg.run.out);
  write_text(out / "summary.csv", summary_csv(results, setup));
  write_text(out / "resources.txt", resource_table(results));
  if (m_sweep) write_text(out / "sweep_m.csv", sweep_m_csv(results));
  std::size_t aborted = 0;
  for (const auto& r : results) aborted += !r.error.empty();
  std::fprintf(stderr, "E0 = %.12f, %zu runs, %zu aborted, output in %s\n",
               setup.truth.energy, results.size(), aborted,
               cfg.run.out.c_str());
  return aborted ? kExitRuntime : 0;
}

// `dump` accepts a family or ansatz kind as a bare word and key=value pairs;
// n and p abbreviate model.sites and ansatz.depth.
std::vector<Override> dump_overrides(const std::vector<std::string>& tokens) {
  std::vector<Override> o;
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      if (models::parse_model_family(t)) {
        o.emplace_back("model.family", t);
      } else if (t == "hea" || t == "hva") {
        o.emplace_back("ansatz.kind", t);
      } else {
        throw ConfigError(0, "dump: unrecognised argument '" + t + "'");
      }
      continue;
    }
    std::string key = t.substr(0, eq);
    if (key == "n") key = "model.sites";
    if (key == "p") key = "ansatz.depth";
    if (key == "members") key = "encoder.members";
    o.emplace_back(key, t.substr(eq + 1));
  }
  return o;
}

std::string dump(const std::string& selector, const std::string& config_path,
                 const std::vector<std::string>& tokens) {
  if (selector != "model" && selector != "circuit" && selector != "encoder") {
    throw ConfigError(0, "dump: unknown selector '" + selector +
                             "' (expected model, circuit or encoder)");
  }
  const auto o = dump_overrides(tokens);
  auto cfg = config_path.empty() ? parse_config("", o, false)
                                 : load_config(config_path, o, false);
  // Unset couplings default to 1 so structural dumps need no physics input.
  for (const auto& name : models::required_parameters(cfg.model.family)) {
    cfg.model.parameters.try_emplace(name, 1.0);
  }
  cfg.validate();
  if (selector == "model") return models::build_hamiltonian(cfg.model).to_text();
  if (selector == "circuit") return build_ansatz(cfg, cfg.ansatz.depth).to_text();

  if (cfg.encoder.members.empty()) {
    throw ConfigError(0, "encoder.members: required for dump encoder");
  }
  encoder::BasisSet basis;
  basis.n_qubits = cfg.model.n_qubits();
  basis.members = cfg.encoder.members;
  basis.reference = cfg.encoder.reference.value_or(basis.members.front());
  const auto enc = encoder::synthesize(basis);
  std::ostringstream os;
  os << "# basis " << basis.to_text() << "\n# reference " << basis.reference
     << " root " << enc.root << "\n";
  for (std::size_t k = 0; k < enc.plan.size(); ++k) {
    const auto& s = enc.plan[k];
    os << "# merge " << k << " keep " << s.keep << " drop " << s.drop
       << " pivot " << s.pivot << " cnots";
    for (auto t : s.cnot_targets) os << ' ' << t;
    os << " controls";
    for (auto c : s.controls) os << ' ' << c;
    os << " values " << s.control_values << "\n";
  }
  os << enc.circuit.to_text();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statevector workbench for VQE input-state design"};
  app.require_subcommand(1);

  RunFlags run_flags, depth_flags, m_flags;
  auto* run = app.add_subcommand("run", "run the configured depth(s), all seeds and arms");
  add_run_flags(run, run_flags);
  auto* sweep_depth = app.add_subcommand("sweep-depth", "run every depth in ansatz.depths");
  add_run_flags(sweep_depth, depth_flags);
  auto* sweep_m = app.add_subcommand("sweep-m", "enhanced arm for each m on the ansatz.depth base");
  add_run_flags(sweep_m, m_flags);
  std::string m_list;
  sweep_m->add_option("--m-list", m_list, "comma-separated m values (overrides selection.m_list)");

  auto* theorem1 = app.add_subcommand("theorem1", "optimal-superposition property suite");
  std::size_t t_n = 6, t_n_min = 1, t_trials = 1000;
  std::uint64_t t_seed = 1;
  theorem1->add_option("--n", t_n, "largest qubit count (<= 10)");
  theorem1->add_option("--n-min", t_n_min, "smallest qubit count");
  theorem1->add_option("--trials", t_trials, "random instances");
  theorem1->add_option("--seed", t_seed, "seed");

  auto* dump_cmd = app.add_subcommand("dump", "print the model, circuit or encoder text form");
  std::string selector, dump_config;
  std::vector<std::string> dump_tokens;
  dump_cmd->add_option("selector", selector, "model | circuit | encoder")->required();
  dump_cmd->add_option("args", dump_tokens, "family, ansatz kind, key=value");
  dump_cmd->add_option("--config", dump_config, "experiment config file");

  auto* schema = app.add_subcommand("schema", "document output columns and config keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run || *sweep_depth) {
      const auto& f = *run ? run_flags : depth_flags;
      const auto cfg = load_config(f.config, overrides_of(f));
      auto depths = cfg.ansatz.depths;
      if (depths.empty()) {
        if (*sweep_depth) throw ConfigError(0, "ansatz.depths: required for sweep-depth");
        depths = {cfg.ansatz.depth};
      }
      return run_jobs(cfg, plan_depths(cfg, depths), false);
    }
    if (*sweep_m) {
      auto o = overrides_of(m_flags);
      if (!m_list.empty()) o.emplace_back("selection.m_list", m_list);
      auto cfg = load_config(m_flags.config, o);
      if (cfg.m_list.empty()) throw ConfigError(0, "selection.m_list: required for sweep-m");
      if (cfg.run.arm == ArmChoice::baseline) {
        throw ConfigError(0, "run.arm: sweep-m runs the enhanced arm");
      }
      return run_jobs(cfg, plan_m(cfg, cfg.m_list), true);
    }
    if (*theorem1) {
      const auto rep = theorem1_suite(t_n_min, t_n, t_trials, t_seed);
      std::cout << rep.to_text();
      return rep.pass ? 0 : kExitRuntime;
    }
    if (*dump_cmd) {
      std::cout << dump(selector, dump_config, dump_tokens);
      return 0;
    }
    if (*schema) {
      std::cout << schema_text() << "\nconfig keys\n" << config_keys_help();
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
