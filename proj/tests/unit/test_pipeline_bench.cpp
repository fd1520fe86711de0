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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"

#include "vqeid/bench/config.hpp"
#include "vqeid/bench/experiment.hpp"
#include "vqeid/circuits/builders.hpp"
#include "vqeid/common/error.hpp"
#include "vqeid/models/model_spec.hpp"
#include "vqeid/sim/execute.hpp"
#include "vqeid/vqe/pipeline.hpp"

namespace vqeid {
namespace {

namespace fs = std::filesystem;

const char* kSmallTfim = R"(
model.family = tfim_1d
model.sites = 4
model.J = -1
model.h = -1.2
ansatz.kind = hea
ansatz.depth = 2
run.seeds = 2
selection.M = 12
selection.m = 3
optimizer.pretrain_max_iters = 150
optimizer.joint_iters = 20
)";

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("vqeid_test_" + name);
  fs::remove_all(p);
  return p;
}

struct Fixture {
  bench::ExperimentConfig cfg = bench::parse_config(kSmallTfim);
  bench::Setup setup = bench::prepare(cfg.model);
  circuits::Circuit ansatz = bench::build_ansatz(cfg, 2);
  vqe::Problem problem() const {
    vqe::Problem p;
    p.h = &setup.h;
    p.truth = &setup.truth;
    p.ansatz = &ansatz;
    p.reference = setup.reference;
    return p;
  }
  vqe::PipelineConfig pipeline(vqe::Arm arm) const {
    vqe::PipelineConfig pc;
    pc.arm = arm;
    pc.optimizer = cfg.optimizer;
    pc.selection = cfg.selection;
    return pc;
  }
};

TEST(Pipeline, BaselineRunsPretrainOnly) {
  Fixture f;
  const auto r = vqe::run_pipeline(f.problem(), f.pipeline(vqe::Arm::baseline), 1, 0);
  EXPECT_FALSE(r.joint_start.has_value());
  EXPECT_EQ(r.joint_iterations, 0u);
  EXPECT_EQ(r.n_iterations, r.pretrain_iterations);
  EXPECT_EQ(r.trace.size(), r.n_iterations);
  EXPECT_EQ(r.n_params, f.ansatz.n_params());
  EXPECT_EQ(r.cr(), r.n_iterations * r.n_params);
  EXPECT_FALSE(r.basis.has_value());
}

TEST(Pipeline, EnhancedAddsEncoderAndJointPhase) {
  Fixture f;
  const auto r = vqe::run_pipeline(f.problem(), f.pipeline(vqe::Arm::enhanced), 1, 0);
  ASSERT_TRUE(r.basis.has_value());
  EXPECT_EQ(r.basis->size(), 3u);
  EXPECT_EQ(r.gamma.size(), 4u);
  EXPECT_EQ(r.n_params, f.ansatz.n_params() + 4);
  ASSERT_TRUE(r.joint_start.has_value());
  EXPECT_EQ(*r.joint_start, r.pretrain_iterations);
  EXPECT_EQ(r.joint_iterations, 20u);
  EXPECT_EQ(r.trace[*r.joint_start].phase, "joint");
  for (const auto& e : r.trace) {
    EXPECT_GE(e.energy, f.setup.truth.energy - 1e-9);
    EXPECT_GE(e.fidelity, 0.0);
    EXPECT_LE(e.fidelity, 1.0 + 1e-12);
  }
  EXPECT_LE(r.min_energy, r.final_energy);
}

TEST(Pipeline, RunsAreReproducible) {
  Fixture f;
  const auto a = vqe::run_pipeline(f.problem(), f.pipeline(vqe::Arm::enhanced), 9, 1);
  const auto b = vqe::run_pipeline(f.problem(), f.pipeline(vqe::Arm::enhanced), 9, 1);
  EXPECT_EQ(a.to_jsonl(), b.to_jsonl());
  const auto c = vqe::run_pipeline(f.problem(), f.pipeline(vqe::Arm::enhanced), 9, 2);
  EXPECT_NE(a.to_jsonl(), c.to_jsonl());
}

TEST(Pipeline, TraceIsJsonLines) {
  Fixture f;
  const auto r = vqe::run_pipeline(f.problem(), f.pipeline(vqe::Arm::enhanced), 1, 0);
  std::istringstream in(r.to_jsonl());
  std::string line;
  std::size_t iterations = 0;
  nlohmann::json last;
  while (std::getline(in, line)) {
    last = nlohmann::json::parse(line);
    if (last["record"] == "iteration") ++iterations;
  }
  EXPECT_EQ(iterations, r.n_iterations);
  EXPECT_EQ(last["record"], "summary");
  EXPECT_EQ(last["C_R"].get<std::uint64_t>(), r.cr());
}

TEST(Config, ParsesEveryBlock) {
  const auto cfg = bench::parse_config(std::string(kSmallTfim) +
                                       "run.shots = 100\nselection.rule = percentile\n"
                                       "selection.rule_value = 30\n"
                                       "optimizer.method = gradient-descent\n"
                                       "model.reference = 0b0101\n");
  EXPECT_EQ(cfg.model.sites, 4u);
  EXPECT_EQ(cfg.run.shots, 100u);
  EXPECT_EQ(cfg.selection.rule, vqe::ThresholdRule::percentile);
  EXPECT_EQ(cfg.optimizer.method, vqe::OptimizerMethod::gradient_descent);
  EXPECT_EQ(cfg.model.reference, 5u);
  EXPECT_EQ(cfg.ansatz.effective_convention(), bench::DepthConvention::replace);
}

TEST(Config, ErrorsAreLineAnchored) {
  auto expect_error = [](const std::string& text, std::size_t line,
                         const std::string& fragment) {
    try {
      bench::parse_config(text);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const bench::ConfigError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error("# comment\nmodel.family = tfim_3d\n", 2, "model.family");
  expect_error("model.sites = four\n", 1, "model.sites");
  expect_error("model.sites = 4\nmodel.sites = 5\n", 2, "set twice");
  expect_error("bogus.key = 1\n", 1, "unknown key");
  expect_error("model.sites\n", 1, "key = value");
  expect_error("model.family = hubbard\nmodel.sites = 4\n", 0, "model");
}

TEST(Config, OverridesReplaceFileValues) {
  const auto cfg = bench::parse_config(kSmallTfim, {{"run.seeds", "7"}, {"run.out", "x"}});
  EXPECT_EQ(cfg.run.seeds, 7u);
  EXPECT_EQ(cfg.run.out, "x");
  EXPECT_THROW(bench::parse_config(kSmallTfim, {{"run.seeds", "-1"}}), bench::ConfigError);
}

TEST(Bench, DepthConventions) {
  auto cfg = bench::parse_config(kSmallTfim);
  EXPECT_EQ(bench::ansatz_layers(cfg, vqe::Arm::enhanced, 8), 7u);
  EXPECT_EQ(bench::ansatz_layers(cfg, vqe::Arm::baseline, 8), 8u);
  cfg.ansatz.kind = bench::AnsatzKind::hva;
  EXPECT_EQ(bench::ansatz_layers(cfg, vqe::Arm::enhanced, 8), 8u);
}

TEST(Bench, PlansCoverDepthsArmsAndSeeds) {
  const auto cfg = bench::parse_config(kSmallTfim);
  const auto jobs = bench::plan_depths(cfg, {2, 3});
  EXPECT_EQ(jobs.size(), 2u * 2u * 2u);
  const auto mjobs = bench::plan_m(cfg, {1, 2, 3});
  EXPECT_EQ(mjobs.size(), 3u * 2u);
  EXPECT_EQ(bench::trace_file_name(mjobs.back()), "trace-1-enhanced-p3-m3.jsonl");
}

TEST(Bench, SummaryColumnsAndResourceIdentity) {
  const auto cfg = bench::parse_config(kSmallTfim);
  const auto setup = bench::prepare(cfg.model);
  const auto out = scratch("summary");
  const auto results = bench::execute(cfg, setup, bench::plan_depths(cfg, {2}), out.string());
  const auto csv = bench::summary_csv(results, setup);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "seed,arm,depth,ansatz_layers,m,final_energy,exact_energy,fidelity,"
            "N_I,N_para,C_R,two_qubit_gates,one_qubit_gates,pretrain_iterations,"
            "joint_iterations,min_energy,selection_fallback");
  std::string row;
  std::size_t rows = 0;
  while (std::getline(in, row)) {
    std::vector<std::string> f;
    std::stringstream ss(row);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    ASSERT_EQ(f.size(), 17u);
    EXPECT_EQ(std::stoull(f[10]), std::stoull(f[8]) * std::stoull(f[9]));
    EXPECT_GE(std::stod(f[5]), std::stod(f[6]) - 1e-9);
    const double fid = std::stod(f[7]);
    EXPECT_GE(fid, 0.0);
    EXPECT_LE(fid, 1.0 + 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 4u);
  for (const auto& r : results) {
    EXPECT_TRUE(fs::exists(out / bench::trace_file_name(r.job)));
  }
  const auto table = bench::resource_table(results);
  EXPECT_NE(table.find("2-Qubit Gates"), std::string::npos);
  EXPECT_NE(table.find("C_R"), std::string::npos);
}

TEST(Bench, WorkerCountDoesNotChangeResults) {
  auto cfg = bench::parse_config(kSmallTfim);
  const auto setup = bench::prepare(cfg.model);
  const auto jobs = bench::plan_depths(cfg, {2});
  cfg.run.workers = 1;
  const auto a = bench::summary_csv(
      bench::execute(cfg, setup, jobs, scratch("w1").string()), setup);
  cfg.run.workers = 3;
  const auto b = bench::summary_csv(
      bench::execute(cfg, setup, jobs, scratch("w3").string()), setup);
  EXPECT_EQ(a, b);
}

TEST(Bench, SmokeConfigSolvesTwoQubitsQuickly) {
  const auto cfg = bench::load_config(std::string(VQEID_SOURCE_DIR) +
                                      "/tools/configs/smoke.cfg");
  const auto start = std::chrono::steady_clock::now();
  const auto setup = bench::prepare(cfg.model);
  const auto results = bench::execute(cfg, setup, bench::plan_depths(cfg, {2}),
                                      scratch("smoke").string());
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
  for (const auto& r : results) {
    if (r.job.arm == vqe::Arm::baseline) {
      EXPECT_NEAR(r.record.fidelity, 1.0, 1e-6);
    }
  }
}

TEST(Bench, MedianAndSweepTable) {
  EXPECT_DOUBLE_EQ(bench::median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(bench::median({4.0, 1.0, 2.0, 3.0}), 2.5);
  EXPECT_THROW(bench::median({}), InputError);
}

TEST(Bench, SuperpositionSuitePasses) {
  const auto rep = bench::theorem1_suite(3, 3, 1000, 1);
  EXPECT_TRUE(rep.pass) << rep.to_text();
  EXPECT_LT(rep.worst_equality, 1e-9);
}

TEST(Bench, SchemaDocumentsEverySummaryColumn) {
  const auto schema = bench::schema_text();
  for (const char* col : {"seed", "arm", "depth", "fidelity", "N_I", "C_R",
                          "two_qubit_gates", "min_energy", "selection_fallback"}) {
    EXPECT_NE(schema.find(col), std::string::npos) << col;
  }
}

// X on every qubit commutes with each on-site ZZ and each XX + YY hopping
// gate and maps the (2,2) sector onto itself. A half-filling bitstring has
// zero expectation of that flip, so it puts weight 1/2 in each flip-parity
// sector, and a bitstring-initialised Hubbard HVA cannot exceed fidelity 1/2
// with the (flip-symmetric) sector ground state.
TEST(Bench, HubbardHvaFromBitstringIsCappedAtOneHalf) {
  models::ModelSpec spec;
  spec.family = models::ModelFamily::hubbard;
  spec.sites = 4;
  spec.n_up = 2;
  spec.n_down = 2;
  spec.parameters = {{"t", 1.0}, {"U", 2.0}};
  const auto setup = bench::prepare(spec);
  const auto c = circuits::build_hva_hubbard(4, 3, circuits::ParameterSharing::per_gate);
  std::mt19937_64 rng(5);
  const auto in = sim::init_basis_state(8, setup.reference);
  const basis_index all = (basis_index{1} << 8) - 1;
  for (int t = 0; t < 20; ++t) {
    const auto out = sim::evolve(in, c, testing::random_angles(c.n_params(), rng));
    complex_t flip{};
    for (basis_index k = 0; k <= all; ++k) flip += std::conj(out[k]) * out[k ^ all];
    EXPECT_LT(std::abs(flip), 1e-12);
    EXPECT_LE(sim::fidelity(out, setup.truth), 0.5 + 1e-12);
  }
  // The ground state itself is a flip eigenstate.
  const auto& g = setup.truth.subspace.front();
  complex_t gflip{};
  for (basis_index k = 0; k <= all; ++k) gflip += std::conj(g[k]) * g[k ^ all];
  EXPECT_NEAR(std::abs(gflip), 1.0, 1e-10);
}

}  // namespace
}  // namespace vqeid
