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
#include "vqeid/bench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <deque>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "vqeid/circuits/builders.hpp"
#include "vqeid/common/error.hpp"
#include "vqeid/common/rng.hpp"
#include "vqeid/vqe/theorem1.hpp"

namespace vqeid::bench {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::vector<vqe::Arm> arms_of(ArmChoice c) {
  switch (c) {
    case ArmChoice::baseline:
      return {vqe::Arm::baseline};
    case ArmChoice::enhanced:
      return {vqe::Arm::enhanced};
    case ArmChoice::both:
      break;
  }
  return {vqe::Arm::baseline, vqe::Arm::enhanced};
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

}  // namespace

Setup prepare(const models::ModelSpec& model) {
  model.validate();
  Setup s;
  s.h = models::build_hamiltonian(model);
  s.sector = models::symmetry_sector(model);
  s.truth = s.sector ? sim::exact_ground_in_sector(s.h, *s.sector)
                     : sim::exact_ground(s.h);
  s.reference = model.reference.value_or(model.reference_index());
  VQEID_REQUIRE(!s.sector || std::binary_search(s.sector->begin(),
                                                s.sector->end(), s.reference),
                "model.reference lies outside the particle-number sector");
  return s;
}

circuits::Circuit build_ansatz(const ExperimentConfig& cfg,
                               std::size_t layers) {
  const auto& m = cfg.model;
  if (cfg.ansatz.kind == AnsatzKind::hea) {
    return circuits::build_hea(m.n_qubits(), layers, cfg.ansatz.entangler);
  }
  const auto sharing = cfg.ansatz.sharing;
  switch (m.family) {
    case models::ModelFamily::tfim_1d:
      return circuits::build_hva_tfim(circuits::Ring1D{m.sites}, layers,
                                      sharing);
    case models::ModelFamily::tfim_2d:
      return circuits::build_hva_tfim(circuits::Torus2D{m.rows, m.cols},
                                      layers, sharing);
    case models::ModelFamily::cluster_ising:
      return circuits::build_hva_cluster(m.sites, layers, sharing);
    case models::ModelFamily::hubbard:
      return circuits::build_hva_hubbard(m.sites, layers, sharing);
  }
  throw InputError("unknown model family");
}

std::size_t ansatz_layers(const ExperimentConfig& cfg, vqe::Arm arm,
                          std::size_t depth) {
  if (arm == vqe::Arm::enhanced &&
      cfg.ansatz.effective_convention() == DepthConvention::replace) {
    VQEID_REQUIRE(depth >= 1, "depth budget must be >= 1");
    return depth - 1;
  }
  return depth;
}

std::vector<Job> plan_depths(const ExperimentConfig& cfg,
                             const std::vector<std::size_t>& depths) {
  std::vector<Job> jobs;
  for (auto depth : depths) {
    for (auto arm : arms_of(cfg.run.arm)) {
      for (std::size_t s = 0; s < cfg.run.seeds; ++s) {
        Job j;
        j.seed = s;
        j.arm = arm;
        j.depth = depth;
        j.layers = ansatz_layers(cfg, arm, depth);
        j.m = arm == vqe::Arm::enhanced ? cfg.selection.m : 1;
        jobs.push_back(j);
      }
    }
  }
  return jobs;
}

std::vector<Job> plan_m(const ExperimentConfig& cfg,
                        const std::vector<std::size_t>& m_list) {
  std::vector<Job> jobs;
  for (auto m : m_list) {
    for (std::size_t s = 0; s < cfg.run.seeds; ++s) {
      Job j;
      j.seed = s;
      j.arm = vqe::Arm::enhanced;
      j.layers = cfg.ansatz.depth;
      j.depth = cfg.ansatz.depth + 1;
      j.m = m;
      j.tag_m = true;
      jobs.push_back(j);
    }
  }
  return jobs;
}

std::string trace_file_name(const Job& job) {
  std::string name = "trace-" + std::to_string(job.seed) + "-" +
                     std::string(vqe::to_string(job.arm)) + "-p" +
                     std::to_string(job.depth);
  if (job.tag_m) name += "-m" + std::to_string(job.m);
  return name + ".jsonl";
}

std::vector<JobResult> execute(const ExperimentConfig& cfg, const Setup& setup,
                               const std::vector<Job>& jobs,
                               const std::string& out_dir,
                               const Progress& progress) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::map<std::size_t, circuits::Circuit> ansatze;
  for (const auto& j : jobs) {
    if (!ansatze.count(j.layers)) ansatze.emplace(j.layers, build_ansatz(cfg, j.layers));
  }

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  std::deque<std::size_t> finished;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      JobResult r;
      r.job = job;
      try {
        vqe::Problem problem;
        problem.h = &setup.h;
        problem.truth = &setup.truth;
        problem.ansatz = &ansatze.at(job.layers);
        problem.reference = setup.reference;
        problem.sector = setup.sector;
        vqe::PipelineConfig pc;
        pc.arm = job.arm;
        pc.optimizer = cfg.optimizer;
        pc.selection = cfg.selection;
        pc.selection.m = job.m;
        pc.shots = cfg.run.shots;
        r.record = vqe::run_pipeline(problem, pc, cfg.run.master_seed, job.seed);
      } catch (const RunAborted& e) {
        r.error = e.what();
      } catch (...) {
        std::lock_guard lk(mu);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
      {
        std::lock_guard lk(mu);
        results[i] = std::move(r);
        finished.push_back(i);
      }
      cv.notify_one();
    }
  };

  const std::size_t n_workers =
      std::max<std::size_t>(1, std::min(cfg.run.workers, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);

  // Collector: the only thread touching the output directory.
  std::size_t done = 0;
  while (done < jobs.size()) {
    std::unique_lock lk(mu);
    cv.wait(lk, [&] { return !finished.empty() || failure; });
    if (failure && finished.empty()) break;
    const std::size_t i = finished.front();
    finished.pop_front();
    lk.unlock();
    ++done;
    const auto& r = results[i];
    if (r.error.empty()) {
      write_file(fs::path(out_dir) / trace_file_name(r.job),
                 r.record.to_jsonl());
    }
    if (progress) progress(r, done, jobs.size());
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::string summary_csv(const std::vector<JobResult>& results,
                        const Setup& setup) {
  std::ostringstream os;
  os << "seed,arm,depth,ansatz_layers,m,final_energy,exact_energy,fidelity,"
        "N_I,N_para,C_R,two_qubit_gates,one_qubit_gates,pretrain_iterations,"
        "joint_iterations,min_energy,selection_fallback\n";
  for (const auto& r : results) {
    if (!r.error.empty()) continue;
    const auto& rec = r.record;
    os << r.job.seed << ',' << vqe::to_string(r.job.arm) << ',' << r.job.depth
       << ',' << r.job.layers << ',' << r.job.m << ',' << num(rec.final_energy)
       << ',' << num(setup.truth.energy) << ',' << num(rec.fidelity) << ','
       << rec.n_iterations << ',' << rec.n_params << ',' << rec.cr() << ','
       << rec.resources.two_qubit_gates << ','
       << rec.resources.one_qubit_gates << ',' << rec.pretrain_iterations
       << ',' << rec.joint_iterations << ',' << num(rec.min_energy) << ','
       << (rec.selection_fallback ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string resource_table(const std::vector<JobResult>& results) {
  struct Acc {
    double ni = 0.0, two_q = 0.0;
    std::size_t n_para = 0, runs = 0;
  };
  // (arm, m) -> depth -> totals
  std::map<std::pair<std::string, std::size_t>, std::map<std::size_t, Acc>>
      groups;
  for (const auto& r : results) {
    if (!r.error.empty()) continue;
    auto& a = groups[{std::string(vqe::to_string(r.job.arm)), r.job.m}]
                    [r.job.depth];
    a.ni += static_cast<double>(r.record.n_iterations);
    a.two_q += static_cast<double>(r.record.resources.two_qubit_gates);
    a.n_para = r.record.n_params;
    ++a.runs;
  }
  std::ostringstream os;
  os << "# Means over runs. C_R = N_I x N_para.\n";
  for (const auto& [key, depths] : groups) {
    os << "\n[" << key.first;
    if (key.first == "enhanced") os << " m=" << key.second;
    os << "]\n";
    auto row = [&](const char* label, auto value) {
      os << label;
      for (const auto& [depth, a] : depths) os << '\t' << value(depth, a);
      os << '\n';
    };
    row("Layers", [](std::size_t d, const Acc&) { return std::to_string(d); });
    row("2-Qubit Gates", [](std::size_t, const Acc& a) {
      return short_num(a.two_q / static_cast<double>(a.runs));
    });
    row("N_I", [](std::size_t, const Acc& a) {
      return short_num(a.ni / static_cast<double>(a.runs));
    });
    row("N_para", [](std::size_t, const Acc& a) {
      return std::to_string(a.n_para);
    });
    row("C_R", [](std::size_t, const Acc& a) {
      return short_num(a.ni / static_cast<double>(a.runs) *
                       static_cast<double>(a.n_para));
    });
    row("Runs", [](std::size_t, const Acc& a) { return std::to_string(a.runs); });
  }
  return os.str();
}

double median(std::vector<double> v) {
  VQEID_REQUIRE(!v.empty(), "median of an empty set");
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string sweep_m_csv(const std::vector<JobResult>& results) {
  std::map<std::size_t, std::vector<double>> by_m;
  for (const auto& r : results) {
    if (r.error.empty()) by_m[r.job.m].push_back(1.0 - r.record.fidelity);
  }
  std::ostringstream os;
  os << "m,runs,median_infidelity,mean_infidelity,min_infidelity,"
        "max_infidelity\n";
  for (const auto& [m, v] : by_m) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) /
                        static_cast<double>(v.size());
    os << m << ',' << v.size() << ',' << num(median(v)) << ',' << num(mean)
       << ',' << num(*std::min_element(v.begin(), v.end())) << ','
       << num(*std::max_element(v.begin(), v.end())) << '\n';
  }
  return os.str();
}

std::string schema_text() {
  return R"(summary.csv  (one row per run; rows in job order)
  seed                 run index; all random streams derive from (master_seed, seed)
  arm                  baseline | enhanced
  depth                depth budget p
  ansatz_layers        ansatz layers actually run (p, or p-1 under the replace convention)
  m                    selected basis states (1 for baseline)
  final_energy         energy of the returned parameters
  exact_energy         exact ground energy E0
  fidelity             overlap of the final state with the ground space
  N_I                  gradient evaluations over all phases
  N_para               trainable parameters of the final circuit
  C_R                  N_I * N_para
  two_qubit_gates      two-qubit gates of the final circuit, composites expanded
  one_qubit_gates      one-qubit gates of the final circuit, composites expanded
  pretrain_iterations  gradient evaluations in pretraining
  joint_iterations     gradient evaluations in the joint phase
  min_energy           lowest energy recorded anywhere in the run
  selection_fallback   1 if the threshold pool was smaller than m - 1

trace-<seed>-<arm>-p<depth>[-m<m>].jsonl  (one JSON object per line)
  {"phase","iteration","energy","grad_norm","fidelity","param_hash"} per
  gradient evaluation; the first "joint" line marks the encoder
  introduction; a final {"summary": {...}} line repeats the run record.

sweep_m.csv
  m, runs, median_infidelity, mean_infidelity, min_infidelity, max_infidelity

resources.txt
  per arm (and m) a block with rows Layers, 2-Qubit Gates, N_I, N_para, C_R,
  Runs; one tab-separated column per depth; values are means over runs and
  C_R = mean N_I * N_para.
)";
}

std::string Theorem1Report::to_text() const {
  std::ostringstream os;
  os << "trials " << trials << "\n"
     << "equality max |F* - sum F_j| " << worst_equality << "\n"
     << "attained max |F* - F(alpha*)| " << worst_attained << "\n"
     << "bound max F(alpha) - F* " << worst_bound << "\n"
     << "collinearity max 1 - |<alpha,beta>|/|beta| " << worst_collinearity
     << "\n"
     << "monotonicity violations " << monotonicity_violations << "\n"
     << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Theorem1Report theorem1_suite(std::size_t n_min, std::size_t n_max,
                              std::size_t trials, std::uint64_t seed,
                              double tolerance) {
  VQEID_REQUIRE(n_min >= 1 && n_min <= n_max && n_max <= 10,
                "theorem1 needs 1 <= n_min <= n_max <= 10");
  Rng rng = derive_stream(seed, 0, "theorem1");
  std::normal_distribution<double> gauss;
  Theorem1Report rep;
  rep.trials = trials;

  auto random_unit = [&](std::size_t dim) {
    std::vector<complex_t> v(dim);
    double nrm = 0.0;
    for (auto& x : v) {
      x = {gauss(rng), gauss(rng)};
      nrm += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(nrm);
    return v;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(n_min, n_max)(rng);
    const std::size_t dim = std::size_t{1} << n;
    sim::GroundTruth truth;
    truth.subspace.push_back(
        sim::Statevector::from_amplitudes(random_unit(dim)));
    const auto& g = truth.subspace.front().amplitudes();

    std::vector<basis_index> order(dim);
    std::iota(order.begin(), order.end(), basis_index{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t m =
        std::uniform_int_distribution<std::size_t>(1, dim)(rng);
    std::vector<sim::Statevector> states;
    for (std::size_t j = 0; j < m; ++j) {
      states.push_back(sim::init_basis_state(n, order[j]));
    }
    const auto sup = vqe::optimal_superposition(states, truth);

    double sum_fj = 0.0;
    std::vector<complex_t> beta(m);
    double beta_norm2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      sum_fj += sup.per_state[j];
      beta[j] = g[order[j]];
      beta_norm2 += std::norm(beta[j]);
    }
    rep.worst_equality =
        std::max(rep.worst_equality, std::abs(sup.fidelity - sum_fj));

    auto fid_of = [&](const std::vector<complex_t>& alpha) {
      std::vector<complex_t> amps(dim, complex_t{});
      for (std::size_t j = 0; j < m; ++j) amps[order[j]] = alpha[j];
      return sim::fidelity(sim::Statevector::from_amplitudes(amps), truth);
    };
    if (!sup.undefined) {
      rep.worst_attained = std::max(rep.worst_attained,
                                    std::abs(fid_of(sup.alpha) - sup.fidelity));
      complex_t dot{};
      for (std::size_t j = 0; j < m; ++j) dot += std::conj(sup.alpha[j]) * beta[j];
      rep.worst_collinearity =
          std::max(rep.worst_collinearity,
                   1.0 - std::abs(dot) / std::sqrt(beta_norm2));
    }
    for (int k = 0; k < 8; ++k) {
      rep.worst_bound = std::max(
          rep.worst_bound, fid_of(random_unit(m)) - sup.fidelity);
    }
    if (m < dim) {
      states.push_back(sim::init_basis_state(n, order[m]));
      const auto bigger = vqe::optimal_superposition(states, truth);
      if (bigger.fidelity < sup.fidelity - tolerance) {
        ++rep.monotonicity_violations;
      }
    }
  }
  rep.pass = rep.worst_equality <= tolerance &&
             rep.worst_attained <= tolerance && rep.worst_bound <= tolerance &&
             rep.worst_collinearity <= tolerance &&
             rep.monotonicity_violations == 0;
  return rep;
}

}  // namespace vqeid::bench
