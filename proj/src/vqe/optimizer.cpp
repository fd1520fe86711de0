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
#include "vqeid/vqe/optimizer.hpp"

#include <cmath>
#include <cstring>

#include "vqeid/common/error.hpp"
#include "vqeid/common/rng.hpp"
#include "vqeid/sim/execute.hpp"

namespace vqeid::vqe {

std::string_view to_string(OptimizerMethod m) {
  return m == OptimizerMethod::adam ? "adam" : "gradient-descent";
}

std::string_view to_string(GradientMode m) {
  return m == GradientMode::adjoint ? "adjoint" : "finite-difference";
}

void OptimizerConfig::validate() const {
  VQEID_REQUIRE(learning_rate > 0.0 && std::isfinite(learning_rate),
                "optimizer.learning_rate must be positive");
  VQEID_REQUIRE(pretrain_grad_tol > 0.0,
                "optimizer.pretrain_grad_tol must be positive");
  VQEID_REQUIRE(beta1 >= 0.0 && beta1 < 1.0 && beta2 >= 0.0 && beta2 < 1.0,
                "optimizer betas must lie in [0, 1)");
  VQEID_REQUIRE(epsilon > 0.0, "optimizer.epsilon must be positive");
  VQEID_REQUIRE(fd_step > 0.0, "optimizer.fd_step must be positive");
}

Optimizer::Optimizer(const OptimizerConfig& cfg, std::size_t n_params)
    : cfg_(cfg), m_(n_params, 0.0), v_(n_params, 0.0) {}

void Optimizer::step(std::span<double> params, std::span<const double> grad) {
  VQEID_REQUIRE(params.size() == m_.size() && grad.size() == m_.size(),
                "optimizer parameter count changed");
  if (cfg_.method == OptimizerMethod::gradient_descent) {
    for (std::size_t k = 0; k < params.size(); ++k) {
      params[k] -= cfg_.learning_rate * grad[k];
    }
    return;
  }
  ++t_;
  const double c1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (std::size_t k = 0; k < params.size(); ++k) {
    m_[k] = cfg_.beta1 * m_[k] + (1.0 - cfg_.beta1) * grad[k];
    v_[k] = cfg_.beta2 * v_[k] + (1.0 - cfg_.beta2) * grad[k] * grad[k];
    const double mhat = m_[k] / c1;
    const double vhat = v_[k] / c2;
    params[k] -= cfg_.learning_rate * mhat / (std::sqrt(vhat) + cfg_.epsilon);
  }
}

std::uint64_t hash_params(std::span<const double> params) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double p : params) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &p, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

PhaseResult optimize(const circuits::Circuit& u, const sim::Statevector& input,
                     const pauli::PauliSum& h, std::vector<double> start,
                     const OptimizerConfig& cfg, std::size_t max_iters,
                     double grad_tol, std::string_view phase, bool keep_best,
                     const sim::GroundTruth* truth) {
  cfg.validate();
  PhaseResult res;
  std::vector<double> x = std::move(start);
  Optimizer opt(cfg, x.size());
  auto fid = [&](const sim::Statevector& s) {
    return truth ? sim::fidelity(s, *truth) : 0.0;
  };
  if (max_iters == 0) {
    const auto s = sim::evolve(input, u, x);
    res.energy = sim::expectation(s, h);
    res.fidelity = fid(s);
    res.params = std::move(x);
    return res;
  }
  bool have_best = false;
  for (std::size_t it = 0; it < max_iters; ++it) {
    Evaluation ev = evaluate(u, input, h, x, cfg.gradient_mode, cfg.fd_step);
    if (!std::isfinite(ev.energy)) {
      throw RunAborted(std::string(phase) + ": non-finite energy at iteration " +
                       std::to_string(it));
    }
    double gn = 0.0;
    for (double g : ev.grad) gn += g * g;
    gn = std::sqrt(gn);
    TraceEntry e;
    e.phase = std::string(phase);
    e.iteration = it;
    e.energy = ev.energy;
    e.grad_norm = gn;
    e.fidelity = fid(ev.state);
    e.param_hash = hash_params(x);
    res.trace.push_back(e);
    ++res.iterations;
    if (!keep_best || !have_best || ev.energy < res.energy) {
      res.energy = ev.energy;
      res.fidelity = e.fidelity;
      res.params = x;
      have_best = true;
    }
    if (gn < grad_tol) {
      res.converged = true;
      break;
    }
    if (it + 1 < max_iters) opt.step(x, ev.grad);
  }
  return res;
}

}  // namespace vqeid::vqe
