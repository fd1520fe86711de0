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
#include "vqeid/circuits/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "vqeid/common/error.hpp"

namespace vqeid::circuits {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  VQEID_REQUIRE(n_qubits_ >= 1 && n_qubits_ <= kMaxQubits,
                "circuit register must hold 1.." + std::to_string(kMaxQubits) +
                    " qubits");
}

void Circuit::push(Gate g) {
  const std::size_t want = arity(g.kind);
  if (want == 0) {
    VQEID_REQUIRE(g.qubits.size() >= 4,
                  std::string(to_string(g.kind)) + " needs >= 3 controls");
  } else {
    VQEID_REQUIRE(g.qubits.size() == want,
                  std::string(to_string(g.kind)) + " acts on " +
                      std::to_string(want) + " qubit(s), got " +
                      std::to_string(g.qubits.size()));
  }
  for (std::size_t k = 0; k < g.qubits.size(); ++k) {
    VQEID_REQUIRE(g.qubits[k] < n_qubits_,
                  "qubit " + std::to_string(g.qubits[k]) +
                      " outside the " + std::to_string(n_qubits_) +
                      "-qubit register");
    for (std::size_t j = 0; j < k; ++j) {
      VQEID_REQUIRE(g.qubits[j] != g.qubits[k], "repeated qubit in gate");
    }
  }
  if (is_rotation(g.kind)) {
    VQEID_REQUIRE(g.slot.has_value() != g.fixed_angle.has_value(),
                  "rotation needs exactly one of slot / fixed angle");
    if (g.slot) {
      VQEID_REQUIRE(*g.slot < n_params_,
                    "slot " + std::to_string(*g.slot) + " not allocated");
    }
  } else {
    VQEID_REQUIRE(!g.slot && !g.fixed_angle,
                  std::string(to_string(g.kind)) + " takes no angle");
  }
  gates_.push_back(std::move(g));
}

void Circuit::validate() const {
  std::vector<bool> used(n_params_, false);
  for (const auto& g : gates_) {
    if (g.slot) used[*g.slot] = true;
  }
  for (std::size_t s = 0; s < n_params_; ++s) {
    VQEID_REQUIRE(used[s], "parameter slot " + std::to_string(s) +
                               " is not referenced by any gate");
  }
}

std::vector<std::vector<std::size_t>> Circuit::slot_users() const {
  std::vector<std::vector<std::size_t>> users(n_params_);
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    if (gates_[k].slot) users[*gates_[k].slot].push_back(k);
  }
  return users;
}

namespace {
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(const std::string& tok, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw InputError("circuit line " + std::to_string(line_no) +
                     ": bad number '" + tok + "'");
  }
  return v;
}
}  // namespace

std::string Circuit::to_text() const {
  std::ostringstream os;
  os << "# qubits " << n_qubits_ << " params " << n_params_ << " layers "
     << layers_ << '\n';
  for (const auto& g : gates_) {
    os << to_string(g.kind);
    for (auto q : g.qubits) os << ' ' << q;
    if (g.slot) os << " slot=" << *g.slot;
    if (g.fixed_angle) os << " angle=" << format_double(*g.fixed_angle);
    if (g.angle_scale != 1.0) os << " scale=" << format_double(g.angle_scale);
    os << '\n';
  }
  return os.str();
}

Circuit Circuit::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Circuit c;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_header) {
      if (head == "#" && !(ls >> head)) head.clear();
      std::string k1, k2;
      std::size_t n = 0, p = 0, l = 0;
      if (head != "qubits" || !(ls >> n >> k1 >> p >> k2 >> l) ||
          k1 != "params" || k2 != "layers") {
        throw InputError("circuit line " + std::to_string(line_no) +
                         ": expected '# qubits N params P layers L'");
      }
      c = Circuit(n);
      c.n_params_ = p;
      c.layers_ = l;
      have_header = true;
      continue;
    }
    if (head[0] == '#') continue;
    auto kind = parse_gate_kind(head);
    if (!kind) {
      throw InputError("circuit line " + std::to_string(line_no) +
                       ": unknown gate '" + head + "'");
    }
    Gate g;
    g.kind = *kind;
    std::string tok;
    while (ls >> tok) {
      if (tok.rfind("slot=", 0) == 0) {
        g.slot = parse_number<std::size_t>(tok.substr(5), line_no);
      } else if (tok.rfind("angle=", 0) == 0) {
        g.fixed_angle = parse_number<double>(tok.substr(6), line_no);
      } else if (tok.rfind("scale=", 0) == 0) {
        g.angle_scale = parse_number<double>(tok.substr(6), line_no);
      } else {
        g.qubits.push_back(parse_number<std::size_t>(tok, line_no));
      }
    }
    try {
      c.push(std::move(g));
    } catch (const InputError& e) {
      throw InputError("circuit line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  VQEID_REQUIRE(have_header, "empty circuit text");
  return c;
}

Circuit compose(const Circuit& first, const Circuit& second) {
  VQEID_REQUIRE(first.n_qubits() == second.n_qubits(),
                "cannot compose circuits over different registers");
  Circuit out(first.n_qubits());
  for (std::size_t s = 0; s < first.n_params() + second.n_params(); ++s) {
    out.new_slot();
  }
  for (const auto& g : first.gates()) out.push(g);
  for (auto g : second.gates()) {
    if (g.slot) *g.slot += first.n_params();
    out.push(std::move(g));
  }
  out.set_layers(first.layers() + second.layers());
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (std::size_t s = 0; s < c.n_params(); ++s) out.new_slot();
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    Gate g = *it;
    if (is_rotation(g.kind)) g.angle_scale = -g.angle_scale;
    out.push(std::move(g));
  }
  out.set_layers(c.layers());
  return out;
}

}  // namespace vqeid::circuits
