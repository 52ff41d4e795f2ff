// Copyright 2026 The measure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "measure/plan.hpp"

#include <exception>
#include <thread>

namespace measure {
namespace {

std::string axis_name(PauliAxis a) { return std::string(1, axis_char(a)); }

}  // namespace

bool is_qwc_group(const Hamiltonian& h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (!qwc(h[i].op, h[j].op)) return false;
    }
  }
  return true;
}

GroupPlan plan_group(const Hamiltonian& h, const std::vector<std::size_t>& indices,
                     const std::optional<TauSigmaBasis>& basis) {
  const Hamiltonian group = h.subset(indices);
  GroupPlan out;
  out.term_indices = indices;
  if (basis) {
    require_fully_commuting(group);
    const auto problems = check_basis(*basis, group);
    if (!problems.empty()) throw InvalidGroup("injected basis: " + problems.front());
    out.basis = *basis;
  } else {
    out.basis = find_sigma(find_tau(group));
  }
  out.transformed = transform_group(group, out.basis, indices);
  if (!is_qwc_group(out.transformed.a_n)) {
    throw std::logic_error("transformed group is not qubit-wise commuting");
  }
  out.circuit = synthesize(out.basis);
  return out;
}

MeasurementPlan pipeline(const Hamiltonian& h, const CliqueCover& cover,
                         unsigned threads) {
  const CoverReport report = validate_cover(h, cover, Relation::kFC);
  if (!report.valid) {
    throw InvalidGroup("cover is not a valid FC cover: " +
                       report.violations.front());
  }
  MeasurementPlan plan{h.n_qubits(), std::vector<GroupPlan>(cover.groups.size())};
  std::vector<std::exception_ptr> errors(cover.groups.size());
  auto work = [&](std::size_t g) {
    try {
      plan.groups[g] = plan_group(h, cover.groups[g]);
    } catch (...) {
      errors[g] = std::current_exception();
    }
  };
  if (threads <= 1) {
    for (std::size_t g = 0; g < cover.groups.size(); ++g) work(g);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t g = t; g < cover.groups.size(); g += threads) work(g);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (std::size_t g = 0; g < errors.size(); ++g) {
    if (!errors[g]) continue;
    try {
      std::rethrow_exception(errors[g]);
    } catch (const std::exception& e) {
      throw std::runtime_error("group " + std::to_string(g) + ": " + e.what());
    }
  }
  return plan;
}

Json cover_to_json(const CliqueCover& cover) {
  const CoverStats s = stats(cover);
  Json j;
  j["relation"] = to_string(cover.relation);
  j["method"] = to_string(cover.method);
  j["groups"] = cover.groups;
  j["stats"] = {{"count", s.group_count},
                {"max", s.max_size},
                {"std", s.size_stddev}};
  return j;
}

Json circuit_to_json(const CliffordCircuit& c) {
  Json j;
  j["n_qubits"] = c.n_qubits;
  j["global_phase_exp"] = c.global_phase_exp;
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    gates.push_back({{"name", gate_name(g.kind)}, {"qubits", g.qubits()}});
  }
  j["gates"] = std::move(gates);
  return j;
}

CliffordCircuit circuit_from_json(const Json& j) {
  CliffordCircuit c;
  c.n_qubits = j.at("n_qubits").get<std::size_t>();
  c.global_phase_exp = ((j.at("global_phase_exp").get<int>() % 8) + 8) % 8;
  for (const auto& g : j.at("gates")) {
    const GateKind kind = parse_gate_name(g.at("name").get<std::string>());
    const auto qs = g.at("qubits").get<std::vector<std::size_t>>();
    const std::size_t want = kind == GateKind::kCNOT ? 2 : 1;
    if (qs.size() != want) throw ParseError("gate has wrong number of qubits");
    for (std::size_t q : qs) {
      if (q >= c.n_qubits) throw ParseError("gate qubit out of range");
    }
    c.gates.push_back(want == 2 ? Gate::cnot(qs[0], qs[1]) : Gate::single(kind, qs[0]));
  }
  return c;
}

Json basis_to_json(const TauSigmaBasis& basis) {
  Json tau = Json::array();
  for (const auto& t : basis.taus) tau.push_back(t.axes_string());
  Json sigma = Json::array();
  for (const auto& s : basis.sigmas) {
    sigma.push_back({{"qubit", s.qubit}, {"axis", axis_name(s.axis)}});
  }
  Json j;
  j["tau"] = std::move(tau);
  j["sigma"] = std::move(sigma);
  return j;
}

TauSigmaBasis basis_from_json(const Json& j, std::size_t n_qubits) {
  TauSigmaBasis b{n_qubits, {}, {}};
  for (const auto& t : j.at("tau")) {
    b.taus.push_back(PauliProduct::parse(t.get<std::string>(), n_qubits));
  }
  for (const auto& s : j.at("sigma")) {
    const auto axis = s.at("axis").get<std::string>();
    if (axis.size() != 1) throw ParseError("bad sigma axis '" + axis + "'");
    b.sigmas.push_back({s.at("qubit").get<std::size_t>(), axis_from_char(axis[0])});
  }
  return b;
}

Json plan_to_json(const MeasurementPlan& plan) {
  Json groups = Json::array();
  for (const auto& g : plan.groups) {
    Json entry;
    entry["term_indices"] = g.term_indices;
    const Json basis = basis_to_json(g.basis);
    entry["tau"] = basis["tau"];
    entry["sigma"] = basis["sigma"];
    Json transformed = Json::array();
    for (const auto& t : g.transformed.a_n.terms()) {
      transformed.push_back({{"coeff", t.coeff}, {"pauli", t.op.axes_string()}});
    }
    entry["transformed"] = std::move(transformed);
    entry["circuit"] = circuit_to_json(g.circuit);
    const GateCounts counts = gate_counts(g.circuit);
    entry["gate_counts"] = {{"cnots", counts.cnots},
                            {"singles", counts.singles},
                            {"tau_exponents", counts.tau_exponents},
                            {"sigma_exponents", counts.sigma_exponents}};
    groups.push_back(std::move(entry));
  }
  Json j;
  j["n_qubits"] = plan.n_qubits;
  j["groups"] = std::move(groups);
  return j;
}

MeasurementPlan plan_from_json(const Json& j) {
  MeasurementPlan plan;
  plan.n_qubits = j.at("n_qubits").get<std::size_t>();
  if (plan.n_qubits == 0) throw ParseError("plan has zero qubits");
  for (const auto& entry : j.at("groups")) {
    GroupPlan g;
    g.term_indices = entry.at("term_indices").get<std::vector<std::size_t>>();
    g.basis = basis_from_json(entry, plan.n_qubits);
    g.transformed.source_indices = g.term_indices;
    Hamiltonian a_n(plan.n_qubits);
    for (const auto& t : entry.at("transformed")) {
      a_n.add(t.at("coeff").get<double>(),
              PauliProduct::parse(t.at("pauli").get<std::string>(), plan.n_qubits));
    }
    g.transformed.a_n = std::move(a_n);
    g.circuit = circuit_from_json(entry.at("circuit"));
    if (g.circuit.n_qubits != plan.n_qubits) {
      throw ParseError("circuit qubit count differs from plan");
    }
    // Exponent records are not serialized; recover them from the basis.
    if (check_basis(g.basis).empty()) {
      for (std::size_t i = 0; i < g.basis.taus.size(); ++i) {
        const auto seq = exponent_sequence(g.basis.taus[i], g.basis.sigma(i));
        for (auto it = seq.factors.rbegin(); it != seq.factors.rend(); ++it) {
          g.circuit.exponents.push_back(*it);
        }
      }
    }
    plan.groups.push_back(std::move(g));
  }
  return plan;
}

}  // namespace measure
