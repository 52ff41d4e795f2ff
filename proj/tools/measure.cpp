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

// measure: group Pauli-sum Hamiltonians into fully commuting sets and build
// the Clifford circuits that make each set measurable qubit by qubit.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "measure/clique_cover.hpp"
#include "measure/hamiltonian.hpp"
#include "measure/oracle.hpp"
#include "measure/plan.hpp"
#include "measure/verify.hpp"

namespace {

using namespace measure;

struct RunConfig {
  std::string input;
  std::string relation = "fc";
  std::string method = "rlf";
  std::string format = "table";
  std::string output;
  std::string plan;
  std::string basis;
  double tolerance = kDefaultDropTolerance;
  std::size_t exact_cap = kDefaultExactCap;
  unsigned parallel = 1;
  std::size_t count_qubits = 4;
  std::string count_template;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Hamiltonian load_input(const RunConfig& cfg) {
  Hamiltonian h = load_hamiltonian(cfg.input, cfg.tolerance);
  if (h.empty()) throw UsageError("no terms in '" + cfg.input + "'");
  return h;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot write '" + cfg.output + "'");
  out << text;
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

CliqueCover make_cover(const Hamiltonian& h, const RunConfig& cfg) {
  const Relation rel = parse_relation(cfg.relation);
  const CoverMethod method = parse_method(cfg.method);
  const CompatGraph g = build_graph(h, rel, cfg.parallel);
  return cover(g, method, cfg.exact_cap);
}

int cmd_group(const RunConfig& cfg) {
  const Hamiltonian h = load_input(cfg);
  const CliqueCover c = make_cover(h, cfg);
  const CoverReport report = validate_cover(h, c, c.relation);
  if (!report.valid) throw std::logic_error("cover failed validation: " + report.violations.front());
  const CoverStats s = stats(c);
  if (cfg.format == "json") {
    Json j = cover_to_json(c);
    j["total"] = h.size();
    j["minimum"] = c.method == CoverMethod::kExact;
    write_output(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << h.size() << " terms, " << s.group_count << " groups";
  if (c.method == CoverMethod::kExact) out << " (minimum)";
  out << "\n";
  out << "relation: " << to_string(c.relation) << "  method: " << to_string(c.method) << "\n";
  out << "Total\tM\tMax Size\tSTD\n";
  out << h.size() << "\t" << s.group_count << "\t" << s.max_size << "\t"
      << fixed(s.size_stddev, 1) << "\n";
  for (std::size_t k = 0; k < c.groups.size(); ++k) {
    out << "group " << k << ":";
    for (std::size_t v : c.groups[k]) out << " " << h[v].op.axes_string() << "[" << v << "]";
    out << "\n";
  }
  write_output(cfg, out.str());
  return 0;
}

MeasurementPlan build_plan(const Hamiltonian& h, const RunConfig& cfg) {
  if (parse_relation(cfg.relation) != Relation::kFC) {
    throw UsageError("transform requires fc");
  }
  const CliqueCover c = make_cover(h, cfg);
  if (cfg.basis.empty()) return pipeline(h, c, cfg.parallel);

  if (c.groups.size() != 1) {
    throw UsageError("--basis needs a Hamiltonian that forms a single group");
  }
  std::ifstream in(cfg.basis);
  if (!in) throw std::runtime_error("cannot open '" + cfg.basis + "'");
  const TauSigmaBasis basis = basis_from_json(Json::parse(in), h.n_qubits());
  return MeasurementPlan{h.n_qubits(), {plan_group(h, c.groups.front(), basis)}};
}

int cmd_transform(const RunConfig& cfg) {
  const Hamiltonian h = load_input(cfg);
  const MeasurementPlan plan = build_plan(h, cfg);
  if (cfg.format == "table") {
    std::ostringstream out;
    for (std::size_t k = 0; k < plan.groups.size(); ++k) {
      const auto& g = plan.groups[k];
      const GateCounts counts = gate_counts(g.circuit);
      out << "group " << k << " (" << g.term_indices.size() << " terms)\n";
      out << "  tau:";
      for (const auto& t : g.basis.taus) out << "  " << t.axes_string();
      out << "\n  sigma:";
      for (const auto& s : g.basis.sigmas) out << "  " << axis_char(s.axis) << s.qubit;
      out << "\n";
      for (const auto& t : g.transformed.a_n.terms()) {
        out << "  " << format_double(t.coeff) << " " << t.op.axes_string() << "\n";
      }
      out << "  gates: " << counts.cnots << " CNOT, " << counts.singles
          << " single-qubit; exponents: " << counts.tau_exponents << " tau, "
          << counts.sigma_exponents << " sigma\n";
    }
    write_output(cfg, out.str());
    return 0;
  }
  write_output(cfg, plan_to_json(plan).dump(2) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const Hamiltonian h = load_input(cfg);
  MeasurementPlan plan;
  if (cfg.plan.empty()) {
    plan = build_plan(h, cfg);
  } else {
    std::ifstream in(cfg.plan);
    if (!in) throw std::runtime_error("cannot open '" + cfg.plan + "'");
    plan = plan_from_json(Json::parse(in));
    if (plan.n_qubits != h.n_qubits()) {
      throw UsageError("plan has " + std::to_string(plan.n_qubits) +
                       " qubits, Hamiltonian has " + std::to_string(h.n_qubits()));
    }
    CliqueCover c{Relation::kFC, CoverMethod::kGC, {}};
    for (const auto& g : plan.groups) c.groups.push_back(g.term_indices);
    const CoverReport report = validate_cover(h, c, Relation::kFC);
    if (!report.valid) throw UsageError("plan groups: " + report.violations.front());
  }
  std::ostringstream out;
  bool ok = true;
  for (std::size_t k = 0; k < plan.groups.size(); ++k) {
    const auto results = verify_group(h, plan.groups[k]);
    ok = ok && all_passed(results);
    for (const auto& r : results) {
      out << "group " << k << " " << r.name << ": " << to_string(r.status) << " ("
          << r.detail << ")\n";
    }
  }
  out << (ok ? "verify: PASS\n" : "verify: FAIL\n");
  write_output(cfg, out.str());
  return ok ? 0 : 1;
}

int cmd_count(const RunConfig& cfg) {
  const std::size_t n = cfg.count_qubits;
  if (n == 0) throw UsageError("--qubits must be positive");
  PauliProduct tmpl(n);
  if (cfg.count_template.empty()) {
    std::vector<PauliAxis> axes(n, PauliAxis::X);
    for (std::size_t q = 0; q < n / 4; ++q) axes[q] = PauliAxis::I;
    tmpl = PauliProduct(axes);
  } else {
    tmpl = PauliProduct::parse(cfg.count_template, n);
  }
  const CompatibilityCounts counts = count_compatible(tmpl);
  std::ostringstream out;
  out << "template: " << tmpl.axes_string() << " (N=" << n << ")\n";
  out << "n_qwc: " << counts.n_qwc << "\n";
  out << "n_commuting: " << counts.n_commuting << "\n";
  if (n % 4 == 0 && cfg.count_template.empty()) {
    const auto qwc_formula = static_cast<std::size_t>(std::llround(std::pow(2.0, 5.0 * n / 4)));
    const std::size_t fc_formula = std::size_t{1} << (2 * n - 1);
    const bool match = counts.n_qwc == qwc_formula && counts.n_commuting == fc_formula;
    out << "formula: 2^(5N/4) = " << qwc_formula << ", 2^(2N-1) = " << fc_formula
        << " -> " << (match ? "match" : "MISMATCH") << "\n";
    out << "ratio: " << fixed(static_cast<double>(counts.n_commuting) / counts.n_qwc, 1)
        << " = 2^(3N/4-1)\n";
    write_output(cfg, out.str());
    return match ? 0 : 1;
  }
  write_output(cfg, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement grouping and Clifford transforms for qubit Hamiltonians", "measure"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Hamiltonian file")->required()->check(CLI::ExistingFile);
    sub->add_option("--relation", cfg.relation, "qwc or fc")
        ->check(CLI::IsMember({"qwc", "fc"}));
    sub->add_option("--method", cfg.method, "gc, lf, sl, dsatur, rlf or exact")
        ->check(CLI::IsMember({"gc", "lf", "sl", "dsatur", "rlf", "exact"}));
    sub->add_option("--format", cfg.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--tolerance", cfg.tolerance, "coefficient drop tolerance");
    sub->add_option("--exact-cap", cfg.exact_cap, "vertex limit for the exact method");
    sub->add_option("--parallel", cfg.parallel, "worker threads for graph building");
    sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
  };

  auto* group = app.add_subcommand("group", "partition terms into compatible groups");
  add_common(group);
  auto* transform = app.add_subcommand("transform", "emit the measurement plan for an fc cover");
  add_common(transform);
  transform->add_option("--basis", cfg.basis, "tau/sigma JSON to use instead of the search");
  auto* verify = app.add_subcommand("verify", "run the dense oracle checks on a plan");
  add_common(verify);
  verify->add_option("--plan", cfg.plan, "plan JSON produced by transform");
  verify->add_option("--basis", cfg.basis, "tau/sigma JSON to use instead of the search");
  auto* count = app.add_subcommand("count", "count QWC and commuting partners by enumeration");
  count->add_option("--qubits,-n", cfg.count_qubits, "number of qubits (<= 8)");
  count->add_option("--template", cfg.count_template, "template Pauli, e.g. \"X1 X2 X3\"");
  count->add_option("-o,--output", cfg.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*group) return cmd_group(cfg);
    if (*transform) {
      if (transform->count("--format") == 0) cfg.format = "json";
      return cmd_transform(cfg);
    }
    if (*verify) return cmd_verify(cfg);
    if (*count) return cmd_count(cfg);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (auto& ch : msg) {
      if (ch == '\n') ch = ' ';
    }
    std::cerr << "error: " << msg << "\n";
    return 1;
  }
  return 1;
}
