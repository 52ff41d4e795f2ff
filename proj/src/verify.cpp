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

#include "measure/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "measure/oracle.hpp"

namespace measure {
namespace {

std::string sci(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

CheckResult bounded(std::string name, double deviation, double tol) {
  return {std::move(name),
          deviation <= tol ? CheckStatus::kPass : CheckStatus::kFail,
          "max deviation " + sci(deviation) + " (tol " + sci(tol) + ")"};
}

CheckResult skipped(std::string name, std::size_t cap) {
  return {std::move(name), CheckStatus::kSkipped,
          "above the " + std::to_string(cap) + "-qubit cap"};
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkipped: return "SKIP";
  }
  return "?";
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::kFail;
  });
}

std::vector<CheckResult> verify_group(const Hamiltonian& h, const GroupPlan& g,
                                      const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::size_t n = h.n_qubits();
  const Hamiltonian group = h.subset(g.term_indices);
  const Hamiltonian& a_n = g.transformed.a_n;

  const auto problems = check_basis(g.basis, group);
  out.push_back({"basis", problems.empty() ? CheckStatus::kPass : CheckStatus::kFail,
                 problems.empty() ? "tau/sigma invariants hold" : problems.front()});
  if (!problems.empty()) return out;

  out.push_back({"qwc", is_qwc_group(a_n) ? CheckStatus::kPass : CheckStatus::kFail,
                 std::to_string(a_n.size()) + " transformed terms"});

  {
    CheckResult r{"coefficients", CheckStatus::kPass, "|coeff| preserved term by term"};
    if (a_n.size() != group.size()) {
      r = {"coefficients", CheckStatus::kFail, "term count differs"};
    } else {
      for (std::size_t k = 0; k < group.size(); ++k) {
        if (std::abs(std::abs(a_n[k].coeff) - std::abs(group[k].coeff)) > 1e-12) {
          r = {"coefficients", CheckStatus::kFail,
               "term " + std::to_string(k) + " magnitude changed"};
          break;
        }
      }
    }
    out.push_back(r);
  }

  {
    // Every transformed factor must be the sigma of its qubit.
    std::vector<PauliAxis> sigma_axis(n, PauliAxis::I);
    for (const auto& s : g.basis.sigmas) sigma_axis[s.qubit] = s.axis;
    bool ok = true;
    for (const auto& t : a_n.terms()) {
      for (std::size_t q : t.op.support()) ok = ok && t.op.axis(q) == sigma_axis[q];
    }
    out.push_back({"sigma_support", ok ? CheckStatus::kPass : CheckStatus::kFail,
                   ok ? "terms act only through sigmas" : "term outside sigma axes"});
  }

  if (n > kSpectrumMaxQubits) {
    out.push_back(skipped("spectrum", kSpectrumMaxQubits));
  } else {
    const auto s1 = spectrum(group);
    const auto s2 = spectrum(a_n);
    double dev = 0.0;
    for (std::size_t i = 0; i < s1.size(); ++i) dev = std::max(dev, std::abs(s1[i] - s2[i]));
    out.push_back(bounded("spectrum", dev, opts.spectrum_tol));
  }

  if (n > kExpectationMaxQubits) {
    out.push_back(skipped("conjugation", kExpectationMaxQubits));
    out.push_back(skipped("circuit_vs_symbolic", kExpectationMaxQubits));
    out.push_back(skipped("expectation", kExpectationMaxQubits));
    return out;
  }
  const DenseOperator u_circ = dense_matrix(g.circuit);
  const DenseOperator hm = dense_matrix(group);
  const DenseOperator am = dense_matrix(a_n);
  out.push_back(bounded("conjugation",
                        (u_circ.adjoint() * hm * u_circ - am).cwiseAbs().maxCoeff(),
                        opts.conjugation_tol));
  const DenseOperator u_sym = dense_matrix(build_unitary_symbolic(g.basis));
  out.push_back(bounded("circuit_vs_symbolic", max_deviation_up_to_phase(u_circ, u_sym),
                        opts.circuit_tol));
  out.push_back(bounded("expectation",
                        expectation_invariance(group, a_n, u_circ,
                                               opts.expectation_trials, opts.seed),
                        opts.expectation_tol));
  return out;
}

}  // namespace measure
