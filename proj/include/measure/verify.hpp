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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "measure/hamiltonian.hpp"
#include "measure/plan.hpp"

namespace measure {

enum class CheckStatus { kPass, kFail, kSkipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyOptions {
  double spectrum_tol = 1e-9;
  double conjugation_tol = 1e-9;
  double expectation_tol = 1e-9;
  double circuit_tol = 1e-10;
  std::size_t expectation_trials = 50;
  std::uint64_t seed = 20190827;
};

/// Runs the oracle checks on one plan entry against the source Hamiltonian.
/// Dense checks are skipped above their qubit caps.
std::vector<CheckResult> verify_group(const Hamiltonian& h, const GroupPlan& g,
                                      const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);
std::string to_string(CheckStatus s);

}  // namespace measure
