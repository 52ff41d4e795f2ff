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
#include <optional>
#include <vector>

#include "json.hpp"
#include "measure/circuit.hpp"
#include "measure/clifford_transform.hpp"
#include "measure/clique_cover.hpp"
#include "measure/hamiltonian.hpp"

namespace measure {

using Json = nlohmann::ordered_json;

/// Everything needed to measure one fully commuting group with single-qubit
/// measurements: prepend `circuit`, then read off the QWC operator.
struct GroupPlan {
  std::vector<std::size_t> term_indices;
  TauSigmaBasis basis;
  TransformedGroup transformed;
  CliffordCircuit circuit;
};

struct MeasurementPlan {
  std::size_t n_qubits = 0;
  std::vector<GroupPlan> groups;
};

/// Builds the plan entry for h restricted to `indices`. When `basis` is given
/// it is used instead of find_tau/find_sigma, after validation.
GroupPlan plan_group(const Hamiltonian& h, const std::vector<std::size_t>& indices,
                     const std::optional<TauSigmaBasis>& basis = std::nullopt);

/// Runs the transform on every group of an FC cover. Groups may be processed
/// on `threads` worker threads; the output order is the cover order.
MeasurementPlan pipeline(const Hamiltonian& h, const CliqueCover& cover,
                         unsigned threads = 1);

/// True when all terms are pairwise qubit-wise commuting.
bool is_qwc_group(const Hamiltonian& h);

Json cover_to_json(const CliqueCover& cover);
Json circuit_to_json(const CliffordCircuit& c);
CliffordCircuit circuit_from_json(const Json& j);
Json plan_to_json(const MeasurementPlan& plan);
/// Rebuilds a plan from JSON. Tau expansions are not serialized and come
/// back empty.
MeasurementPlan plan_from_json(const Json& j);

/// Reads a basis file: {"tau": ["Z3", ...], "sigma": [{"qubit": 3, "axis": "X"}, ...]}.
TauSigmaBasis basis_from_json(const Json& j, std::size_t n_qubits);
Json basis_to_json(const TauSigmaBasis& basis);

}  // namespace measure
