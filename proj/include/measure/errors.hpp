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

#include <stdexcept>

namespace measure {

/// Two operands disagree on the number of qubits.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed Hamiltonian or plan text. what() carries the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear solve had no solution. Inside the pipeline this means a term fell
/// outside the span of its basis, which is a defect.
class NotInSpan : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An input exceeds a size limit (exact cover vertices, dense qubits, ...).
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A group handed to the transform is not fully commuting, or a basis fails
/// its invariants.
class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace measure
