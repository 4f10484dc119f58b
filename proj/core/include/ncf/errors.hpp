// Copyright 2026 The NCF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncf {

/// Malformed Pauli text or term file line.
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string &what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    /// Character position (for strings) or 1-based line number (for files).
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Operands disagree on qubit count.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Qubit index outside the register.
class QubitIndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Rows handed to a Clifford reduction do not satisfy its preconditions.
class ReductionImpossible : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A conjugated member escaped the support computed for its group.
class SupportViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Two blocks declared concurrent share a qubit.
class ScheduleViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Dense oracle asked for more qubits than its cap allows.
class OracleCapExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

}  // namespace ncf
