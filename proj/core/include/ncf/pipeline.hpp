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
#include <span>
#include <string_view>
#include <vector>

#include "ncf/circuit_ir.hpp"
#include "ncf/grouping.hpp"
#include "ncf/pauli.hpp"

namespace ncf {

enum class CompileMode { Baseline, Ncf1Q, Ncf2Q };

CompileMode parse_compile_mode(std::string_view name);
const char *compile_mode_name(CompileMode mode) noexcept;

/// Default window for a mode (4 for ncf1q, 128 for ncf2q, 0 for baseline).
std::size_t default_window(CompileMode mode) noexcept;

struct CompileOptions {
    CompileMode mode = CompileMode::Ncf1Q;
    /// 0 selects default_window(mode).
    std::size_t window = 0;
};

struct CompileResult {
    CompiledProgram program;
    /// Empty in baseline mode.
    std::vector<Group> groups;
    std::vector<GroupConjugation> conjugations;
    Schedule schedule;
};

/// grouping -> per-group Clifford reduction -> reordering -> assembly.
/// Term ids must equal their list positions.
CompileResult compile(std::span<const PauliTerm> terms, const CompileOptions &options);

/// Clifford reduction and member conjugation for one group.
GroupConjugation conjugate_group(std::span<const PauliTerm> terms, const Group &group);

/// Throws std::logic_error naming the first group that breaks the size bounds
/// (1q <= 3, 2q <= 15, commuting <= num_qubits) or the partition property.
void check_group_invariants(std::span<const Group> groups, std::size_t num_terms,
                            std::size_t num_qubits);

}  // namespace ncf
