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
#include <vector>

#include "ncf/clifford.hpp"
#include "ncf/tableau.hpp"

namespace ncf {

/// Output of a tableau row reduction.
struct ConjugationResult {
    CliffordCircuit circuit;
    /// circuit applied to the input rows: row i is C * P_i * C^dagger.
    Tableau conjugated;
    /// Sorted qubits on which conjugated rows may act.
    std::vector<std::size_t> support;
    /// Pivot columns in the order they were fixed.
    std::vector<std::size_t> pivots;
};

/// Reduce an anticommuting pair (mode 1) or a pair plus one or two companions
/// (mode 2) onto a `mode`-qubit support. Row 1 ends as Z and row 2 as X on the
/// first pivot; rows 3-4 likewise on the second pivot (ignoring the first).
/// Throws ReductionImpossible when the rows violate the grouping predicates.
ConjugationResult reduce_anticommuting(const Tableau &generators, int mode);

/// Reduce mutually commuting, GF(2)-independent rows to Z on distinct qubits.
/// Throws ReductionImpossible for anticommuting or dependent rows.
ConjugationResult reduce_commuting(const Tableau &rows);

/// Conjugate every member by `circuit`; throws SupportViolation if any result acts
/// outside `support`.
Tableau conjugate_members(const Tableau &members, const CliffordCircuit &circuit,
                          std::span<const std::size_t> support);

}  // namespace ncf
