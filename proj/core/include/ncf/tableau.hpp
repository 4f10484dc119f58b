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
#include "ncf/pauli.hpp"

namespace ncf {

/// Rows of Pauli terms on a common register, updated column-wise under Clifford
/// conjugation P -> C P C^dagger. Row order never changes.
class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(std::size_t num_qubits) : num_qubits_(num_qubits) {}
    /// Throws DimensionError if rows disagree on qubit count.
    explicit Tableau(std::vector<PauliTerm> rows);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t num_rows() const noexcept { return rows_.size(); }
    const std::vector<PauliTerm> &rows() const noexcept { return rows_; }
    const PauliTerm &row(std::size_t i) const { return rows_.at(i); }

    void push_back(PauliTerm row);

    /// In-place conjugation of every row by one gate.
    void apply(const CliffordGate &gate);
    void apply(const CliffordCircuit &circuit);

    /// Total number of set bits across the X and Z parts.
    std::size_t ones() const noexcept;

    friend bool operator==(const Tableau &, const Tableau &) = default;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<PauliTerm> rows_;
};

/// Pure form of Tableau::apply. Throws QubitIndexError on bad indices.
Tableau conjugate_gate(Tableau t, const CliffordGate &gate);
Tableau conjugate_circuit(Tableau t, const CliffordCircuit &circuit);

/// C P C^dagger for a single term.
PauliTerm conjugate(PauliTerm p, const CliffordCircuit &circuit);
void conjugate_in_place(PauliTerm &p, const CliffordGate &gate);

}  // namespace ncf
