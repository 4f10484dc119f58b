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
#include <string>
#include <vector>

namespace ncf {

enum class GateKind { H, S, Sdg, CNOT };

struct CliffordGate {
    GateKind kind = GateKind::H;
    std::size_t q0 = 0;  ///< target for one-qubit gates, control for CNOT
    std::size_t q1 = 0;  ///< CNOT target; unused otherwise

    static CliffordGate h(std::size_t q) { return {GateKind::H, q, 0}; }
    static CliffordGate s(std::size_t q) { return {GateKind::S, q, 0}; }
    static CliffordGate sdg(std::size_t q) { return {GateKind::Sdg, q, 0}; }
    static CliffordGate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, control, target};
    }

    bool is_two_qubit() const noexcept { return kind == GateKind::CNOT; }
    CliffordGate inverse() const noexcept;
    /// Qubits the gate touches, control first.
    std::vector<std::size_t> qubits() const;

    friend bool operator==(const CliffordGate &, const CliffordGate &) = default;
};

const char *gate_name(GateKind kind) noexcept;

class CliffordCircuit {
  public:
    CliffordCircuit() = default;
    explicit CliffordCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    const std::vector<CliffordGate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    /// Throws QubitIndexError for out-of-range or coincident CNOT qubits.
    void append(const CliffordGate &gate);
    void append(const CliffordCircuit &other);

    /// Reversed gate order with S and Sdg exchanged.
    CliffordCircuit inverse() const;

    std::size_t cnot_count() const noexcept;
    std::size_t single_qubit_count() const noexcept { return size() - cnot_count(); }
    /// Sorted set of qubits touched by any gate.
    std::vector<std::size_t> touched_qubits() const;

    friend bool operator==(const CliffordCircuit &, const CliffordCircuit &) = default;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<CliffordGate> gates_;
};

}  // namespace ncf
