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

#include "ncf/clifford.hpp"

#include <algorithm>
#include <set>

#include "ncf/errors.hpp"

namespace ncf {

CliffordGate CliffordGate::inverse() const noexcept {
    CliffordGate g = *this;
    if (kind == GateKind::S) {
        g.kind = GateKind::Sdg;
    } else if (kind == GateKind::Sdg) {
        g.kind = GateKind::S;
    }
    return g;
}

std::vector<std::size_t> CliffordGate::qubits() const {
    if (is_two_qubit()) {
        return {q0, q1};
    }
    return {q0};
}

const char *gate_name(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::CNOT: return "cx";
    }
    return "?";
}

void CliffordCircuit::append(const CliffordGate &gate) {
    if (gate.q0 >= num_qubits_ || (gate.is_two_qubit() && gate.q1 >= num_qubits_)) {
        throw QubitIndexError("gate qubit index out of range for " + std::to_string(num_qubits_) +
                              "-qubit circuit");
    }
    if (gate.is_two_qubit() && gate.q0 == gate.q1) {
        throw QubitIndexError("CNOT control and target coincide");
    }
    gates_.push_back(gate);
}

void CliffordCircuit::append(const CliffordCircuit &other) {
    for (const auto &g : other.gates_) {
        append(g);
    }
}

CliffordCircuit CliffordCircuit::inverse() const {
    CliffordCircuit out(num_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

std::size_t CliffordCircuit::cnot_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [](const CliffordGate &g) { return g.is_two_qubit(); }));
}

std::vector<std::size_t> CliffordCircuit::touched_qubits() const {
    std::set<std::size_t> qs;
    for (const auto &g : gates_) {
        qs.insert(g.q0);
        if (g.is_two_qubit()) {
            qs.insert(g.q1);
        }
    }
    return {qs.begin(), qs.end()};
}

}  // namespace ncf
