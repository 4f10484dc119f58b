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

#include "ncf/tableau.hpp"

#include "ncf/errors.hpp"

namespace ncf {

Tableau::Tableau(std::vector<PauliTerm> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        num_qubits_ = rows_.front().num_qubits();
    }
    for (const auto &r : rows_) {
        if (r.num_qubits() != num_qubits_) {
            throw DimensionError("tableau rows disagree on qubit count");
        }
    }
}

void Tableau::push_back(PauliTerm row) {
    if (rows_.empty() && num_qubits_ == 0) {
        num_qubits_ = row.num_qubits();
    }
    if (row.num_qubits() != num_qubits_) {
        throw DimensionError("tableau row has " + std::to_string(row.num_qubits()) +
                             " qubits, expected " + std::to_string(num_qubits_));
    }
    rows_.push_back(std::move(row));
}

void conjugate_in_place(PauliTerm &p, const CliffordGate &gate) {
    const std::size_t n = p.num_qubits();
    if (gate.q0 >= n || (gate.is_two_qubit() && (gate.q1 >= n || gate.q1 == gate.q0))) {
        throw QubitIndexError("gate qubit index out of range for " + std::to_string(n) +
                              "-qubit Pauli string");
    }
    const std::size_t a = gate.q0;
    const bool xa = p.x.get(a);
    const bool za = p.z.get(a);
    switch (gate.kind) {
        case GateKind::H:
            p.negative ^= xa && za;
            p.x.set(a, za);
            p.z.set(a, xa);
            break;
        case GateKind::S:
            p.negative ^= xa && za;
            p.z.set(a, za != xa);
            break;
        case GateKind::Sdg:
            p.negative ^= xa && !za;
            p.z.set(a, za != xa);
            break;
        case GateKind::CNOT: {
            const std::size_t t = gate.q1;
            const bool xt = p.x.get(t);
            const bool zt = p.z.get(t);
            p.negative ^= xa && zt && !(xt != za);
            p.x.set(t, xt != xa);
            p.z.set(a, za != zt);
            break;
        }
    }
}

void Tableau::apply(const CliffordGate &gate) {
    if (gate.q0 >= num_qubits_ || (gate.is_two_qubit() && gate.q1 >= num_qubits_)) {
        throw QubitIndexError("gate qubit index out of range for " + std::to_string(num_qubits_) +
                              "-qubit tableau");
    }
    for (auto &r : rows_) {
        conjugate_in_place(r, gate);
    }
}

void Tableau::apply(const CliffordCircuit &circuit) {
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

std::size_t Tableau::ones() const noexcept {
    std::size_t total = 0;
    for (const auto &r : rows_) {
        total += r.x.count() + r.z.count();
    }
    return total;
}

Tableau conjugate_gate(Tableau t, const CliffordGate &gate) {
    t.apply(gate);
    return t;
}

Tableau conjugate_circuit(Tableau t, const CliffordCircuit &circuit) {
    t.apply(circuit);
    return t;
}

PauliTerm conjugate(PauliTerm p, const CliffordCircuit &circuit) {
    for (const auto &g : circuit.gates()) {
        conjugate_in_place(p, g);
    }
    return p;
}

}  // namespace ncf
