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

#include "ncf/oracle.hpp"

#include <bit>
#include <cmath>
#include <vector>
#include <cstdlib>
#include <string>

#include "ncf/errors.hpp"

namespace ncf::oracle {

using cd = std::complex<double>;

std::size_t default_cap() {
    if (const char *env = std::getenv("NCF_ORACLE_CAP")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return kDefaultCap;
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw OracleCapExceeded("dense oracle limited to " + std::to_string(cap) + " qubits, got " +
                                std::to_string(n));
    }
}

std::size_t bit_of(std::size_t q, std::size_t n) { return std::size_t{1} << (n - 1 - q); }

DenseUnitary identity(std::size_t n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    return DenseUnitary::Identity(dim, dim);
}

/// Rows of P*U: (P U)[b ^ flip, :] = phase(b) U[b, :].
DenseUnitary pauli_times(const DenseUnitary &u, const PauliTerm &p) {
    const std::size_t n = p.num_qubits();
    std::size_t flip = 0;
    std::size_t zmask = 0;
    int y_count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (p.x.get(q)) flip |= bit_of(q, n);
        if (p.z.get(q)) zmask |= bit_of(q, n);
        if (p.x.get(q) && p.z.get(q)) ++y_count;
    }
    // Y = i X Z, so each Y contributes i and a Z-phase on the input bit.
    static const cd ipow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    const cd base = ipow[y_count % 4] * (p.negative ? -1.0 : 1.0);
    DenseUnitary out(u.rows(), u.cols());
    for (Eigen::Index b = 0; b < u.rows(); ++b) {
        const int parity = std::popcount(static_cast<std::size_t>(b) & zmask) & 1;
        const cd ph = parity ? -base : base;
        out.row(static_cast<Eigen::Index>(static_cast<std::size_t>(b) ^ flip)) = ph * u.row(b);
    }
    return out;
}

}  // namespace

void apply_exp_pauli(DenseUnitary &u, const PauliTerm &p, double theta) {
    const DenseUnitary pu = pauli_times(u, p);
    u = std::cos(theta / 2) * u - cd(0, std::sin(theta / 2)) * pu;
}

void apply_gate(DenseUnitary &u, const CliffordGate &g, std::size_t n) {
    if (g.q0 >= n || (g.is_two_qubit() && g.q1 >= n)) {
        throw QubitIndexError("gate qubit out of range in dense oracle");
    }
    const std::size_t dim = static_cast<std::size_t>(u.rows());
    const std::size_t m0 = bit_of(g.q0, n);
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (std::size_t b = 0; b < dim; ++b) {
                if (b & m0) continue;
                const auto i0 = static_cast<Eigen::Index>(b);
                const auto i1 = static_cast<Eigen::Index>(b | m0);
                const Eigen::RowVectorXcd a0 = u.row(i0);
                const Eigen::RowVectorXcd a1 = u.row(i1);
                u.row(i0) = r * (a0 + a1);
                u.row(i1) = r * (a0 - a1);
            }
            break;
        }
        case GateKind::S:
        case GateKind::Sdg: {
            const cd ph = g.kind == GateKind::S ? cd(0, 1) : cd(0, -1);
            for (std::size_t b = 0; b < dim; ++b) {
                if (b & m0) u.row(static_cast<Eigen::Index>(b)) *= ph;
            }
            break;
        }
        case GateKind::CNOT: {
            const std::size_t m1 = bit_of(g.q1, n);
            for (std::size_t b = 0; b < dim; ++b) {
                if ((b & m0) && !(b & m1)) {
                    u.row(static_cast<Eigen::Index>(b)).swap(u.row(static_cast<Eigen::Index>(b | m1)));
                }
            }
            break;
        }
    }
}

DenseUnitary pauli_matrix(const PauliTerm &p, std::size_t cap) {
    check_cap(p.num_qubits(), cap);
    return pauli_times(identity(p.num_qubits()), p);
}

DenseUnitary exp_pauli(const PauliTerm &p, double theta, std::size_t cap) {
    check_cap(p.num_qubits(), cap);
    DenseUnitary u = identity(p.num_qubits());
    apply_exp_pauli(u, p, theta);
    return u;
}

DenseUnitary gate_matrix(const CliffordGate &g, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    DenseUnitary u = identity(n);
    apply_gate(u, g, n);
    return u;
}

DenseUnitary circuit_unitary(const CliffordCircuit &c, std::size_t cap) {
    check_cap(c.num_qubits(), cap);
    DenseUnitary u = identity(c.num_qubits());
    for (const auto &g : c.gates()) {
        apply_gate(u, g, c.num_qubits());
    }
    return u;
}

namespace {

PauliTerm embed(const RotationOp &op, std::span<const std::size_t> support, std::size_t n) {
    if (op.pauli.size() != support.size()) {
        throw DimensionError("rotation Pauli length does not match its block support");
    }
    PauliTerm t(n);
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (support[k] >= n) {
            throw QubitIndexError("block support outside register");
        }
        t.set_op(support[k], op.pauli[k]);
    }
    return t;
}

void apply_segment(DenseUnitary &u, const Segment &s, std::size_t n) {
    for (const auto &g : s.frame.gates()) {
        apply_gate(u, g, n);
    }
    for (const auto &layer : s.layers) {
        for (const auto &b : layer) {
            for (const auto &op : b.ops) {
                apply_exp_pauli(u, embed(op, b.support, n), op.angle);
            }
        }
    }
    for (const auto &g : s.unframe.gates()) {
        apply_gate(u, g, n);
    }
}

void apply_reference(DenseUnitary &u, const Segment &s, std::span<const PauliTerm> terms) {
    for (const auto &layer : s.layers) {
        for (const auto &b : layer) {
            for (const auto &op : b.ops) {
                if (op.origin_id >= terms.size()) {
                    throw std::out_of_range("rotation origin id outside the term list");
                }
                const auto &t = terms[op.origin_id];
                apply_exp_pauli(u, t, t.angle);
            }
        }
    }
}

}  // namespace

DenseUnitary segment_unitary(const Segment &s, std::size_t n, std::size_t cap) {
    check_cap(n, cap);
    DenseUnitary u = identity(n);
    apply_segment(u, s, n);
    return u;
}

DenseUnitary program_unitary(const CompiledProgram &p, std::size_t cap) {
    check_cap(p.num_qubits, cap);
    DenseUnitary u = identity(p.num_qubits);
    for (const auto &s : p.segments) {
        apply_segment(u, s, p.num_qubits);
    }
    return u;
}

DenseUnitary reference_unitary(const CompiledProgram &program, std::span<const PauliTerm> terms,
                               std::size_t cap) {
    check_cap(program.num_qubits, cap);
    DenseUnitary u = identity(program.num_qubits);
    for (const auto &s : program.segments) {
        apply_reference(u, s, terms);
    }
    return u;
}

double phase_distance(const DenseUnitary &u, const DenseUnitary &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw DimensionError("unitaries have different shapes");
    }
    const cd tr = (v.adjoint() * u).trace();
    cd phase(1, 0);
    if (std::abs(tr) > 1e-12) {
        phase = tr / std::abs(tr);
    } else {
        Eigen::Index r = 0;
        Eigen::Index c = 0;
        v.cwiseAbs().maxCoeff(&r, &c);
        if (std::abs(v(r, c)) > 0 && std::abs(u(r, c)) > 0) {
            const cd ratio = u(r, c) / v(r, c);
            phase = ratio / std::abs(ratio);
        }
    }
    return (u - phase * v).norm();
}

bool equal_up_to_phase(const DenseUnitary &u, const DenseUnitary &v, double tol) {
    return phase_distance(u, v) <= tol;
}

VerifyReport verify_program(const CompiledProgram &program, std::span<const PauliTerm> terms,
                            double tol, std::size_t cap) {
    check_cap(program.num_qubits, cap);
    VerifyReport rep;
    const std::size_t n = program.num_qubits;

    std::vector<std::size_t> uses(terms.size(), 0);
    for (const auto &s : program.segments) {
        for (const auto &layer : s.layers) {
            for (const auto &b : layer) {
                for (const auto &op : b.ops) {
                    if (op.origin_id < uses.size()) ++uses[op.origin_id];
                }
            }
        }
    }
    for (std::size_t id : program.identity_ids) {
        if (id < uses.size() && terms[id].is_identity()) ++uses[id];
    }
    for (std::size_t id = 0; id < uses.size(); ++id) {
        if (uses[id] != 1) {
            rep.message = "term " + std::to_string(id) + " is implemented " +
                          std::to_string(uses[id]) + " times";
            return rep;
        }
    }
    for (std::size_t k = 0; k < program.segments.size(); ++k) {
        DenseUnitary got = identity(n);
        apply_segment(got, program.segments[k], n);
        DenseUnitary want = identity(n);
        apply_reference(want, program.segments[k], terms);
        const double d = phase_distance(got, want);
        if (d > tol) {
            rep.failing_segment = k;
            rep.distance = d;
            rep.message = "segment " + std::to_string(k) + " deviates by " + std::to_string(d);
            return rep;
        }
    }
    rep.distance = phase_distance(program_unitary(program, cap), reference_unitary(program, terms, cap));
    rep.passed = rep.distance <= tol;
    rep.message = rep.passed ? "ok" : "program deviates by " + std::to_string(rep.distance);
    return rep;
}

}  // namespace ncf::oracle
