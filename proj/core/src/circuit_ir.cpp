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

#include "ncf/circuit_ir.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ncf/errors.hpp"
#include "ncf/tableau.hpp"

namespace ncf {

void CostModel::validate() const {
    if (!(eps_base > 0.0 && eps_base < 1.0)) {
        throw std::invalid_argument("eps_base must lie in (0, 1)");
    }
    if (!(coeff_1q > 0.0) || !(coeff_2q > 0.0)) {
        throw std::invalid_argument("synthesis coefficients must be positive");
    }
    if (clifford_per_t < 0.0) {
        throw std::invalid_argument("clifford_per_t must be non-negative");
    }
}

namespace {

std::string local_letters(const PauliTerm &p, std::span<const std::size_t> support) {
    std::string out;
    out.reserve(support.size());
    for (std::size_t q : support) {
        out.push_back(p.op(q));
    }
    return out;
}

RotationOp make_op(const PauliTerm &conj, std::span<const std::size_t> support) {
    RotationOp op;
    op.pauli = local_letters(conj, support);
    // exp(-i t/2 (-P)) = exp(-i (-t)/2 P)
    op.angle = conj.negative ? -conj.angle : conj.angle;
    op.origin_id = conj.id;
    return op;
}

std::vector<std::size_t> narrow_support(const PauliTerm &p) { return p.support(); }

}  // namespace

CompiledProgram assemble(std::size_t num_qubits, std::span<const Group> groups,
                         std::span<const GroupConjugation> conjugations,
                         const Schedule &schedule) {
    if (groups.size() != conjugations.size()) {
        throw std::invalid_argument("assemble needs one conjugation per group");
    }
    CompiledProgram prog;
    prog.num_qubits = num_qubits;

    std::vector<bool> seen(groups.size(), false);
    for (const auto &layer : schedule.layers) {
        Segment seg;
        seg.frame = CliffordCircuit(num_qubits);
        std::vector<RotationBlock> blocks;
        std::set<std::size_t> used;
        for (std::size_t g : layer) {
            if (g >= groups.size() || seen[g]) {
                throw ScheduleViolation("schedule lists group " + std::to_string(g) +
                                        " twice or out of range");
            }
            seen[g] = true;
            const auto &group = groups[g];
            const auto &conj = conjugations[g];

            std::set<std::size_t> footprint;
            for (std::size_t q : conj.reduction.circuit.touched_qubits()) {
                footprint.insert(q);
            }
            for (std::size_t q : conj.reduction.support) {
                footprint.insert(q);
            }
            for (std::size_t q : footprint) {
                if (!used.insert(q).second) {
                    throw ScheduleViolation("groups sharing a layer overlap on qubit " +
                                            std::to_string(q));
                }
            }
            seg.frame.append(conj.reduction.circuit);

            if (group.kind == GroupKind::Commuting) {
                for (const auto &m : conj.members.rows()) {
                    if (m.is_identity()) {
                        prog.identity_ids.push_back(m.id);
                        continue;
                    }
                    RotationBlock b;
                    b.support = narrow_support(m);
                    b.ops.push_back(make_op(m, b.support));
                    b.origin_ids.push_back(m.id);
                    blocks.push_back(std::move(b));
                }
            } else {
                RotationBlock b;
                b.support = conj.reduction.support;
                for (const auto &m : conj.members.rows()) {
                    b.ops.push_back(make_op(m, b.support));
                    b.origin_ids.push_back(m.id);
                }
                blocks.push_back(std::move(b));
            }
        }
        if (blocks.empty()) {
            continue;
        }
        seg.unframe = seg.frame.inverse();
        seg.layers.push_back(std::move(blocks));
        prog.segments.push_back(std::move(seg));
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ScheduleViolation("schedule does not cover every group");
    }
    std::sort(prog.identity_ids.begin(), prog.identity_ids.end());
    return prog;
}

std::size_t structural_clifford_count(const CompiledProgram &program) {
    std::size_t total = 0;
    for (const auto &s : program.segments) {
        total += s.frame.size() + s.unframe.size();
    }
    return total;
}

std::size_t unitary_count(const CompiledProgram &program) {
    std::size_t total = 0;
    for (const auto &s : program.segments) {
        for (const auto &layer : s.layers) {
            total += layer.size();
        }
    }
    return total;
}

double block_t_cost(const RotationBlock &block, const CostModel &model, double eps) {
    const double coeff = block.width() >= 2 ? model.coeff_2q : model.coeff_1q;
    return coeff * std::max(0.0, std::log2(1.0 / eps));
}

MetricsReport metrics(const CompiledProgram &program, const CostModel &model, std::size_t n_paulis) {
    model.validate();
    MetricsReport r;
    r.n_paulis = n_paulis;
    r.unitary_count = unitary_count(program);
    r.structural_clifford_count = structural_clifford_count(program);
    for (const auto &s : program.segments) {
        r.unitary_depth += s.layers.size();
    }
    if (r.unitary_count == 0) {
        r.est_total_clifford = static_cast<double>(r.structural_clifford_count);
        return r;
    }
    r.eps_per_unitary =
        model.eps_base * static_cast<double>(n_paulis) / static_cast<double>(r.unitary_count);
    for (const auto &s : program.segments) {
        for (const auto &layer : s.layers) {
            double worst = 0.0;
            for (const auto &b : layer) {
                const double c = block_t_cost(b, model, r.eps_per_unitary);
                r.est_t_count += c;
                worst = std::max(worst, c);
            }
            r.est_t_depth += worst;
        }
    }
    r.est_total_clifford =
        static_cast<double>(r.structural_clifford_count) + model.clifford_per_t * r.est_t_count;
    return r;
}

CliffordCircuit baseline_frame(const PauliTerm &term) {
    const std::size_t n = term.num_qubits();
    CliffordCircuit c(n);
    const auto sup = term.support();
    for (std::size_t q : sup) {
        switch (term.op(q)) {
            case 'X':
                c.append(CliffordGate::h(q));
                break;
            case 'Y':
                c.append(CliffordGate::sdg(q));
                c.append(CliffordGate::h(q));
                break;
            default:
                break;
        }
    }
    for (std::size_t k = 0; k + 1 < sup.size(); ++k) {
        c.append(CliffordGate::cnot(sup[k], sup[k + 1]));
    }
    return c;
}

CompiledProgram baseline_compile(std::span<const PauliTerm> terms) {
    CompiledProgram prog;
    prog.mode = "baseline";
    if (terms.empty()) {
        return prog;
    }
    prog.num_qubits = terms.front().num_qubits();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto &t = terms[i];
        if (t.num_qubits() != prog.num_qubits) {
            throw DimensionError("mixed qubit counts in baseline input");
        }
        if (t.is_identity()) {
            prog.identity_ids.push_back(i);
            continue;
        }
        Segment seg;
        seg.frame = baseline_frame(t);
        PauliTerm conj = conjugate(t, seg.frame);
        conj.id = i;
        const std::size_t last = t.support().back();
        if (conj.weight() != 1 || conj.op(last) != 'Z') {
            throw std::logic_error("baseline frame failed to map " + t.str() + " onto Z");
        }
        RotationBlock b;
        b.support = {last};
        b.ops.push_back(make_op(conj, b.support));
        b.origin_ids.push_back(i);
        seg.layers.push_back({std::move(b)});
        seg.unframe = seg.frame.inverse();
        prog.segments.push_back(std::move(seg));
    }
    return prog;
}

}  // namespace ncf
