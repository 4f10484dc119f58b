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

#include "ncf/emit.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ncf/errors.hpp"

namespace ncf {

using nlohmann::json;

EmitFormat parse_emit_format(std::string_view name) {
    if (name == "qasm") {
        return EmitFormat::Qasm;
    }
    if (name == "json") {
        return EmitFormat::Json;
    }
    throw std::invalid_argument("unknown emit format '" + std::string(name) + "'");
}

namespace {

std::string format_angle(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_gates(std::ostringstream &out, const CliffordCircuit &c) {
    for (const auto &g : c.gates()) {
        out << gate_name(g.kind) << " q[" << g.q0 << "]";
        if (g.is_two_qubit()) {
            out << ",q[" << g.q1 << "]";
        }
        out << ";\n";
    }
}

json circuit_to_json(const CliffordCircuit &c) {
    json gates = json::array();
    for (const auto &g : c.gates()) {
        if (g.is_two_qubit()) {
            gates.push_back(json::array({gate_name(g.kind), g.q0, g.q1}));
        } else {
            gates.push_back(json::array({gate_name(g.kind), g.q0}));
        }
    }
    return gates;
}

GateKind gate_kind_from(const std::string &s) {
    if (s == "h") return GateKind::H;
    if (s == "s") return GateKind::S;
    if (s == "sdg") return GateKind::Sdg;
    if (s == "cx") return GateKind::CNOT;
    throw ParseError("unknown gate '" + s + "'", 0);
}

CliffordCircuit circuit_from_json(const json &j, std::size_t n) {
    CliffordCircuit c(n);
    for (const auto &g : j) {
        const auto kind = gate_kind_from(g.at(0).get<std::string>());
        const auto a = g.at(1).get<std::size_t>();
        if (kind == GateKind::CNOT) {
            c.append(CliffordGate::cnot(a, g.at(2).get<std::size_t>()));
        } else {
            c.append(CliffordGate{kind, a, 0});
        }
    }
    return c;
}

}  // namespace

std::string emit_qasm(const CliffordCircuit &circuit) {
    std::ostringstream out;
    write_gates(out, circuit);
    return out.str();
}

std::string emit_qasm(const CompiledProgram &program) {
    std::ostringstream out;
    out << "// ncf mode=" << program.mode << " window=" << program.window << "\n";
    out << "qreg q[" << program.num_qubits << "];\n";
    for (std::size_t s = 0; s < program.segments.size(); ++s) {
        const auto &seg = program.segments[s];
        out << "// segment " << s << "\n";
        write_gates(out, seg.frame);
        for (const auto &layer : seg.layers) {
            for (const auto &b : layer) {
                for (const auto &op : b.ops) {
                    out << "rot " << op.pauli << " " << format_angle(op.angle) << " ";
                    for (std::size_t k = 0; k < b.support.size(); ++k) {
                        out << (k ? "," : "") << "q[" << b.support[k] << "]";
                    }
                    out << ";\n";
                }
            }
        }
        write_gates(out, seg.unframe);
    }
    return out.str();
}

std::string emit_json(const CompiledProgram &program) {
    json j;
    j["num_qubits"] = program.num_qubits;
    j["mode"] = program.mode;
    j["window"] = program.window;
    j["identity_ids"] = program.identity_ids;
    json segs = json::array();
    for (const auto &seg : program.segments) {
        json s;
        s["frame"] = circuit_to_json(seg.frame);
        s["unframe"] = circuit_to_json(seg.unframe);
        json layers = json::array();
        for (const auto &layer : seg.layers) {
            json blocks = json::array();
            for (const auto &b : layer) {
                json jb;
                jb["support"] = b.support;
                jb["origin_ids"] = b.origin_ids;
                json ops = json::array();
                for (const auto &op : b.ops) {
                    ops.push_back({{"pauli", op.pauli}, {"angle", op.angle}, {"origin_id", op.origin_id}});
                }
                jb["ops"] = std::move(ops);
                blocks.push_back(std::move(jb));
            }
            layers.push_back(std::move(blocks));
        }
        s["layers"] = std::move(layers);
        segs.push_back(std::move(s));
    }
    j["segments"] = std::move(segs);
    return j.dump(2) + "\n";
}

std::string emit_json(const MetricsReport &r) {
    json j;
    j["n_paulis"] = r.n_paulis;
    j["unitary_count"] = r.unitary_count;
    j["unitary_depth"] = r.unitary_depth;
    j["structural_clifford_count"] = r.structural_clifford_count;
    j["eps_per_unitary"] = r.eps_per_unitary;
    j["est_t_count"] = r.est_t_count;
    j["est_t_depth"] = r.est_t_depth;
    j["est_total_clifford"] = r.est_total_clifford;
    return j.dump(2) + "\n";
}

std::string emit(const CompiledProgram &program, EmitFormat format) {
    return format == EmitFormat::Qasm ? emit_qasm(program) : emit_json(program);
}

CompiledProgram load_program_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        CompiledProgram p;
        p.num_qubits = j.at("num_qubits").get<std::size_t>();
        p.mode = j.at("mode").get<std::string>();
        p.window = j.at("window").get<std::size_t>();
        p.identity_ids = j.at("identity_ids").get<std::vector<std::size_t>>();
        for (const auto &s : j.at("segments")) {
            Segment seg;
            seg.frame = circuit_from_json(s.at("frame"), p.num_qubits);
            seg.unframe = circuit_from_json(s.at("unframe"), p.num_qubits);
            for (const auto &layer : s.at("layers")) {
                std::vector<RotationBlock> blocks;
                for (const auto &jb : layer) {
                    RotationBlock b;
                    b.support = jb.at("support").get<std::vector<std::size_t>>();
                    b.origin_ids = jb.at("origin_ids").get<std::vector<std::size_t>>();
                    for (const auto &op : jb.at("ops")) {
                        b.ops.push_back(RotationOp{op.at("pauli").get<std::string>(),
                                                   op.at("angle").get<double>(),
                                                   op.at("origin_id").get<std::size_t>()});
                    }
                    blocks.push_back(std::move(b));
                }
                seg.layers.push_back(std::move(blocks));
            }
            p.segments.push_back(std::move(seg));
        }
        return p;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed program JSON: ") + e.what(), 0);
    }
}

}  // namespace ncf
