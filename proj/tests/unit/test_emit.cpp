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

#include <gtest/gtest.h>

#include "ncf/errors.hpp"
#include "ncf/pipeline.hpp"
#include "test_util.hpp"

using namespace ncf;

TEST(emit_qasm, one_gate) {
    CliffordCircuit c(1);
    c.append(CliffordGate::h(0));
    EXPECT_EQ(emit_qasm(c), "h q[0];\n");
}

TEST(emit_qasm, gate_spellings) {
    CliffordCircuit c(3);
    c.append(CliffordGate::s(1));
    c.append(CliffordGate::sdg(2));
    c.append(CliffordGate::cnot(2, 0));
    EXPECT_EQ(emit_qasm(c), "s q[1];\nsdg q[2];\ncx q[2],q[0];\n");
}

TEST(emit_qasm, rot_pragmas_share_the_block_support) {
    CompiledProgram p;
    p.num_qubits = 3;
    p.mode = "ncf1q";
    p.window = 4;
    Segment s;
    s.frame = CliffordCircuit(3);
    s.unframe = CliffordCircuit(3);
    RotationBlock b;
    b.support = {2};
    b.ops = {{"Z", 0.5, 0}, {"X", 0.3, 1}};
    b.origin_ids = {0, 1};
    s.layers.push_back({b});
    p.segments.push_back(s);
    EXPECT_EQ(emit_qasm(p),
              "// ncf mode=ncf1q window=4\n"
              "qreg q[3];\n"
              "// segment 0\n"
              "rot Z 0.5 q[2];\n"
              "rot X 0.29999999999999999 q[2];\n");
}

TEST(emit_json, round_trip) {
    std::mt19937_64 rng(701);
    for (auto mode : {CompileMode::Baseline, CompileMode::Ncf1Q, CompileMode::Ncf2Q}) {
        const auto terms = fixtures::random_hamiltonian(rng, 5, 20);
        const auto p = compile(terms, {mode, 0}).program;
        const auto text = emit_json(p);
        EXPECT_EQ(load_program_json(text), p);
        EXPECT_EQ(emit(p, EmitFormat::Json), text);
    }
}

TEST(emit_json, metrics_fields) {
    MetricsReport r;
    r.n_paulis = 3;
    r.unitary_count = 2;
    const auto text = emit_json(r);
    for (const char *key : {"n_paulis", "unitary_count", "unitary_depth",
                            "structural_clifford_count", "eps_per_unitary", "est_t_count",
                            "est_t_depth", "est_total_clifford"}) {
        EXPECT_NE(text.find(std::string("\"") + key + "\""), std::string::npos) << key;
    }
}

TEST(load_program_json, malformed) {
    EXPECT_THROW(load_program_json("{"), ParseError);
    EXPECT_THROW(load_program_json("{\"num_qubits\": 2}"), ParseError);
    EXPECT_THROW(load_program_json("[1, 2]"), ParseError);
}

TEST(parse_emit_format, names) {
    EXPECT_EQ(parse_emit_format("qasm"), EmitFormat::Qasm);
    EXPECT_EQ(parse_emit_format("json"), EmitFormat::Json);
    EXPECT_THROW(parse_emit_format("quil"), std::invalid_argument);
}
