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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "ncf/errors.hpp"
#include "ncf/pipeline.hpp"
#include "test_util.hpp"

using namespace ncf;
using ncf::fixtures::kron_circuit;
using ncf::fixtures::Mat;

namespace {

using Ids = std::vector<std::size_t>;

RotationBlock one_qubit_block(std::size_t q) {
    RotationBlock b;
    b.support = {q};
    b.ops.push_back({"Z", 0.1, 0});
    return b;
}

CompiledProgram program_of_blocks(std::vector<std::vector<RotationBlock>> layers) {
    CompiledProgram p;
    p.num_qubits = 8;
    Segment s;
    s.frame = CliffordCircuit(8);
    s.unframe = CliffordCircuit(8);
    s.layers = std::move(layers);
    p.segments.push_back(std::move(s));
    return p;
}

Mat block_matrix_ordered(const PauliTerm &t) { return fixtures::eig_exp(t, t.angle); }

}  // namespace

TEST(assemble, six_term_example_single_qubit_mode) {
    const auto terms = fixtures::six_term_example();
    const auto res = compile(terms, {CompileMode::Ncf1Q, 0});
    const auto &p = res.program;
    ASSERT_EQ(p.segments.size(), 2u);
    ASSERT_EQ(p.segments[0].layers.size(), 1u);
    EXPECT_EQ(p.segments[0].layers[0].size(), 2u);
    EXPECT_EQ(p.segments[0].unframe, p.segments[0].frame.inverse());
    EXPECT_EQ(unitary_count(p), 3u);
    EXPECT_EQ(p.segments[0].layers[0][0].origin_ids, (Ids{0, 2, 4}));
    EXPECT_EQ(p.segments[0].layers[0][1].origin_ids, (Ids{1}));
    EXPECT_EQ(p.segments[1].layers[0][0].origin_ids, (Ids{3, 5}));
}

TEST(assemble, empty) {
    const auto p = assemble(4, {}, {}, Schedule{});
    EXPECT_TRUE(p.segments.empty());
    EXPECT_EQ(unitary_count(p), 0u);
}

TEST(assemble, single_term_group) {
    const auto terms = fixtures::terms_of({"XYZ"});
    const std::vector<Group> groups{{GroupKind::Commuting, {0}, {0}, {}}};
    const std::vector<GroupConjugation> conj{conjugate_group(terms, groups[0])};
    const auto p = assemble(3, groups, conj, Schedule{{{0}}});
    ASSERT_EQ(p.segments.size(), 1u);
    EXPECT_FALSE(p.segments[0].frame.empty());
    EXPECT_EQ(p.segments[0].unframe, p.segments[0].frame.inverse());
    ASSERT_EQ(p.segments[0].layers.size(), 1u);
    ASSERT_EQ(p.segments[0].layers[0].size(), 1u);
    EXPECT_EQ(p.segments[0].layers[0][0].width(), 1u);
}

TEST(assemble, overlapping_layer_is_rejected) {
    const auto terms = fixtures::terms_of({"XX", "ZZ"});
    const std::vector<Group> groups{{GroupKind::Commuting, {0}, {0}, {}},
                                    {GroupKind::Commuting, {1}, {1}, {}}};
    const std::vector<GroupConjugation> conj{conjugate_group(terms, groups[0]),
                                             conjugate_group(terms, groups[1])};
    EXPECT_THROW(assemble(2, groups, conj, Schedule{{{0, 1}}}), ScheduleViolation);
    EXPECT_THROW(assemble(2, groups, conj, Schedule{{{0}}}), ScheduleViolation);
    EXPECT_THROW(assemble(2, groups, conj, Schedule{{{0}, {0}}}), ScheduleViolation);
    EXPECT_NO_THROW(assemble(2, groups, conj, Schedule{{{0}, {1}}}));
}

TEST(assemble, negative_sign_flips_angle) {
    // H maps Y to -Y, so a frame containing H must negate the rotation.
    auto terms = fixtures::terms_of({"Y"});
    terms[0].angle = 0.4;
    GroupConjugation gc;
    gc.reduction.circuit = CliffordCircuit(1);
    gc.reduction.circuit.append(CliffordGate::h(0));
    gc.reduction.support = {0};
    gc.members = conjugate_circuit(Tableau(terms), gc.reduction.circuit);
    const std::vector<Group> groups{{GroupKind::Anticommuting1Q, {0}, {0}, {}}};
    const auto p = assemble(1, groups, std::vector{gc}, Schedule{{{0}}});
    EXPECT_EQ(p.segments[0].layers[0][0].ops[0].pauli, "Y");
    EXPECT_DOUBLE_EQ(p.segments[0].layers[0][0].ops[0].angle, -0.4);
}

TEST(metrics, eps_per_unitary_formula) {
    std::vector<RotationBlock> layer;
    for (std::size_t i = 0; i < 315; ++i) layer.push_back(one_qubit_block(i % 8));
    const auto r = metrics(program_of_blocks({layer}), CostModel{}, 630);
    EXPECT_DOUBLE_EQ(r.eps_per_unitary, 0.002);
    const auto r2 = metrics(program_of_blocks({layer}), CostModel{}, 315);
    EXPECT_DOUBLE_EQ(r2.eps_per_unitary, 0.001);
}

TEST(metrics, closed_form_single_qubit_t_count) {
    // 79 * 3 * log2(1000) = 237 * 9.965784 = 2361.89
    std::vector<std::vector<RotationBlock>> layers;
    for (std::size_t i = 0; i < 79; ++i) layers.push_back({one_qubit_block(0)});
    const auto r = metrics(program_of_blocks(layers), CostModel{}, 79);
    EXPECT_NEAR(r.est_t_count, 2361.89, 0.01);
    EXPECT_NEAR(r.est_t_depth, r.est_t_count, 1e-9);
    EXPECT_EQ(r.unitary_count, 79u);
    EXPECT_EQ(r.unitary_depth, 79u);
    EXPECT_NEAR(r.est_total_clifford, 2.5 * r.est_t_count, 1e-9);
}

TEST(metrics, depth_takes_layer_maximum) {
    RotationBlock wide;
    wide.support = {2, 3};
    wide.ops.push_back({"ZZ", 0.3, 0});
    const auto r = metrics(program_of_blocks({{one_qubit_block(0), wide}}), CostModel{}, 2);
    const double log_term = std::log2(1.0 / 0.001);
    EXPECT_NEAR(r.est_t_count, (3.0 + 11.5) * log_term, 1e-9);
    EXPECT_NEAR(r.est_t_depth, 11.5 * log_term, 1e-9);
    EXPECT_LE(r.unitary_depth, r.unitary_count);
}

TEST(metrics, zero_unitaries) {
    const auto r = metrics(CompiledProgram{}, CostModel{}, 0);
    EXPECT_EQ(r.unitary_count, 0u);
    EXPECT_EQ(r.est_t_count, 0.0);
    EXPECT_EQ(r.eps_per_unitary, 0.0);
}

TEST(metrics, rejects_bad_model) {
    CostModel m;
    m.eps_base = 1.5;
    EXPECT_THROW(metrics(CompiledProgram{}, m, 0), std::invalid_argument);
    m = CostModel{};
    m.coeff_2q = 0;
    EXPECT_THROW(m.validate(), std::invalid_argument);
}

TEST(metrics, t_count_strictly_decreases_with_fewer_unitaries) {
    const std::size_t n_paulis = 200;
    double previous = -1.0;
    for (std::size_t k = 1; k <= n_paulis; ++k) {
        std::vector<RotationBlock> layer;
        for (std::size_t i = 0; i < k; ++i) layer.push_back(one_qubit_block(i % 8));
        const double t = metrics(program_of_blocks({layer}), CostModel{}, n_paulis).est_t_count;
        EXPECT_GT(t, previous) << "k=" << k;
        previous = t;
    }
}

TEST(baseline_frame, xyiz_shape) {
    const auto c = baseline_frame(parse_pauli("XYIZ"));
    const std::vector<CliffordGate> want{CliffordGate::h(0), CliffordGate::sdg(1),
                                         CliffordGate::h(1), CliffordGate::cnot(0, 1),
                                         CliffordGate::cnot(1, 3)};
    EXPECT_EQ(c.gates(), want);
}

TEST(baseline_compile, single_z_needs_no_clifford) {
    auto terms = fixtures::terms_of({"ZIII"});
    const auto p = baseline_compile(terms);
    ASSERT_EQ(p.segments.size(), 1u);
    EXPECT_TRUE(p.segments[0].frame.empty());
    EXPECT_EQ(p.segments[0].layers[0][0].support, (Ids{0}));
}

TEST(baseline_compile, zz_is_cnot_rz_cnot) {
    auto terms = fixtures::terms_of({"ZZ"});
    terms[0].angle = 0.9;
    const auto p = baseline_compile(terms);
    EXPECT_EQ(structural_clifford_count(p), 2u);
    EXPECT_EQ(unitary_count(p), 1u);
    const auto &s = p.segments[0];
    const Mat rz = fixtures::eig_exp(parse_pauli("IZ"), s.layers[0][0].ops[0].angle);
    const Mat u = kron_circuit(s.unframe) * rz * kron_circuit(s.frame);
    EXPECT_LT((u - block_matrix_ordered(terms[0])).norm(), 1e-10);
}

TEST(baseline_compile, per_term_equivalence) {
    std::mt19937_64 rng(601);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + k % 5;
        auto terms = fixtures::random_hamiltonian(rng, n, 1, false);
        const auto p = baseline_compile(terms);
        ASSERT_EQ(p.segments.size(), 1u);
        const auto &s = p.segments[0];
        const auto &b = s.layers[0][0];
        PauliTerm local(n);
        local.set_op(b.support[0], b.ops[0].pauli[0]);
        const Mat u = kron_circuit(s.unframe) * fixtures::eig_exp(local, b.ops[0].angle) *
                      kron_circuit(s.frame);
        const Mat want = block_matrix_ordered(terms[0]);
        const std::complex<double> tr = (want.adjoint() * u).trace();
        EXPECT_LT((u - (tr / std::abs(tr)) * want).norm(), 1e-10) << terms[0].str();
    }
}

TEST(baseline_compile, identity_terms_are_flagged) {
    const auto p = baseline_compile(fixtures::terms_of({"II", "XZ"}));
    EXPECT_EQ(p.identity_ids, (Ids{0}));
    EXPECT_EQ(unitary_count(p), 1u);
}

TEST(layer_property, blocks_in_a_layer_are_disjoint) {
    std::mt19937_64 rng(602);
    for (int k = 0; k < 60; ++k) {
        const auto terms = fixtures::random_hamiltonian(rng, 2 + k % 7, 5 + k % 30);
        for (auto mode : {CompileMode::Baseline, CompileMode::Ncf1Q, CompileMode::Ncf2Q}) {
            const auto p = compile(terms, {mode, 0}).program;
            for (const auto &s : p.segments) {
                EXPECT_EQ(s.unframe, s.frame.inverse());
                for (const auto &layer : s.layers) {
                    std::set<std::size_t> used;
                    for (const auto &b : layer) {
                        EXPECT_GE(b.width(), 1u);
                        EXPECT_LE(b.width(), 2u);
                        EXPECT_LE(b.ops.size(), b.width() == 1 ? 3u : 15u);
                        for (auto q : b.support) EXPECT_TRUE(used.insert(q).second);
                        for (const auto &op : b.ops) {
                            EXPECT_TRUE(std::isfinite(op.angle));
                            EXPECT_NE(op.pauli, std::string(op.pauli.size(), 'I'));
                        }
                    }
                }
            }
        }
    }
}
