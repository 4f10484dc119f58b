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
#include <string>
#include <vector>

#include "ncf/clifford.hpp"
#include "ncf/clifford_synth.hpp"
#include "ncf/grouping.hpp"
#include "ncf/pauli.hpp"

namespace ncf {

/// One conjugated rotation exp(-i * angle/2 * P) with P given on the block support.
struct RotationOp {
    /// One letter per support qubit, e.g. "ZX" on support {0, 2}.
    std::string pauli;
    double angle = 0.0;
    std::size_t origin_id = 0;

    friend bool operator==(const RotationOp &, const RotationOp &) = default;
};

/// Rotations fused into a single 1- or 2-qubit unitary.
struct RotationBlock {
    std::vector<std::size_t> support;
    std::vector<RotationOp> ops;
    std::vector<std::size_t> origin_ids;

    std::size_t width() const noexcept { return support.size(); }

    friend bool operator==(const RotationBlock &, const RotationBlock &) = default;
};

/// frame, then rotation layers, then unframe (= frame^-1).
struct Segment {
    CliffordCircuit frame;
    std::vector<std::vector<RotationBlock>> layers;
    CliffordCircuit unframe;

    friend bool operator==(const Segment &, const Segment &) = default;
};

struct CompiledProgram {
    std::size_t num_qubits = 0;
    std::vector<Segment> segments;
    /// "baseline", "ncf1q" or "ncf2q".
    std::string mode = "baseline";
    std::size_t window = 0;
    /// All-identity input terms; they only contribute a global phase.
    std::vector<std::size_t> identity_ids;

    friend bool operator==(const CompiledProgram &, const CompiledProgram &) = default;
};

/// Analytic synthesizer model: a w-qubit block costs coeff_w * log2(1/eps) T gates.
struct CostModel {
    double eps_base = 0.001;
    double coeff_1q = 3.0;
    double coeff_2q = 11.5;
    /// Synthesized Clifford gates per synthesized T gate.
    double clifford_per_t = 2.5;

    /// Throws std::invalid_argument if eps_base is outside (0,1) or a coefficient is <= 0.
    void validate() const;
};

struct MetricsReport {
    std::size_t n_paulis = 0;
    std::size_t unitary_count = 0;
    std::size_t unitary_depth = 0;
    std::size_t structural_clifford_count = 0;
    double eps_per_unitary = 0.0;
    double est_t_count = 0.0;
    double est_t_depth = 0.0;
    double est_total_clifford = 0.0;
};

/// Per-group conjugation: the reduction plus every member after conjugation.
struct GroupConjugation {
    ConjugationResult reduction;
    /// Members in group.member_ids order, conjugated.
    Tableau members;
};

/// One segment per schedule layer; groups sharing a layer share the frame.
/// Throws ScheduleViolation if two groups in a layer touch a common qubit.
CompiledProgram assemble(std::size_t num_qubits, std::span<const Group> groups,
                         std::span<const GroupConjugation> conjugations,
                         const Schedule &schedule);

/// Resource estimate. n_paulis is the size of the source term list.
MetricsReport metrics(const CompiledProgram &program, const CostModel &model, std::size_t n_paulis);

/// Per-block T-count under the model at a given per-unitary error.
double block_t_cost(const RotationBlock &block, const CostModel &model, double eps);

/// Textbook per-term circuits: basis change, CNOT chain to the last non-trivial
/// qubit, Z rotation there, mirrored undo. One segment per term.
CompiledProgram baseline_compile(std::span<const PauliTerm> terms);

/// Basis change + CNOT chain used by baseline_compile for one term; conjugates the
/// term onto a single Z. Empty for identity terms.
CliffordCircuit baseline_frame(const PauliTerm &term);

/// Total Clifford gates in all frames and unframes.
std::size_t structural_clifford_count(const CompiledProgram &program);

std::size_t unitary_count(const CompiledProgram &program);

}  // namespace ncf
