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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "ncf/circuit_ir.hpp"
#include "ncf/clifford.hpp"
#include "ncf/pauli.hpp"

namespace ncf::oracle {

// Dense reference simulator. Qubit 0 is the leftmost tensor factor, i.e. the most
// significant bit of a basis-state index.

using DenseUnitary = Eigen::MatrixXcd;

inline constexpr std::size_t kDefaultCap = 12;

/// kDefaultCap unless NCF_ORACLE_CAP holds a positive integer.
std::size_t default_cap();

/// sign * (sigma_0 ⊗ ... ⊗ sigma_{n-1}). Throws OracleCapExceeded if n > cap.
DenseUnitary pauli_matrix(const PauliTerm &p, std::size_t cap = default_cap());

/// cos(theta/2) I - i sin(theta/2) M(P).
DenseUnitary exp_pauli(const PauliTerm &p, double theta, std::size_t cap = default_cap());

DenseUnitary gate_matrix(const CliffordGate &g, std::size_t num_qubits,
                         std::size_t cap = default_cap());

DenseUnitary circuit_unitary(const CliffordCircuit &c, std::size_t cap = default_cap());

/// frame, blocks (each op expanded to exp_pauli on its support), unframe.
DenseUnitary segment_unitary(const Segment &s, std::size_t num_qubits,
                             std::size_t cap = default_cap());
DenseUnitary program_unitary(const CompiledProgram &p, std::size_t cap = default_cap());

/// Ordered product of exp(-i angle/2 P) over the origin ids of `program`, in the
/// order the program executes them (later terms multiply on the left).
DenseUnitary reference_unitary(const CompiledProgram &program, std::span<const PauliTerm> terms,
                               std::size_t cap = default_cap());

/// min over unit phases of ||U - phase V||_F <= tol. Throws DimensionError on
/// mismatched shapes.
bool equal_up_to_phase(const DenseUnitary &u, const DenseUnitary &v, double tol);

/// Frobenius distance after optimal phase alignment.
double phase_distance(const DenseUnitary &u, const DenseUnitary &v);

/// Left-multiplication kernels, exposed for tests and the verifier.
void apply_gate(DenseUnitary &u, const CliffordGate &g, std::size_t num_qubits);
void apply_exp_pauli(DenseUnitary &u, const PauliTerm &p, double theta);

struct VerifyReport {
    bool passed = false;
    double distance = 0.0;
    /// First segment whose own unitary disagrees with its terms, if any.
    std::optional<std::size_t> failing_segment;
    std::string message;
};

/// Whole-program and per-segment comparison against the term exponentials.
VerifyReport verify_program(const CompiledProgram &program, std::span<const PauliTerm> terms,
                            double tol = 1e-8, std::size_t cap = default_cap());

}  // namespace ncf::oracle
