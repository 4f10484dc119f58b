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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncf/bitvec.hpp"

namespace ncf {

/// One weighted Pauli string: sign * (sigma_0 ⊗ ... ⊗ sigma_{n-1}), implemented as
/// exp(-i * angle/2 * P). Qubit i is I/X/Z/Y for (x,z) = 00/10/01/11.
struct PauliTerm {
    BitVec x;
    BitVec z;
    bool negative = false;
    double angle = 0.0;
    std::size_t id = 0;

    PauliTerm() = default;
    explicit PauliTerm(std::size_t num_qubits) : x(num_qubits), z(num_qubits) {}

    std::size_t num_qubits() const noexcept { return x.size(); }
    int sign() const noexcept { return negative ? -1 : 1; }

    /// 'I', 'X', 'Y' or 'Z' on qubit q.
    char op(std::size_t q) const noexcept;
    void set_op(std::size_t q, char p);

    bool is_identity() const noexcept { return x.none() && z.none(); }
    std::size_t weight() const noexcept;
    std::vector<std::size_t> support() const;

    /// Letters only, e.g. "XYIZ".
    std::string letters() const;
    /// Sign-prefixed letters, e.g. "-XYIZ".
    std::string str() const;

    /// x‖z concatenated into one 2n-bit vector (phase-free identity of the string).
    BitVec symplectic() const;

    /// Equal operator content (bits and sign); angle and id are ignored.
    bool same_operator(const PauliTerm &other) const noexcept {
        return negative == other.negative && x == other.x && z == other.z;
    }

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/// Parse "XYIZ"-style text. angle = 2 * coefficient * dt, sign +1.
/// Throws ParseError (position = offending index) on empty text or bad letters.
PauliTerm parse_pauli(std::string_view text, double coefficient = 0.0, double dt = 1.0,
                      std::size_t id = 0);

/// Symplectic inner product test. Throws DimensionError on length mismatch.
bool commutes(const PauliTerm &p, const PauliTerm &q);

struct PauliProduct {
    /// XOR of the bit parts; negative = p.negative XOR q.negative.
    PauliTerm term;
    /// p*q = i^phase_exponent * term, in [0, 4).
    int phase_exponent = 0;
};

PauliProduct multiply(const PauliTerm &p, const PauliTerm &q);

/// Split a list into GF(2)-independent generators and generated terms.
struct GeneratorDecomposition {
    /// Term ids accepted as generators, in scan order.
    std::vector<std::size_t> generator_ids;
    /// Generated term id -> sorted generator ids whose product equals it up to phase.
    std::map<std::size_t, std::vector<std::size_t>> generated;

    bool is_generator(std::size_t id) const;
};

/// Earliest-first scan: a term becomes a generator iff it is independent of the
/// generators accepted before it. Throws DimensionError on mixed lengths.
GeneratorDecomposition decompose_generators(std::span<const PauliTerm> terms);

/// Incremental GF(2) basis over 2n-bit symplectic vectors.
class Gf2Basis {
  public:
    Gf2Basis() = default;

    std::size_t rank() const noexcept { return rows_.size(); }
    bool contains(const BitVec &v) const;
    /// Adds v if independent; returns true when added.
    bool insert(const BitVec &v);

  private:
    BitVec reduce(BitVec v) const;

    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace ncf
