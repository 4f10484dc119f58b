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

#include "ncf/pauli.hpp"

#include <algorithm>
#include <bit>

#include "ncf/errors.hpp"

namespace ncf {

char PauliTerm::op(std::size_t q) const noexcept {
    const bool xb = x.get(q);
    const bool zb = z.get(q);
    if (xb) {
        return zb ? 'Y' : 'X';
    }
    return zb ? 'Z' : 'I';
}

void PauliTerm::set_op(std::size_t q, char p) {
    switch (p) {
        case 'I': x.set(q, false); z.set(q, false); break;
        case 'X': x.set(q, true); z.set(q, false); break;
        case 'Y': x.set(q, true); z.set(q, true); break;
        case 'Z': x.set(q, false); z.set(q, true); break;
        default: throw ParseError(std::string("invalid Pauli letter '") + p + "'", q);
    }
}

std::size_t PauliTerm::weight() const noexcept { return (x | z).count(); }

std::vector<std::size_t> PauliTerm::support() const { return (x | z).set_bits(); }

std::string PauliTerm::letters() const {
    std::string out(num_qubits(), 'I');
    for (std::size_t q = 0; q < out.size(); ++q) {
        out[q] = op(q);
    }
    return out;
}

std::string PauliTerm::str() const { return (negative ? "-" : "+") + letters(); }

BitVec PauliTerm::symplectic() const {
    const std::size_t n = num_qubits();
    BitVec v(2 * n);
    for (std::size_t q : x.set_bits()) {
        v.set(q, true);
    }
    for (std::size_t q : z.set_bits()) {
        v.set(n + q, true);
    }
    return v;
}

PauliTerm parse_pauli(std::string_view text, double coefficient, double dt, std::size_t id) {
    if (text.empty()) {
        throw ParseError("empty Pauli string", 0);
    }
    PauliTerm t(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        const char c = text[q];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError("invalid Pauli letter '" + std::string(1, c) + "' at position " +
                                 std::to_string(q),
                             q);
        }
        t.set_op(q, c);
    }
    t.angle = 2.0 * coefficient * dt;
    t.id = id;
    return t;
}

namespace {

void require_same_size(const PauliTerm &p, const PauliTerm &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli strings act on " + std::to_string(p.num_qubits()) + " and " +
                             std::to_string(q.num_qubits()) + " qubits");
    }
}

}  // namespace

bool commutes(const PauliTerm &p, const PauliTerm &q) {
    require_same_size(p, q);
    return BitVec::dot(p.x, q.z) == BitVec::dot(p.z, q.x);
}

PauliProduct multiply(const PauliTerm &p, const PauliTerm &q) {
    require_same_size(p, q);
    PauliProduct out;
    out.term = PauliTerm(p.num_qubits());
    out.term.x = p.x ^ q.x;
    out.term.z = p.z ^ q.z;
    out.term.negative = p.negative != q.negative;

    // XY = iZ, YZ = iX, ZX = iY; reversed orders pick up -i.
    int plus = 0;
    int minus = 0;
    const auto px = p.x.words();
    const auto pz = p.z.words();
    const auto qx = q.x.words();
    const auto qz = q.z.words();
    for (std::size_t k = 0; k < px.size(); ++k) {
        const std::uint64_t a_x = px[k] & ~pz[k];
        const std::uint64_t a_y = px[k] & pz[k];
        const std::uint64_t a_z = ~px[k] & pz[k];
        const std::uint64_t b_x = qx[k] & ~qz[k];
        const std::uint64_t b_y = qx[k] & qz[k];
        const std::uint64_t b_z = ~qx[k] & qz[k];
        plus += std::popcount((a_x & b_y) | (a_y & b_z) | (a_z & b_x));
        minus += std::popcount((a_y & b_x) | (a_z & b_y) | (a_x & b_z));
    }
    out.phase_exponent = ((plus - minus) % 4 + 4) % 4;
    return out;
}

bool GeneratorDecomposition::is_generator(std::size_t id) const {
    return std::find(generator_ids.begin(), generator_ids.end(), id) != generator_ids.end();
}

GeneratorDecomposition decompose_generators(std::span<const PauliTerm> terms) {
    GeneratorDecomposition out;
    if (terms.empty()) {
        return out;
    }
    const std::size_t n = terms.front().num_qubits();
    const std::size_t width = 2 * n;

    // Each reduced row carries the set of generator slots it is a combination of.
    struct Row {
        BitVec vec;
        BitVec combo;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    const std::size_t max_generators = width;

    for (const auto &t : terms) {
        if (t.num_qubits() != n) {
            throw DimensionError("mixed qubit counts in generator decomposition");
        }
        BitVec v = t.symplectic();
        BitVec combo(max_generators);
        for (const auto &r : rows) {
            if (v.get(r.pivot)) {
                v ^= r.vec;
                combo ^= r.combo;
            }
        }
        const std::size_t pivot = v.first_set();
        if (pivot == v.size()) {
            std::vector<std::size_t> ids;
            for (std::size_t slot : combo.set_bits()) {
                ids.push_back(out.generator_ids[slot]);
            }
            std::sort(ids.begin(), ids.end());
            out.generated.emplace(t.id, std::move(ids));
            continue;
        }
        const std::size_t slot = out.generator_ids.size();
        out.generator_ids.push_back(t.id);
        combo.set(slot, true);
        // Clear the new pivot column from the rows already reduced.
        for (auto &r : rows) {
            if (r.vec.get(pivot)) {
                r.vec ^= v;
                r.combo ^= combo;
            }
        }
        rows.push_back(Row{std::move(v), std::move(combo), pivot});
    }
    return out;
}

BitVec Gf2Basis::reduce(BitVec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.get(pivots_[k])) {
            v ^= rows_[k];
        }
    }
    return v;
}

bool Gf2Basis::contains(const BitVec &v) const { return reduce(v).none(); }

bool Gf2Basis::insert(const BitVec &v) {
    BitVec r = reduce(v);
    const std::size_t pivot = r.first_set();
    if (pivot == r.size()) {
        return false;
    }
    for (auto &row : rows_) {
        if (row.get(pivot)) {
            row ^= r;
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace ncf
