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

#include "ncf/hamlib.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ncf/errors.hpp"

namespace ncf {

std::size_t LatticeSpec::num_sites() const {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void LatticeSpec::validate() const {
    if (dims.size() != 2 && dims.size() != 3) {
        throw std::invalid_argument("lattice needs 2 or 3 dimensions");
    }
    for (auto d : dims) {
        if (d == 0) {
            throw std::invalid_argument("lattice dimensions must be positive");
        }
    }
}

std::vector<std::size_t> parse_dims(std::string_view text) {
    std::vector<std::size_t> dims;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('x', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto part = text.substr(start, end - start);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw std::invalid_argument("bad lattice dims '" + std::string(text) + "'");
        }
        dims.push_back(value);
        start = end + 1;
    }
    LatticeSpec{dims}.validate();
    return dims;
}

LatticeModel parse_model(std::string_view name) {
    if (name == "ising") {
        return LatticeModel::Ising;
    }
    if (name == "heisenberg") {
        return LatticeModel::Heisenberg;
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> lattice_edges(std::span<const std::size_t> dims) {
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t a = dims.size(); a-- > 1;) {
        stride[a - 1] = stride[a] * dims[a];
    }
    const std::size_t sites = dims.empty() ? 0 : stride[0] * dims[0];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t s = 0; s < sites; ++s) {
        for (std::size_t a = 0; a < dims.size(); ++a) {
            const std::size_t coord = (s / stride[a]) % dims[a];
            if (coord + 1 < dims[a]) {
                edges.emplace_back(s, s + stride[a]);
            }
        }
    }
    return edges;
}

std::optional<std::vector<std::size_t>> standard_dims(std::size_t dimensionality,
                                                      std::size_t num_qubits) {
    if (dimensionality == 2 && num_qubits == 30) return std::vector<std::size_t>{5, 6};
    if (dimensionality == 2 && num_qubits == 60) return std::vector<std::size_t>{6, 10};
    if (dimensionality == 3 && num_qubits == 30) return std::vector<std::size_t>{2, 3, 5};
    if (dimensionality == 3 && num_qubits == 60) return std::vector<std::size_t>{3, 4, 5};
    return std::nullopt;
}

namespace {

void check_sites(const LatticeSpec &spec, std::optional<std::size_t> expected) {
    spec.validate();
    if (expected && *expected != spec.num_sites()) {
        throw DimensionError("lattice has " + std::to_string(spec.num_sites()) +
                             " sites but " + std::to_string(*expected) + " qubits were requested");
    }
}

PauliTerm lattice_term(std::size_t n, std::initializer_list<std::pair<std::size_t, char>> ops,
                       double angle, std::size_t id) {
    PauliTerm t(n);
    for (const auto &[q, p] : ops) {
        t.set_op(q, p);
    }
    t.angle = angle;
    t.id = id;
    return t;
}

}  // namespace

std::vector<PauliTerm> gen_ising(const LatticeSpec &spec, std::optional<std::size_t> expected_qubits) {
    check_sites(spec, expected_qubits);
    const std::size_t n = spec.num_sites();
    std::vector<PauliTerm> out;
    for (const auto &[i, j] : lattice_edges(spec.dims)) {
        out.push_back(lattice_term(n, {{i, 'Z'}, {j, 'Z'}}, 2.0 * spec.coupling * spec.dt, out.size()));
    }
    for (std::size_t s = 0; s < n; ++s) {
        out.push_back(lattice_term(n, {{s, 'X'}}, 2.0 * spec.field * spec.dt, out.size()));
    }
    return out;
}

std::vector<PauliTerm> gen_heisenberg(const LatticeSpec &spec,
                                      std::optional<std::size_t> expected_qubits) {
    check_sites(spec, expected_qubits);
    const std::size_t n = spec.num_sites();
    const double angle = 2.0 * spec.coupling * spec.dt;
    std::vector<PauliTerm> out;
    for (const auto &[i, j] : lattice_edges(spec.dims)) {
        for (char p : {'X', 'Y', 'Z'}) {
            out.push_back(lattice_term(n, {{i, p}, {j, p}}, angle, out.size()));
        }
    }
    return out;
}

std::vector<PauliTerm> generate(const LatticeSpec &spec, std::optional<std::size_t> expected_qubits) {
    return spec.model == LatticeModel::Ising ? gen_ising(spec, expected_qubits)
                                             : gen_heisenberg(spec, expected_qubits);
}

std::vector<PauliTerm> parse_terms(std::istream &in, double dt, std::vector<std::string> *warnings) {
    std::vector<PauliTerm> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string coeff_text;
        std::string letters;
        std::string extra;
        fields >> coeff_text >> letters;
        if (letters.empty() || (fields >> extra)) {
            throw ParseError("line " + std::to_string(line_no) +
                                 ": expected '<coefficient> <pauli letters>'",
                             line_no);
        }
        double coeff = 0.0;
        const auto [ptr, ec] =
            std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
        if (ec != std::errc() || ptr != coeff_text.data() + coeff_text.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": bad coefficient '" +
                                 coeff_text + "'",
                             line_no);
        }
        PauliTerm t;
        try {
            t = parse_pauli(letters, coeff, dt, out.size());
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
        if (!out.empty() && t.num_qubits() != out.front().num_qubits()) {
            throw DimensionError("line " + std::to_string(line_no) + ": string has " +
                                 std::to_string(t.num_qubits()) + " qubits, expected " +
                                 std::to_string(out.front().num_qubits()));
        }
        if (t.is_identity() && warnings) {
            warnings->push_back("line " + std::to_string(line_no) +
                                ": identity term only contributes a global phase");
        }
        out.push_back(std::move(t));
    }
    if (out.empty() && warnings) {
        warnings->push_back("no Pauli terms in input");
    }
    return out;
}

std::vector<PauliTerm> load_terms(const std::filesystem::path &path, double dt,
                                  std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open term file '" + path.string() + "'");
    }
    return parse_terms(in, dt, warnings);
}

void write_terms(std::ostream &out, std::span<const PauliTerm> terms, double dt) {
    char buf[32];
    for (const auto &t : terms) {
        const double angle = t.negative ? -t.angle : t.angle;
        std::snprintf(buf, sizeof(buf), "%.17g", angle / (2.0 * dt));
        out << buf << ' ' << t.letters() << '\n';
    }
}

}  // namespace ncf
