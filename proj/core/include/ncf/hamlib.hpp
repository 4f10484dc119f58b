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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncf/pauli.hpp"

namespace ncf {

enum class LatticeModel { Ising, Heisenberg };

/// Open-boundary nearest-neighbour lattice. Sites are numbered row-major.
struct LatticeSpec {
    std::vector<std::size_t> dims;
    LatticeModel model = LatticeModel::Ising;
    double coupling = 1.0;
    double field = 1.0;  ///< transverse X field, Ising only
    double dt = 1.0;

    std::size_t num_sites() const;
    /// Throws std::invalid_argument unless dims has 2 or 3 entries, all >= 1.
    void validate() const;
};

/// Parse "5x6" or "3x4x5".
std::vector<std::size_t> parse_dims(std::string_view text);
LatticeModel parse_model(std::string_view name);

/// Edges (i, j), i < j, ordered by site then by axis.
std::vector<std::pair<std::size_t, std::size_t>> lattice_edges(std::span<const std::size_t> dims);

/// Shapes that reproduce the 30/60-qubit benchmark sizes: 2D 30 -> 5x6, 2D 60 -> 6x10,
/// 3D 30 -> 2x3x5, 3D 60 -> 3x4x5. Returns nullopt for other requests.
std::optional<std::vector<std::size_t>> standard_dims(std::size_t dimensionality,
                                                      std::size_t num_qubits);

/// ZZ per edge (angle 2*coupling*dt), then X per site (angle 2*field*dt).
/// If expected_qubits is given and differs from the site count, throws DimensionError.
std::vector<PauliTerm> gen_ising(const LatticeSpec &spec,
                                 std::optional<std::size_t> expected_qubits = std::nullopt);

/// XX, YY, ZZ per edge, angle 2*coupling*dt each.
std::vector<PauliTerm> gen_heisenberg(const LatticeSpec &spec,
                                      std::optional<std::size_t> expected_qubits = std::nullopt);

std::vector<PauliTerm> generate(const LatticeSpec &spec,
                                std::optional<std::size_t> expected_qubits = std::nullopt);

/// Parse "<coefficient> <letters>" lines; blank lines and '#' comments are skipped.
/// Throws ParseError (position = 1-based line) or DimensionError on mixed lengths.
/// Non-fatal findings (empty input, identity terms) are appended to *warnings.
std::vector<PauliTerm> parse_terms(std::istream &in, double dt = 1.0,
                                   std::vector<std::string> *warnings = nullptr);
std::vector<PauliTerm> load_terms(const std::filesystem::path &path, double dt = 1.0,
                                  std::vector<std::string> *warnings = nullptr);

/// Writes the term-file format; coefficient = signed angle / (2 dt).
void write_terms(std::ostream &out, std::span<const PauliTerm> terms, double dt = 1.0);

}  // namespace ncf
