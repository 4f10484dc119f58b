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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncf/bitvec.hpp"
#include "ncf/pauli.hpp"

namespace ncf {

// Term ids throughout this header are positions in the input term list.

/// Pairwise (anti)commutation relation over a term list.
struct CommutationGraphs {
    std::size_t n_terms = 0;
    /// anticommute[i] has bit j set iff terms i and j anticommute.
    std::vector<BitVec> anticommute;

    bool anticommutes(std::size_t i, std::size_t j) const { return anticommute[i].get(j); }
    bool commutes(std::size_t i, std::size_t j) const { return i != j && !anticommutes(i, j); }
};

CommutationGraphs build_graphs(std::span<const PauliTerm> terms);

enum class GroupKind { Anticommuting1Q, Anticommuting2Q, Commuting };

const char *group_kind_name(GroupKind kind) noexcept;

struct Group {
    GroupKind kind = GroupKind::Commuting;
    /// All members, ascending.
    std::vector<std::size_t> member_ids;
    /// Rows handed to the Clifford reduction, in reduction order: (Pa, Pb[, Pc[, Pd]])
    /// for anticommuting groups, every member for commuting groups.
    std::vector<std::size_t> generator_ids;
    /// member_ids minus generator_ids, ascending.
    std::vector<std::size_t> generated_ids;

    friend bool operator==(const Group &, const Group &) = default;
};

/// Groups sharing a layer run concurrently.
struct Schedule {
    std::vector<std::vector<std::size_t>> layers;
};

inline constexpr std::size_t kMinWindowSingle = 4;
inline constexpr std::size_t kMinWindowTwo = 16;
inline constexpr std::size_t kDefaultWindowSingle = 4;
inline constexpr std::size_t kDefaultWindowTwo = 128;

/// Window for one grouping iteration: the first anticommuting pair among `ungrouped`
/// (list order), then ungrouped ids from the front of the list up to `window` total.
/// Returns nullopt when the ungrouped terms are mutually commuting.
std::optional<std::vector<std::size_t>> select_window(std::span<const std::size_t> ungrouped,
                                                      const CommutationGraphs &graphs,
                                                      std::size_t window);

/// Anticommutation flags of a candidate quad, in the order
/// (Pa-Pc, Pb-Pc, Pa-Pd, Pb-Pd).
using QuadRelation = std::array<bool, 4>;

/// Whether the single-qubit parts of Pc and Pd anticommute once (Pa, Pb) are folded
/// onto one qubit.
bool part1_relation(const QuadRelation &rel);

/// True iff (Pa, Pb, Pc, Pd) can be folded onto two qubits: the remainders of Pc and
/// Pd must anticommute.
bool quad_compatible(const QuadRelation &rel, bool pcd_anticommute);

/// Score of a candidate (Pa, Pb): +3 for each generated term produced exactly by
/// {pa, pb}, otherwise +1 when pa or pb takes part in its generator set.
int grade_pair(std::size_t pa, std::size_t pb, const GeneratorDecomposition &decomp);

/// Single-qubit fusion grouping. Throws std::invalid_argument if window < 4.
std::vector<Group> group_single(std::span<const PauliTerm> terms,
                                std::size_t window = kDefaultWindowSingle);

/// Two-qubit fusion grouping. Throws std::invalid_argument if window < 16.
std::vector<Group> group_two(std::span<const PauliTerm> terms,
                             std::size_t window = kDefaultWindowTwo);

/// First-fit packing of the given mutually commuting ids into groups of at most
/// num_qubits GF(2)-independent members. All-identity terms get singleton groups.
std::vector<Group> pack_commuting(std::span<const PauliTerm> terms,
                                  std::span<const std::size_t> ids);

/// Greedy first-fit layering: each group joins the earliest layer whose qubits it
/// does not touch. supports[g] is the full compiled qubit set of group g.
Schedule reorder(std::size_t num_groups, std::span<const std::vector<std::size_t>> supports);

}  // namespace ncf
