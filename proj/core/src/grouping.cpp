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

#include "ncf/grouping.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "ncf/errors.hpp"

namespace ncf {

const char *group_kind_name(GroupKind kind) noexcept {
    switch (kind) {
        case GroupKind::Anticommuting1Q: return "anticommuting_1q";
        case GroupKind::Anticommuting2Q: return "anticommuting_2q";
        case GroupKind::Commuting: return "commuting";
    }
    return "?";
}

CommutationGraphs build_graphs(std::span<const PauliTerm> terms) {
    CommutationGraphs g;
    g.n_terms = terms.size();
    g.anticommute.assign(terms.size(), BitVec(terms.size()));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (!commutes(terms[i], terms[j])) {
                g.anticommute[i].set(j, true);
                g.anticommute[j].set(i, true);
            }
        }
    }
    return g;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_anticommuting_pair(
    std::span<const std::size_t> ungrouped, const CommutationGraphs &graphs) {
    if (ungrouped.size() < 2) {
        return std::nullopt;
    }
    BitVec mask(graphs.n_terms);
    for (std::size_t id : ungrouped) {
        mask.set(id, true);
    }
    for (std::size_t k = 0; k < ungrouped.size(); ++k) {
        const std::size_t i = ungrouped[k];
        mask.set(i, false);
        const BitVec hits = graphs.anticommute[i] & mask;
        if (hits.any()) {
            // Earliest partner in list order; ungrouped is ascending so lowest bit wins.
            for (std::size_t m = k + 1; m < ungrouped.size(); ++m) {
                if (hits.get(ungrouped[m])) {
                    return std::make_pair(i, ungrouped[m]);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> select_window(std::span<const std::size_t> ungrouped,
                                                      const CommutationGraphs &graphs,
                                                      std::size_t window) {
    if (window < 2) {
        throw std::invalid_argument("window must hold at least an anticommuting pair");
    }
    const auto pair = first_anticommuting_pair(ungrouped, graphs);
    if (!pair) {
        return std::nullopt;
    }
    std::vector<std::size_t> out{pair->first, pair->second};
    for (std::size_t id : ungrouped) {
        if (out.size() >= window) {
            break;
        }
        if (id != pair->first && id != pair->second) {
            out.push_back(id);
        }
    }
    return out;
}

bool part1_relation(const QuadRelation &rel) {
    const bool a = rel[0];
    const bool b = rel[1];
    const bool c = rel[2];
    const bool d = rel[3];
    if ((!a && !b) || (!c && !d)) {
        return false;  // one side folds to I
    }
    if (a == c && b == d) {
        return false;  // same single-qubit operator
    }
    return true;
}

bool quad_compatible(const QuadRelation &rel, bool pcd_anticommute) {
    return pcd_anticommute != part1_relation(rel);
}

int grade_pair(std::size_t pa, std::size_t pb, const GeneratorDecomposition &decomp) {
    int grade = 0;
    for (const auto &[id, gens] : decomp.generated) {
        const bool has_a = std::find(gens.begin(), gens.end(), pa) != gens.end();
        const bool has_b = std::find(gens.begin(), gens.end(), pb) != gens.end();
        if (gens.size() == 2 && has_a && has_b) {
            grade += 3;
        } else if (has_a || has_b) {
            grade += 1;
        }
    }
    return grade;
}

namespace {

/// Ungrouped terms indexed by their phase-free bit content.
class UngroupedIndex {
  public:
    explicit UngroupedIndex(std::span<const PauliTerm> terms) : keys_(terms.size()) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            keys_[i] = terms[i].symplectic();
            by_key_[keys_[i]].push_back(i);
            ungrouped_.insert(i);
        }
    }

    const BitVec &key(std::size_t id) const { return keys_[id]; }

    /// Lowest-id ungrouped term with this content.
    std::optional<std::size_t> find(const BitVec &key) const {
        auto it = by_key_.find(key);
        if (it == by_key_.end() || it->second.empty()) {
            return std::nullopt;
        }
        return it->second.front();
    }

    void remove(std::size_t id) {
        auto &bucket = by_key_[keys_[id]];
        bucket.erase(std::find(bucket.begin(), bucket.end(), id));
        ungrouped_.erase(id);
    }

    std::vector<std::size_t> ungrouped() const { return {ungrouped_.begin(), ungrouped_.end()}; }
    bool empty() const { return ungrouped_.empty(); }

  private:
    std::vector<BitVec> keys_;
    std::unordered_map<BitVec, std::vector<std::size_t>> by_key_;
    std::set<std::size_t> ungrouped_;
};

GeneratorDecomposition decompose_window(std::span<const PauliTerm> terms,
                                        std::span<const std::size_t> window) {
    std::vector<PauliTerm> rows;
    rows.reserve(window.size());
    for (std::size_t id : window) {
        rows.push_back(terms[id]);
        rows.back().id = id;
    }
    return decompose_generators(rows);
}

/// Ungrouped terms equal (up to phase) to some nonzero product of `gens`, one per
/// distinct product, ascending.
std::vector<std::size_t> span_members(const UngroupedIndex &index,
                                      std::span<const std::size_t> gens) {
    std::set<std::size_t> found;
    const std::size_t k = gens.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        BitVec v;
        for (std::size_t b = 0; b < k; ++b) {
            if ((mask >> b) & 1u) {
                v = v.size() == 0 ? index.key(gens[b]) : (v ^ index.key(gens[b]));
            }
        }
        if (auto id = index.find(v)) {
            found.insert(*id);
        }
    }
    return {found.begin(), found.end()};
}

Group make_group(GroupKind kind, std::vector<std::size_t> generators,
                 std::vector<std::size_t> members) {
    Group g;
    g.kind = kind;
    std::sort(members.begin(), members.end());
    g.member_ids = members;
    for (std::size_t id : members) {
        if (std::find(generators.begin(), generators.end(), id) == generators.end()) {
            g.generated_ids.push_back(id);
        }
    }
    g.generator_ids = std::move(generators);
    return g;
}

std::vector<std::size_t> sorted_generators(const GeneratorDecomposition &decomp) {
    std::vector<std::size_t> gens = decomp.generator_ids;
    std::sort(gens.begin(), gens.end());
    return gens;
}

Group single_step(const UngroupedIndex &index, const CommutationGraphs &graphs,
                  const GeneratorDecomposition &decomp) {
    const auto gens = sorted_generators(decomp);
    std::optional<std::pair<std::size_t, std::size_t>> first_pair;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const std::size_t a = gens[i];
            const std::size_t b = gens[j];
            if (!graphs.anticommutes(a, b)) {
                continue;
            }
            if (!first_pair) {
                first_pair = std::make_pair(a, b);
            }
            if (auto g = index.find(index.key(a) ^ index.key(b))) {
                return make_group(GroupKind::Anticommuting1Q, {a, b}, {a, b, *g});
            }
        }
    }
    if (!first_pair) {
        throw std::logic_error("grouping window holds no anticommuting generator pair");
    }
    return make_group(GroupKind::Anticommuting1Q, {first_pair->first, first_pair->second},
                      {first_pair->first, first_pair->second});
}

Group two_step(const UngroupedIndex &index, const CommutationGraphs &graphs,
               const GeneratorDecomposition &decomp) {
    const auto gens = sorted_generators(decomp);

    std::optional<std::pair<std::size_t, std::size_t>> best_pair;
    int best_grade = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!graphs.anticommutes(gens[i], gens[j])) {
                continue;
            }
            const int grade = grade_pair(gens[i], gens[j], decomp);
            if (grade > best_grade) {
                best_grade = grade;
                best_pair = std::make_pair(gens[i], gens[j]);
            }
        }
    }
    if (!best_pair) {
        throw std::logic_error("grouping window holds no anticommuting generator pair");
    }
    const auto [a, b] = *best_pair;

    std::vector<std::size_t> rest;
    for (std::size_t g : gens) {
        if (g != a && g != b) {
            rest.push_back(g);
        }
    }

    std::vector<std::size_t> best_members;
    std::vector<std::size_t> best_gens;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            const std::size_t c = rest[i];
            const std::size_t d = rest[j];
            const QuadRelation rel{graphs.anticommutes(a, c), graphs.anticommutes(b, c),
                                   graphs.anticommutes(a, d), graphs.anticommutes(b, d)};
            if (!quad_compatible(rel, graphs.anticommutes(c, d))) {
                continue;
            }
            const std::vector<std::size_t> quad{a, b, c, d};
            auto members = span_members(index, quad);
            if (members.size() > best_members.size()) {
                best_members = std::move(members);
                best_gens = quad;
            }
        }
    }
    if (best_gens.empty()) {
        for (std::size_t c : rest) {
            const std::vector<std::size_t> triple{a, b, c};
            auto members = span_members(index, triple);
            if (members.size() > best_members.size()) {
                best_members = std::move(members);
                best_gens = triple;
            }
        }
    }
    if (best_gens.empty()) {
        best_gens = {a, b};
        best_members = span_members(index, best_gens);
    }
    return make_group(GroupKind::Anticommuting2Q, std::move(best_gens), std::move(best_members));
}

template <typename Step>
std::vector<Group> run_grouping(std::span<const PauliTerm> terms, std::size_t window, Step step) {
    std::vector<Group> groups;
    if (terms.empty()) {
        return groups;
    }
    const std::size_t n = terms.front().num_qubits();
    for (const auto &t : terms) {
        if (t.num_qubits() != n) {
            throw DimensionError("mixed qubit counts in grouping input");
        }
    }
    const auto graphs = build_graphs(terms);
    UngroupedIndex index(terms);
    while (!index.empty()) {
        const auto ungrouped = index.ungrouped();
        const auto win = select_window(ungrouped, graphs, window);
        if (!win) {
            auto commuting = pack_commuting(terms, ungrouped);
            groups.insert(groups.end(), commuting.begin(), commuting.end());
            break;
        }
        const auto decomp = decompose_window(terms, *win);
        Group g = step(index, graphs, decomp);
        for (std::size_t id : g.member_ids) {
            index.remove(id);
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

}  // namespace

std::vector<Group> group_single(std::span<const PauliTerm> terms, std::size_t window) {
    if (window < kMinWindowSingle) {
        throw std::invalid_argument("single-qubit grouping needs a window of at least 4");
    }
    return run_grouping(terms, window, single_step);
}

std::vector<Group> group_two(std::span<const PauliTerm> terms, std::size_t window) {
    if (window < kMinWindowTwo) {
        throw std::invalid_argument("two-qubit grouping needs a window of at least 16");
    }
    return run_grouping(terms, window, two_step);
}

std::vector<Group> pack_commuting(std::span<const PauliTerm> terms,
                                  std::span<const std::size_t> ids) {
    struct Open {
        std::vector<std::size_t> members;
        Gf2Basis basis;
    };
    std::vector<Open> open;
    std::vector<Group> identities;
    for (std::size_t id : ids) {
        const auto &t = terms[id];
        if (t.is_identity()) {
            identities.push_back(make_group(GroupKind::Commuting, {id}, {id}));
            continue;
        }
        const BitVec key = t.symplectic();
        bool placed = false;
        for (auto &o : open) {
            if (o.members.size() < t.num_qubits() && !o.basis.contains(key)) {
                o.basis.insert(key);
                o.members.push_back(id);
                placed = true;
                break;
            }
        }
        if (!placed) {
            Open o;
            o.basis.insert(key);
            o.members.push_back(id);
            open.push_back(std::move(o));
        }
    }
    std::vector<Group> out;
    for (auto &o : open) {
        out.push_back(make_group(GroupKind::Commuting, o.members, o.members));
    }
    out.insert(out.end(), identities.begin(), identities.end());
    return out;
}

Schedule reorder(std::size_t num_groups, std::span<const std::vector<std::size_t>> supports) {
    if (supports.size() != num_groups) {
        throw std::invalid_argument("reorder needs one support set per group");
    }
    Schedule s;
    std::vector<std::set<std::size_t>> used;
    for (std::size_t g = 0; g < num_groups; ++g) {
        const auto &sup = supports[g];
        bool placed = false;
        for (std::size_t l = 0; l < s.layers.size(); ++l) {
            const bool clash = std::any_of(sup.begin(), sup.end(),
                                           [&](std::size_t q) { return used[l].count(q) > 0; });
            if (!clash) {
                s.layers[l].push_back(g);
                used[l].insert(sup.begin(), sup.end());
                placed = true;
                break;
            }
        }
        if (!placed) {
            s.layers.push_back({g});
            used.emplace_back(sup.begin(), sup.end());
        }
    }
    return s;
}

}  // namespace ncf
