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

#include "ncf/pipeline.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "ncf/clifford_synth.hpp"
#include "ncf/errors.hpp"

namespace ncf {

CompileMode parse_compile_mode(std::string_view name) {
    if (name == "baseline") return CompileMode::Baseline;
    if (name == "ncf1q") return CompileMode::Ncf1Q;
    if (name == "ncf2q") return CompileMode::Ncf2Q;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

const char *compile_mode_name(CompileMode mode) noexcept {
    switch (mode) {
        case CompileMode::Baseline: return "baseline";
        case CompileMode::Ncf1Q: return "ncf1q";
        case CompileMode::Ncf2Q: return "ncf2q";
    }
    return "?";
}

std::size_t default_window(CompileMode mode) noexcept {
    switch (mode) {
        case CompileMode::Ncf1Q: return kDefaultWindowSingle;
        case CompileMode::Ncf2Q: return kDefaultWindowTwo;
        default: return 0;
    }
}

namespace {

Tableau rows_for(std::span<const PauliTerm> terms, std::span<const std::size_t> ids) {
    Tableau t(terms.front().num_qubits());
    for (std::size_t id : ids) {
        t.push_back(terms[id]);
    }
    return t;
}

}  // namespace

GroupConjugation conjugate_group(std::span<const PauliTerm> terms, const Group &group) {
    const std::size_t n = terms.front().num_qubits();
    GroupConjugation gc;
    const Tableau members = rows_for(terms, group.member_ids);
    if (group.kind == GroupKind::Commuting) {
        if (group.member_ids.size() == 1 && terms[group.member_ids[0]].is_identity()) {
            gc.reduction = ConjugationResult{CliffordCircuit(n), members, {}, {}};
            gc.members = members;
            return gc;
        }
        gc.reduction = reduce_commuting(rows_for(terms, group.generator_ids));
        gc.members = conjugate_members(members, gc.reduction.circuit, gc.reduction.support);
        return gc;
    }
    const int mode = group.kind == GroupKind::Anticommuting1Q ? 1 : 2;
    gc.reduction = reduce_anticommuting(rows_for(terms, group.generator_ids), mode);
    gc.members = conjugate_members(members, gc.reduction.circuit, gc.reduction.support);
    return gc;
}

void check_group_invariants(std::span<const Group> groups, std::size_t num_terms,
                            std::size_t num_qubits) {
    std::vector<int> seen(num_terms, 0);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto &grp = groups[g];
        std::size_t limit = 0;
        switch (grp.kind) {
            case GroupKind::Anticommuting1Q: limit = 3; break;
            case GroupKind::Anticommuting2Q: limit = 15; break;
            case GroupKind::Commuting: limit = num_qubits; break;
        }
        if (grp.member_ids.empty() || grp.member_ids.size() > limit) {
            throw std::logic_error("group " + std::to_string(g) + " (" + group_kind_name(grp.kind) +
                                   ") has " + std::to_string(grp.member_ids.size()) + " members");
        }
        for (std::size_t id : grp.member_ids) {
            if (id >= num_terms || seen[id]++) {
                throw std::logic_error("term " + std::to_string(id) + " is not partitioned exactly once");
            }
        }
    }
    for (std::size_t id = 0; id < num_terms; ++id) {
        if (!seen[id]) {
            throw std::logic_error("term " + std::to_string(id) + " is not in any group");
        }
    }
}

CompileResult compile(std::span<const PauliTerm> terms, const CompileOptions &options) {
    CompileResult out;
    const std::size_t window =
        options.window == 0 ? default_window(options.mode) : options.window;
    if (options.mode == CompileMode::Baseline) {
        out.program = baseline_compile(terms);
        return out;
    }
    out.program.mode = compile_mode_name(options.mode);
    out.program.window = window;
    if (terms.empty()) {
        return out;
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].id != i) {
            throw std::invalid_argument("term ids must equal their list positions");
        }
    }
    const std::size_t n = terms.front().num_qubits();

    out.groups = options.mode == CompileMode::Ncf1Q ? group_single(terms, window)
                                                    : group_two(terms, window);
    check_group_invariants(out.groups, terms.size(), n);

    std::vector<std::vector<std::size_t>> supports;
    out.conjugations.reserve(out.groups.size());
    for (const auto &g : out.groups) {
        out.conjugations.push_back(conjugate_group(terms, g));
        const auto &red = out.conjugations.back().reduction;
        std::set<std::size_t> qs(red.support.begin(), red.support.end());
        for (std::size_t q : red.circuit.touched_qubits()) {
            qs.insert(q);
        }
        supports.emplace_back(qs.begin(), qs.end());
    }
    out.schedule = reorder(out.groups.size(), supports);
    out.program = assemble(n, out.groups, out.conjugations, out.schedule);
    out.program.mode = compile_mode_name(options.mode);
    out.program.window = window;
    return out;
}

}  // namespace ncf
