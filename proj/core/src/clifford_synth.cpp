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

#include "ncf/clifford_synth.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "ncf/errors.hpp"

namespace ncf {

namespace {

class Reducer {
  public:
    explicit Reducer(const Tableau &rows)
        : work_(rows), circuit_(rows.num_qubits()), n_(rows.num_qubits()) {}

    const Tableau &work() const { return work_; }
    CliffordCircuit take_circuit() { return std::move(circuit_); }
    Tableau take_work() { return std::move(work_); }

    void apply(const CliffordGate &g) {
        work_.apply(g);
        circuit_.append(g);
    }

    /// Columns of row r outside `excluded` where the row is non-trivial.
    std::vector<std::size_t> active_columns(std::size_t r, const std::set<std::size_t> &excluded,
                                            bool x_only) const {
        const auto &row = work_.row(r);
        std::vector<std::size_t> cols;
        for (std::size_t q = 0; q < n_; ++q) {
            if (excluded.count(q)) {
                continue;
            }
            if (row.x.get(q) || (!x_only && row.z.get(q))) {
                cols.push_back(q);
            }
        }
        return cols;
    }

    /// H where the row is Z, S where it is Y, on every non-excluded column.
    void clear_z(std::size_t r, const std::set<std::size_t> &excluded) {
        for (std::size_t q = 0; q < n_; ++q) {
            if (excluded.count(q) || !work_.row(r).z.get(q)) {
                continue;
            }
            apply(work_.row(r).x.get(q) ? CliffordGate::s(q) : CliffordGate::h(q));
        }
    }

    /// Rounds of disjoint CNOTs between the row's X columns until one remains.
    /// `keep`, if set, is never used as a CNOT target and so survives.
    std::size_t reduce_x(std::size_t r, const std::set<std::size_t> &excluded,
                         std::optional<std::size_t> keep) {
        auto ones = active_columns(r, excluded, true);
        while (ones.size() > 1) {
            std::vector<std::size_t> avail = ones;
            while (avail.size() >= 2) {
                std::size_t best_c = 0;
                std::size_t best_t = 0;
                long best_cost = std::numeric_limits<long>::max();
                for (std::size_t c : avail) {
                    for (std::size_t t : avail) {
                        if (c == t || (keep && t == *keep)) {
                            continue;
                        }
                        const long cost = cnot_delta(c, t);
                        if (cost < best_cost ||
                            (cost == best_cost && std::make_pair(c, t) < std::make_pair(best_c, best_t))) {
                            best_cost = cost;
                            best_c = c;
                            best_t = t;
                        }
                    }
                }
                apply(CliffordGate::cnot(best_c, best_t));
                avail.erase(std::remove_if(avail.begin(), avail.end(),
                                           [&](std::size_t q) { return q == best_c || q == best_t; }),
                            avail.end());
            }
            ones = active_columns(r, excluded, true);
        }
        if (ones.empty()) {
            throw ReductionImpossible("row " + std::to_string(r) +
                                      " is trivial on the columns left for reduction");
        }
        return ones.front();
    }

    /// Rounds of disjoint CNOTs folding a diagonal row's Z columns into one.
    /// CNOT(c -> t) maps Z_c Z_t to Z_t, so the control column is the one cleared.
    std::size_t reduce_z(std::size_t r, const std::set<std::size_t> &excluded) {
        auto ones = active_columns(r, excluded, false);
        while (ones.size() > 1) {
            std::vector<std::size_t> avail = ones;
            while (avail.size() >= 2) {
                std::size_t best_c = 0;
                std::size_t best_t = 0;
                long best_cost = std::numeric_limits<long>::max();
                for (std::size_t c : avail) {
                    for (std::size_t t : avail) {
                        if (c == t) {
                            continue;
                        }
                        const long cost = cnot_delta(c, t);
                        if (cost < best_cost ||
                            (cost == best_cost && std::make_pair(c, t) < std::make_pair(best_c, best_t))) {
                            best_cost = cost;
                            best_c = c;
                            best_t = t;
                        }
                    }
                }
                apply(CliffordGate::cnot(best_c, best_t));
                avail.erase(std::remove_if(avail.begin(), avail.end(),
                                           [&](std::size_t q) { return q == best_c || q == best_t; }),
                            avail.end());
            }
            ones = active_columns(r, excluded, false);
        }
        return ones.front();
    }

    bool is_diagonal(std::size_t r, const std::set<std::size_t> &excluded) const {
        return active_columns(r, excluded, true).empty();
    }

    /// Change in tableau ones-count if CNOT(c -> t) were applied.
    long cnot_delta(std::size_t c, std::size_t t) const {
        long delta = 0;
        for (const auto &row : work_.rows()) {
            const bool xc = row.x.get(c);
            const bool xt = row.x.get(t);
            const bool zc = row.z.get(c);
            const bool zt = row.z.get(t);
            delta += static_cast<long>(xt != xc) - static_cast<long>(xt);
            delta += static_cast<long>(zc != zt) - static_cast<long>(zc);
        }
        return delta;
    }

    bool is_single_z(std::size_t r, const std::set<std::size_t> &excluded, std::size_t *col) const {
        const auto cols = active_columns(r, excluded, false);
        if (cols.size() == 1 && !work_.row(r).x.get(cols[0])) {
            *col = cols[0];
            return true;
        }
        return false;
    }

    /// Bring row r to Z on a single fresh pivot outside `excluded`.
    std::size_t pivot_row(std::size_t r, const std::set<std::size_t> &excluded) {
        std::size_t col = 0;
        if (is_single_z(r, excluded, &col)) {
            return col;
        }
        if (active_columns(r, excluded, false).empty()) {
            throw ReductionImpossible("row " + std::to_string(r) +
                                      " is trivial on the columns left for reduction");
        }
        if (is_diagonal(r, excluded)) {
            return reduce_z(r, excluded);
        }
        clear_z(r, excluded);
        col = reduce_x(r, excluded, std::nullopt);
        apply(CliffordGate::h(col));
        return col;
    }

    /// Bring row r to X on `pivot` (plus whatever it carries on excluded columns).
    void partner_row(std::size_t r, std::size_t pivot, const std::set<std::size_t> &excluded) {
        if (!work_.row(r).x.get(pivot)) {
            throw ReductionImpossible("row " + std::to_string(r) +
                                      " commutes with its partner on the pivot qubit");
        }
        clear_z(r, excluded);
        const std::size_t left = reduce_x(r, excluded, pivot);
        if (left != pivot) {
            throw ReductionImpossible("row " + std::to_string(r) + " did not settle on the pivot");
        }
    }

  private:
    Tableau work_;
    CliffordCircuit circuit_;
    std::size_t n_;
};

std::vector<std::size_t> union_support(const Tableau &t) {
    std::set<std::size_t> qs;
    for (const auto &r : t.rows()) {
        for (std::size_t q : r.support()) {
            qs.insert(q);
        }
    }
    return {qs.begin(), qs.end()};
}

void require_support(const Tableau &t, std::span<const std::size_t> support) {
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        for (std::size_t q : t.row(i).support()) {
            if (std::find(support.begin(), support.end(), q) == support.end()) {
                throw SupportViolation("conjugated row " + std::to_string(i) + " (" +
                                       t.row(i).str() + ") acts outside its group support");
            }
        }
    }
}

}  // namespace

ConjugationResult reduce_anticommuting(const Tableau &generators, int mode) {
    if (mode != 1 && mode != 2) {
        throw std::invalid_argument("reduction mode must be 1 or 2");
    }
    const std::size_t rows = generators.num_rows();
    if (rows < 2 || rows > (mode == 1 ? 2u : 4u)) {
        throw ReductionImpossible("mode " + std::to_string(mode) + " reduction got " +
                                  std::to_string(rows) + " generator rows");
    }
    if (commutes(generators.row(0), generators.row(1))) {
        throw ReductionImpossible("leading generator pair commutes");
    }

    const auto existing = union_support(generators);
    if (existing.size() <= static_cast<std::size_t>(mode) && (rows <= 2 || existing.size() == 2)) {
        ConjugationResult r{CliffordCircuit(generators.num_qubits()), generators, existing, existing};
        return r;
    }

    Reducer red(generators);
    std::set<std::size_t> excluded;
    std::vector<std::size_t> pivots;

    const std::size_t p = red.pivot_row(0, excluded);
    red.partner_row(1, p, excluded);
    pivots.push_back(p);

    if (rows >= 3) {
        excluded.insert(p);
        const std::size_t q = red.pivot_row(2, excluded);
        pivots.push_back(q);
        if (rows == 4) {
            red.partner_row(3, q, excluded);
        }
    }

    ConjugationResult out;
    out.pivots = pivots;
    out.support = pivots;
    std::sort(out.support.begin(), out.support.end());
    out.circuit = red.take_circuit();
    out.conjugated = red.take_work();
    require_support(out.conjugated, out.support);
    return out;
}

ConjugationResult reduce_commuting(const Tableau &rows) {
    const std::size_t n = rows.num_qubits();
    if (rows.num_rows() > n) {
        throw ReductionImpossible("more commuting rows than qubits");
    }
    Reducer red(rows);
    std::set<std::size_t> excluded;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rows.num_rows(); ++r) {
        const auto &row = red.work().row(r);
        for (std::size_t p : pivots) {
            if (row.x.get(p)) {
                throw ReductionImpossible("row " + std::to_string(r) +
                                          " anticommutes with an earlier row");
            }
        }
        const std::size_t q = red.pivot_row(r, excluded);
        for (std::size_t p : pivots) {
            if (red.work().row(r).z.get(p)) {
                red.apply(CliffordGate::cnot(p, q));
            }
        }
        pivots.push_back(q);
        excluded.insert(q);
    }
    ConjugationResult out;
    out.pivots = pivots;
    out.support = pivots;
    std::sort(out.support.begin(), out.support.end());
    out.circuit = red.take_circuit();
    out.conjugated = red.take_work();
    return out;
}

Tableau conjugate_members(const Tableau &members, const CliffordCircuit &circuit,
                          std::span<const std::size_t> support) {
    Tableau out = conjugate_circuit(members, circuit);
    require_support(out, support);
    return out;
}

}  // namespace ncf
