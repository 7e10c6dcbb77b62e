// Copyright 2026 The stackedcodes Authors
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

#include "stabilizer_group.hpp"

#include <algorithm>

#include "gf2.hpp"

namespace stacked {

namespace {

// Concatenated (x|z) row of a Pauli, the GF(2) view used for rank and
// echelon computations.
BitVec symplectic_row(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVec row(2 * n);
    p.x_bits().for_each_set([&](size_t q) { row.set(q, true); });
    p.z_bits().for_each_set([&](size_t q) { row.set(n + q, true); });
    return row;
}

}  // namespace

bool CanonicalForm::operator==(const CanonicalForm &o) const {
    return pivots == o.pivots && rows == o.rows;
}

bool CanonicalForm::same_span(const CanonicalForm &o) const {
    if (pivots != o.pivots || rows.size() != o.rows.size()) return false;
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].x_bits() != o.rows[i].x_bits() || rows[i].z_bits() != o.rows[i].z_bits()) {
            return false;
        }
    }
    return true;
}

std::string CanonicalForm::str() const {
    std::string s;
    for (const auto &r : rows) {
        s += r.str();
        s += '\n';
    }
    return s;
}

StabilizerGroup::StabilizerGroup(size_t n, std::vector<PauliOperator> generators)
    : n_(n), gens_(std::move(generators)) {
    validate();
}

void StabilizerGroup::validate() const {
    if (n_ < 1) throw ArgumentError("stabilizer group needs at least one qubit");
    std::vector<BitVec> rows;
    rows.reserve(gens_.size());
    for (size_t i = 0; i < gens_.size(); i++) {
        const auto &g = gens_[i];
        if (g.num_qubits() != n_) throw DimensionError("generator acts on wrong qubit count");
        if (!g.is_hermitian()) throw ArgumentError("generator is not Hermitian");
        if (g.is_identity()) throw ArgumentError("generator is a phase times identity");
        for (size_t j = i + 1; j < gens_.size(); j++) {
            if (!g.commutes_with(gens_[j])) throw ArgumentError("generators do not commute");
        }
        rows.push_back(symplectic_row(g));
    }
    if (gf2::rank(rows) != gens_.size()) throw ArgumentError("generators are dependent over GF(2)");
}

CanonicalForm StabilizerGroup::canonical_form() const {
    std::vector<PauliOperator> rows = gens_;
    size_t m = rows.size();
    CanonicalForm cf;
    size_t r = 0;
    auto col_bit = [&](const PauliOperator &p, size_t c) {
        return c < n_ ? p.x_bits().get(c) : p.z_bits().get(c - n_);
    };
    for (size_t c = 0; c < 2 * n_ && r < m; c++) {
        size_t sel = m;
        for (size_t i = r; i < m; i++) {
            if (col_bit(rows[i], c)) {
                sel = i;
                break;
            }
        }
        if (sel == m) continue;
        std::swap(rows[sel], rows[r]);
        for (size_t i = 0; i < m; i++) {
            if (i != r && col_bit(rows[i], c)) rows[i] = rows[i] * rows[r];
        }
        cf.pivots.push_back(int(c));
        r++;
    }
    // Independence guarantees every generator became a pivot row.
    rows.resize(r);
    cf.rows = std::move(rows);
    return cf;
}

Containment StabilizerGroup::contains(const PauliOperator &p) const {
    if (p.num_qubits() != n_) throw DimensionError("operand acts on wrong qubit count");
    CanonicalForm cf = canonical_form();
    PauliOperator acc = p;
    for (size_t i = 0; i < cf.rows.size(); i++) {
        size_t c = size_t(cf.pivots[i]);
        bool bit = c < n_ ? acc.x_bits().get(c) : acc.z_bits().get(c - n_);
        if (bit) acc = acc * cf.rows[i];
    }
    if (!acc.is_identity()) return Containment::Outside;
    if (acc.phase() == 0) return Containment::InGroup;
    if (acc.phase() == 2) return Containment::InGroupNegated;
    return Containment::Outside;  // i*identity residue: p was not Hermitian
}

StabilizerGroup StabilizerGroup::after_measurement(const PauliOperator &m, int outcome,
                                                   MeasurementEffect *effect) const {
    if (m.num_qubits() != n_) throw DimensionError("measured operator acts on wrong qubit count");
    if (!m.is_hermitian()) throw ArgumentError("measured operator must be Hermitian");
    if (outcome != 1 && outcome != -1) throw ArgumentError("outcome must be +1 or -1");

    std::vector<size_t> anti;
    for (size_t i = 0; i < gens_.size(); i++) {
        if (!gens_[i].commutes_with(m)) anti.push_back(i);
    }
    if (anti.empty()) {
        if (effect) {
            effect->deterministic = true;
            effect->replaced_index = -1;
            effect->replaced_generator.reset();
            effect->forced_outcome.reset();
            switch (contains(m)) {
                case Containment::InGroup:
                    effect->forced_outcome = 1;
                    break;
                case Containment::InGroupNegated:
                    effect->forced_outcome = -1;
                    break;
                case Containment::Outside:
                    break;
            }
        }
        return *this;
    }

    size_t star = anti[0];
    std::vector<PauliOperator> out = gens_;
    for (size_t k = 1; k < anti.size(); k++) {
        out[anti[k]] = out[anti[k]] * gens_[star];
    }
    out[star] = outcome == 1 ? m : m.negated();
    if (effect) {
        effect->deterministic = false;
        effect->replaced_index = ptrdiff_t(star);
        effect->replaced_generator = gens_[star];
        effect->forced_outcome.reset();
    }
    // The update preserves commutation, independence and generator count;
    // tests re-validate via validate().
    return StabilizerGroup(unchecked_t{}, n_, std::move(out));
}

StabilizerGroup StabilizerGroup::with_pauli_applied(const PauliOperator &e) const {
    if (e.num_qubits() != n_) throw DimensionError("operand acts on wrong qubit count");
    std::vector<PauliOperator> out = gens_;
    for (auto &g : out) {
        if (!g.commutes_with(e)) g = g.negated();
    }
    return StabilizerGroup(unchecked_t{}, n_, std::move(out));
}

StabilizerGroup measure_pauli(const StabilizerGroup &group, const PauliOperator &m, int outcome) {
    return group.after_measurement(m, outcome);
}

CanonicalForm canonical_form(const StabilizerGroup &group) { return group.canonical_form(); }

Containment contains(const StabilizerGroup &group, const PauliOperator &p) {
    return group.contains(p);
}

}  // namespace stacked
