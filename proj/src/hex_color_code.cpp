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

#include "hex_color_code.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gf2.hpp"

namespace stacked {

namespace {

constexpr std::array<Coord, 6> kHexNeighbors = {
    Coord{1, 0}, Coord{-1, 0}, Coord{0, 1}, Coord{0, -1}, Coord{1, -1}, Coord{-1, 1}};

bool is_center(const Coord &c) { return ((c.a - c.b) % 3 + 3) % 3 == 0; }

}  // namespace

const char *color_name(Color c) {
    switch (c) {
        case Color::Green:
            return "green";
        case Color::Purple:
            return "purple";
        case Color::Yellow:
            return "yellow";
    }
    return "?";
}

Color color_from_name(const std::string &name) {
    if (name == "green") return Color::Green;
    if (name == "purple") return Color::Purple;
    if (name == "yellow") return Color::Yellow;
    throw ParseError("unknown color name \"" + name + "\"");
}

HexColorCode HexColorCode::build(int d) {
    if (d < 3 || d % 2 == 0) throw ArgumentError("distance must be an odd integer >= 3");

    HexColorCode code;
    code.d_ = d;
    int s = (3 * d - 1) / 2;

    auto in_patch = [&](const Coord &c) { return c.a >= 0 && c.b >= 1 && c.a + c.b <= s; };

    // Row-major qubit indexing: sort sites by (b, a).
    std::map<std::pair<int, int>, uint32_t> qubit_index;
    std::vector<Coord> centers;
    for (int b = 1; b <= s; b++) {
        for (int a = 0; a + b <= s; a++) {
            Coord c{a, b};
            if (is_center(c)) {
                centers.push_back(c);
            } else {
                qubit_index[{b, a}] = uint32_t(code.coords_.size());
                code.coords_.push_back(c);
            }
        }
    }

    size_t n = code.coords_.size();
    if (n != size_t(3 * d * d + 1) / 4) throw DefectError("qubit count does not match closed form");

    for (const Coord &c : centers) {
        Plaquette p;
        p.center = c;
        p.color = Color(c.a % 3);
        for (const Coord &off : kHexNeighbors) {
            Coord q{c.a + off.a, c.b + off.b};
            if (in_patch(q)) p.support.push_back(qubit_index.at({q.b, q.a}));
        }
        std::sort(p.support.begin(), p.support.end());
        if (p.support.size() != 4 && p.support.size() != 6) {
            throw DefectError("plaquette truncated to unexpected weight");
        }
        code.plaquettes_.push_back(std::move(p));
    }
    if (code.plaquettes_.size() != size_t(3 * (d * d - 1) / 8)) {
        throw DefectError("plaquette count does not match closed form");
    }

    // Lattice edges: adjacent qubit pairs.
    for (uint32_t q = 0; q < n; q++) {
        const Coord &c = code.coords_[q];
        for (const Coord &off : kHexNeighbors) {
            Coord o{c.a + off.a, c.b + off.b};
            if (!in_patch(o) || is_center(o)) continue;
            uint32_t q2 = qubit_index.at({o.b, o.a});
            if (q < q2) code.lattice_edges_.push_back({q, q2});
        }
    }
    std::sort(code.lattice_edges_.begin(), code.lattice_edges_.end());

    // Boundary sides.  Plaquettes of color c never touch the side listed
    // under c, so the side's qubits form a weight-d c-colored string:
    // bottom row b=1 -> green, hypotenuse a+b=s -> purple, column a=0 ->
    // yellow (fixed by s = 1 mod 3).
    for (uint32_t q = 0; q < n; q++) {
        const Coord &c = code.coords_[q];
        if (c.b == 1) code.sides_[size_t(Color::Green)].push_back(q);
        if (c.a + c.b == s) code.sides_[size_t(Color::Purple)].push_back(q);
        if (c.a == 0) code.sides_[size_t(Color::Yellow)].push_back(q);
    }
    for (const auto &side : code.sides_) {
        if (side.size() != size_t(d)) throw DefectError("boundary side is not weight d");
    }

    code.edges_ = select_edge_generators(code);
    return code;
}

PauliOperator HexColorCode::x_plaquette_op(size_t i) const {
    return PauliOperator::from_support(num_qubits(), plaquettes_[i].support, 'X');
}

PauliOperator HexColorCode::z_plaquette_op(size_t i) const {
    return PauliOperator::from_support(num_qubits(), plaquettes_[i].support, 'Z');
}

PauliOperator HexColorCode::edge_op(size_t i) const {
    return PauliOperator::from_support(num_qubits(), edges_[i].qubits, 'Z');
}

StabilizerGroup HexColorCode::x_stabilizers() const {
    std::vector<PauliOperator> gens;
    for (size_t i = 0; i < plaquettes_.size(); i++) gens.push_back(x_plaquette_op(i));
    return StabilizerGroup(num_qubits(), std::move(gens));
}

StabilizerGroup HexColorCode::z_stabilizers() const {
    std::vector<PauliOperator> gens;
    for (size_t i = 0; i < plaquettes_.size(); i++) gens.push_back(z_plaquette_op(i));
    return StabilizerGroup(num_qubits(), std::move(gens));
}

StabilizerGroup HexColorCode::stabilizer_group() const {
    std::vector<PauliOperator> gens;
    for (size_t i = 0; i < plaquettes_.size(); i++) gens.push_back(x_plaquette_op(i));
    for (size_t i = 0; i < plaquettes_.size(); i++) gens.push_back(z_plaquette_op(i));
    return StabilizerGroup(num_qubits(), std::move(gens));
}

PauliOperator HexColorCode::logical_x() const {
    return PauliOperator::from_support(num_qubits(), BitVec::ones(num_qubits()), 'X');
}

PauliOperator HexColorCode::logical_z() const {
    return PauliOperator::from_support(num_qubits(), BitVec::ones(num_qubits()), 'Z');
}

const std::vector<uint32_t> &HexColorCode::boundary_side(Color c) const {
    return sides_[size_t(c)];
}

std::vector<BitVec> HexColorCode::edge_pairing_matrix() const {
    std::vector<BitVec> m;
    for (const auto &e : edges_) {
        BitVec row(plaquettes_.size());
        for (size_t j = 0; j < plaquettes_.size(); j++) {
            const auto &sup = plaquettes_[j].support;
            int overlap = int(std::binary_search(sup.begin(), sup.end(), e.qubits[0])) +
                          int(std::binary_search(sup.begin(), sup.end(), e.qubits[1]));
            if (overlap & 1) row.set(j, true);
        }
        m.push_back(std::move(row));
    }
    return m;
}

HexColorCode build_hex_color_code(int d) { return HexColorCode::build(d); }

/*
 * Pick one weight-2 Z edge operator per plaquette.
 *
 * An edge anticommutes with the plaquettes containing exactly one of its
 * endpoints.  The selection walks plaquettes in index order and takes the
 * first candidate edge (fewest anticommutations, then lexicographic) whose
 * anticommutation pattern is linearly independent of the patterns chosen
 * so far.  Validation then enforces, in order:
 *   - every pair intersects in exactly one site (unit diagonal),
 *   - the edge/plaquette anticommutation matrix is invertible over GF(2),
 *     which is what makes the gauge-measurement group evolution replace
 *     exactly the X plaquettes and nothing else,
 *   - the chosen edges and the Z plaquettes together span the Z operator
 *     of every lattice edge.
 * For d <= 7 every plaquette has an edge anticommuting with it alone and
 * the matrix comes out as the identity.  From d = 9 on, hexagons deep in
 * the bulk have no such edge (each candidate also clips one neighbor two
 * cells away), so the identity normal form is unreachable and invertible
 * is the contract.
 */
std::vector<EdgeGenerator> select_edge_generators(const HexColorCode &code) {
    const auto &plaq = code.plaquettes();
    size_t np = plaq.size();
    const auto &edges = code.lattice_edges();

    std::vector<BitVec> anti;  // per edge: anticommutation pattern over plaquettes
    anti.reserve(edges.size());
    for (const auto &e : edges) {
        BitVec row(np);
        for (size_t j = 0; j < np; j++) {
            const auto &sup = plaq[j].support;
            int overlap = int(std::binary_search(sup.begin(), sup.end(), e[0])) +
                          int(std::binary_search(sup.begin(), sup.end(), e[1]));
            if (overlap & 1) row.set(j, true);
        }
        anti.push_back(std::move(row));
    }

    std::vector<EdgeGenerator> chosen;
    gf2::Basis span;
    for (size_t j = 0; j < np; j++) {
        std::vector<size_t> candidates;
        for (size_t e = 0; e < edges.size(); e++) {
            if (anti[e].get(j)) candidates.push_back(e);
        }
        std::stable_sort(candidates.begin(), candidates.end(), [&](size_t a, size_t b) {
            return anti[a].popcount() < anti[b].popcount();
        });
        bool placed = false;
        for (size_t e : candidates) {
            if (span.contains(anti[e])) continue;
            span.insert(anti[e]);
            chosen.push_back(EdgeGenerator{uint32_t(j), edges[e]});
            placed = true;
            break;
        }
        if (!placed) throw DefectError("no independent edge available for plaquette");
    }

    // Unit diagonal: |e_j ^ P_j| = 1 for every pair.
    for (size_t j = 0; j < np; j++) {
        const auto &sup = plaq[j].support;
        int overlap = int(std::binary_search(sup.begin(), sup.end(), chosen[j].qubits[0])) +
                      int(std::binary_search(sup.begin(), sup.end(), chosen[j].qubits[1]));
        if (overlap != 1) throw DefectError("paired edge does not intersect its plaquette once");
    }
    if (span.rank() != np) throw DefectError("edge pairing matrix is singular");

    // Span condition: every lattice edge Z operator lies in the GF(2) span
    // of the chosen edges and the Z plaquettes.
    size_t n = code.num_qubits();
    gf2::Basis vec_span;
    for (const auto &eg : chosen) {
        BitVec v(n);
        v.set(eg.qubits[0], true);
        v.set(eg.qubits[1], true);
        vec_span.insert(v);
    }
    for (const auto &p : plaq) {
        BitVec v(n);
        for (uint32_t q : p.support) v.set(q, true);
        vec_span.insert(v);
    }
    for (const auto &e : edges) {
        BitVec v(n);
        v.set(e[0], true);
        v.set(e[1], true);
        if (!vec_span.contains(v)) throw DefectError("edge generators do not span the lattice edges");
    }

    return chosen;
}

PauliOperator minimal_logical_string(const HexColorCode &code, Color c) {
    return PauliOperator::from_support(code.num_qubits(), code.boundary_side(c), 'Z');
}

std::string HexColorCode::serialize() const {
    std::ostringstream out;
    out << "code2d d " << d_ << " n " << num_qubits() << "\n";
    for (size_t q = 0; q < coords_.size(); q++) {
        out << "qubit " << q << " " << coords_[q].a << " " << coords_[q].b << "\n";
    }
    for (size_t i = 0; i < plaquettes_.size(); i++) {
        const auto &p = plaquettes_[i];
        out << "plaquette " << i << " " << color_name(p.color);
        for (uint32_t q : p.support) out << " " << q;
        out << "\n";
    }
    for (const auto &e : edges_) {
        out << "edge " << e.plaquette << " " << e.qubits[0] << " " << e.qubits[1] << "\n";
    }
    out << "logical_x " << logical_x().str() << "\n";
    out << "logical_z " << logical_z().str() << "\n";
    for (int c = 0; c < 3; c++) {
        out << "side " << color_name(Color(c));
        for (uint32_t q : sides_[size_t(c)]) out << " " << q;
        out << "\n";
    }
    return out.str();
}

}  // namespace stacked
