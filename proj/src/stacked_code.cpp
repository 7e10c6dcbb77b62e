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

#include "stacked_code.hpp"

#include <cmath>
#include <sstream>

namespace stacked {

PauliOperator StackedCode::embed(size_t layer, const PauliOperator &op2d) const {
    return op2d.embedded(total_n_, layer_offset(layer));
}

PauliOperator StackedCode::layer_logical(size_t l, char letter) const {
    if (l == size_t(d_)) return PauliOperator::single(total_n_, ancilla_qubit(), letter);
    PauliOperator full =
        PauliOperator::from_support(layer_.num_qubits(), BitVec::ones(layer_.num_qubits()), letter);
    return embed(l, full);
}

PauliOperator StackedCode::layer_side(size_t l, Color c, char letter) const {
    if (l == size_t(d_)) return PauliOperator::single(total_n_, ancilla_qubit(), letter);
    PauliOperator s = PauliOperator::from_support(layer_.num_qubits(), layer_.boundary_side(c), letter);
    return embed(l, s);
}

PauliOperator StackedCode::gauge_op(size_t pair, size_t i) const {
    PauliOperator e = layer_.edge_op(i);
    return embed(2 * pair - 1, e) * embed(2 * pair, e);
}

PauliOperator StackedCode::base_z(size_t pair, size_t i) const {
    return embed(2 * pair - 1, layer_.z_plaquette_op(i));
}

PauliOperator StackedCode::cell_x(size_t pair, size_t i) const {
    PauliOperator g = layer_.x_plaquette_op(i);
    return embed(2 * pair - 1, g) * embed(2 * pair, g);
}

PauliOperator StackedCode::cell_z(size_t pair, size_t i) const {
    PauliOperator h = layer_.z_plaquette_op(i);
    return embed(2 * pair - 1, h) * embed(2 * pair, h);
}

PauliOperator StackedCode::bell_x(size_t pair) const {
    return layer_logical(2 * pair, 'X') * layer_logical(2 * pair + 1, 'X');
}

PauliOperator StackedCode::bell_z(size_t pair) const {
    return layer_logical(2 * pair, 'Z') * layer_logical(2 * pair + 1, 'Z');
}

std::vector<PauliOperator> StackedCode::all_gauge_ops() const {
    std::vector<PauliOperator> out;
    for (size_t k = 1; k <= num_pairs(); k++) {
        for (size_t i = 0; i < plaquettes_per_layer(); i++) out.push_back(gauge_op(k, i));
    }
    return out;
}

StackedCode StackedCode::build(int d) {
    if (d < 3 || d % 2 == 0) throw ArgumentError("distance must be an odd integer >= 3");
    StackedCode code;
    code.d_ = d;
    code.layer_ = HexColorCode::build(d);
    code.total_n_ = size_t(d - 1) * code.layer_.num_qubits() + 1;

    std::vector<PauliOperator> gens;
    for (size_t k = 1; k <= code.num_pairs(); k++) {
        for (size_t i = 0; i < code.plaquettes_per_layer(); i++) gens.push_back(code.gauge_op(k, i));
        for (size_t i = 0; i < code.plaquettes_per_layer(); i++) gens.push_back(code.base_z(k, i));
        for (size_t i = 0; i < code.plaquettes_per_layer(); i++) gens.push_back(code.cell_x(k, i));
        for (size_t i = 0; i < code.plaquettes_per_layer(); i++) gens.push_back(code.cell_z(k, i));
        gens.push_back(code.bell_x(k));
        gens.push_back(code.bell_z(k));
    }
    if (gens.size() != code.total_n_ - 1) throw DefectError("stacked generator count is off");
    code.group_gens_ = gens;
    code.group_ = StabilizerGroup(code.total_n_, std::move(gens));
    return code;
}

StabilizerGroup StackedCode::left_column_group() const {
    std::vector<PauliOperator> gens;
    for (size_t k = 1; k <= num_pairs(); k++) {
        for (size_t i = 0; i < plaquettes_per_layer(); i++) {
            gens.push_back(embed(2 * k - 1, layer_.x_plaquette_op(i)));
        }
        for (size_t i = 0; i < plaquettes_per_layer(); i++) gens.push_back(base_z(k, i));
        for (size_t i = 0; i < plaquettes_per_layer(); i++) gens.push_back(cell_x(k, i));
        for (size_t i = 0; i < plaquettes_per_layer(); i++) gens.push_back(cell_z(k, i));
        gens.push_back(bell_x(k));
        gens.push_back(bell_z(k));
    }
    return StabilizerGroup(total_n_, std::move(gens));
}

PauliOperator StackedCode::logical_x() const {
    return PauliOperator::from_support(total_n_, BitVec::ones(total_n_), 'X');
}

PauliOperator StackedCode::logical_z() const {
    return PauliOperator::from_support(total_n_, BitVec::ones(total_n_), 'Z');
}

PauliOperator StackedCode::column_logical_z(uint32_t q2d) const {
    if (q2d >= layer_.num_qubits()) throw ArgumentError("qubit index out of range");
    BitVec sup(total_n_);
    for (size_t l = 1; l <= num_layers(); l++) sup.set(global_qubit(l, q2d), true);
    sup.set(ancilla_qubit(), true);
    return PauliOperator::from_support(total_n_, sup, 'Z');
}

StackedCode build_stacked_code(int d) { return StackedCode::build(d); }

const char *cell_color_name(CellColor c) {
    switch (c) {
        case CellColor::Green:
            return "green";
        case CellColor::Purple:
            return "purple";
        case CellColor::Yellow:
            return "yellow";
        case CellColor::Blue:
            return "blue";
    }
    return "?";
}

DualLattice dual_lattice(const StackedCode &code) {
    DualLattice dl;
    std::vector<BitVec> supports;

    auto add = [&](char pauli, CellColor color, int pair, int plaquette, const PauliOperator &op) {
        dl.vertices.push_back(DualVertex{pauli, color, pair, plaquette});
        BitVec sup = op.x_bits() ^ op.z_bits();
        supports.push_back(std::move(sup));
    };

    const auto &plaq = code.layer_code().plaquettes();
    for (size_t k = 1; k <= code.num_pairs(); k++) {
        for (size_t i = 0; i < plaq.size(); i++) {
            add('X', CellColor(int(plaq[i].color)), int(k), int(i), code.cell_x(k, i));
            add('Z', CellColor(int(plaq[i].color)), int(k), int(i), code.cell_z(k, i));
        }
        add('X', CellColor::Blue, int(k), -1, code.bell_x(k));
        add('Z', CellColor::Blue, int(k), -1, code.bell_z(k));
    }

    dl.properly_colored = true;
    for (size_t i = 0; i < dl.vertices.size(); i++) {
        if (dl.vertices[i].color == CellColor::Blue) {
            (dl.vertices[i].pauli == 'X' ? dl.blue_x_count : dl.blue_z_count)++;
        }
        for (size_t j = i + 1; j < dl.vertices.size(); j++) {
            if (dl.vertices[i].pauli != dl.vertices[j].pauli) continue;
            if (supports[i].and_popcount(supports[j]) == 0) continue;
            dl.edges.emplace_back(uint32_t(i), uint32_t(j));
            if (dl.vertices[i].color == dl.vertices[j].color) dl.properly_colored = false;
        }
    }
    return dl;
}

LayoutGeometry unfold_layout(const StackedCode &code) {
    const HexColorCode &layer = code.layer_code();
    int s = (3 * code.distance() - 1) / 2;
    double tile_w = 1.5 * s + 4.0;
    const double row_h = std::sqrt(3.0) / 2.0;

    LayoutGeometry geo;
    geo.positions.resize(code.total_qubits());
    for (size_t l = 1; l <= code.num_layers(); l++) {
        size_t pair = (l + 1) / 2;
        double dx = double(pair - 1) * tile_w + (l % 2 == 0 ? 0.22 : 0.0);
        double dy = l % 2 == 0 ? 0.13 : 0.0;
        for (uint32_t q = 0; q < layer.num_qubits(); q++) {
            const Coord &c = layer.coords()[q];
            geo.positions[code.global_qubit(l, q)] = {c.a + 0.5 * c.b + dx, c.b * row_h + dy};
        }
    }
    geo.positions[code.ancilla_qubit()] = {double(code.num_pairs()) * tile_w - 2.0, row_h};

    // Strip k: the purple (hypotenuse) side of layer 2k faces the yellow
    // (left) side of layer 2k+1 in the tiling; the last strip ends on the
    // ancilla qubit.
    for (size_t k = 1; k <= code.num_pairs(); k++) {
        Strip strip;
        strip.boundary = k;
        for (uint32_t q : layer.boundary_side(Color::Purple)) {
            strip.qubits.push_back(uint32_t(code.global_qubit(2 * k, q)));
        }
        if (2 * k + 1 == size_t(code.distance())) {
            strip.qubits.push_back(uint32_t(code.ancilla_qubit()));
        } else {
            for (uint32_t q : layer.boundary_side(Color::Yellow)) {
                strip.qubits.push_back(uint32_t(code.global_qubit(2 * k + 1, q)));
            }
        }
        geo.strips.push_back(std::move(strip));
    }

    double bound = 0.0;
    for (const auto &g : code.all_gauge_ops()) {
        auto idx = (g.x_bits() ^ g.z_bits()).indices();
        for (size_t i = 0; i < idx.size(); i++) {
            for (size_t j = i + 1; j < idx.size(); j++) {
                auto [x1, y1] = geo.positions[idx[i]];
                auto [x2, y2] = geo.positions[idx[j]];
                bound = std::max(bound, std::hypot(x1 - x2, y1 - y2));
            }
        }
    }
    geo.gauge_locality_bound = bound;
    return geo;
}

std::vector<BoundaryBellOps> boundary_bell_operators(const StackedCode &code) {
    std::vector<BoundaryBellOps> out;
    for (size_t k = 1; k <= code.num_pairs(); k++) {
        PauliOperator sx = code.layer_side(2 * k, Color::Purple, 'X') *
                           code.layer_side(2 * k + 1, Color::Yellow, 'X');
        PauliOperator sz = code.layer_side(2 * k, Color::Purple, 'Z') *
                           code.layer_side(2 * k + 1, Color::Yellow, 'Z');
        out.push_back(BoundaryBellOps{k, std::move(sx), std::move(sz)});
    }
    return out;
}

namespace {

// Product of all color-c X plaquettes of one layer.  Disjoint from the
// layer's c-colored boundary side; together they cover the whole sheet.
PauliOperator color_plaquette_product(const StackedCode &code, size_t layer, Color c) {
    const auto &plaq = code.layer_code().plaquettes();
    PauliOperator acc = PauliOperator::identity(code.total_qubits());
    for (size_t i = 0; i < plaq.size(); i++) {
        if (plaq[i].color == c) acc = acc * code.embed(layer, code.layer_code().x_plaquette_op(i));
    }
    return acc;
}

}  // namespace

OperatorIdentity boundary_identity_first_sheet(const StackedCode &code, size_t boundary) {
    size_t k = boundary;
    PauliOperator strip = boundary_bell_operators(code)[k - 1].strip_x;
    PauliOperator lhs = color_plaquette_product(code, 2 * k, Color::Purple) * strip;
    PauliOperator rhs =
        code.layer_logical(2 * k, 'X') * code.layer_side(2 * k + 1, Color::Yellow, 'X');
    return OperatorIdentity{lhs == rhs, lhs, rhs};
}

OperatorIdentity boundary_identity_full(const StackedCode &code, size_t boundary) {
    size_t k = boundary;
    PauliOperator strip = boundary_bell_operators(code)[k - 1].strip_x;
    PauliOperator lhs = color_plaquette_product(code, 2 * k, Color::Purple) * strip;
    if (2 * k + 1 != size_t(code.distance())) {
        lhs = color_plaquette_product(code, 2 * k + 1, Color::Yellow) * lhs;
    }
    PauliOperator rhs = code.bell_x(k);
    return OperatorIdentity{lhs == rhs, lhs, rhs};
}

OperatorIdentity pair_joint_logical_identity(const StackedCode &code, size_t pair, Color c) {
    size_t k = pair;
    PauliOperator lhs = code.layer_logical(2 * k - 1, 'X') * code.layer_logical(2 * k, 'X');
    PauliOperator rhs = color_plaquette_product(code, 2 * k - 1, c) *
                        color_plaquette_product(code, 2 * k, c) *
                        (code.layer_side(2 * k - 1, c, 'X') * code.layer_side(2 * k, c, 'X'));
    return OperatorIdentity{lhs == rhs, lhs, rhs};
}

Required2dDistance required_2d_distance(int d) {
    if (d < 3 || d % 2 == 0) throw ArgumentError("distance must be an odd integer >= 3");
    Required2dDistance r;
    // d2 >= d*sqrt(d-1) + 1.  When d-1 is a perfect square the bound is an
    // exact integer; otherwise round the irrational bound up.
    int root = int(std::lround(std::sqrt(double(d - 1))));
    r.bound = double(d) * std::sqrt(double(d - 1)) + 1.0;
    if (root * root == d - 1) {
        r.d2 = d * root + 1;
        r.bound_is_integer = true;
    } else {
        r.d2 = int(std::ceil(r.bound - 1e-12));
        r.bound_is_integer = false;
    }
    r.nonlocality_note = "joint measurement separations scale as O(d2^(2/3))";
    return r;
}

std::string StackedCode::serialize() const {
    std::ostringstream out;
    out << "stacked d " << d_ << " total_n " << total_n_ << " layers " << num_layers()
        << " ancilla " << ancilla_qubit() << "\n";
    for (size_t k = 1; k <= num_pairs(); k++) {
        for (size_t i = 0; i < plaquettes_per_layer(); i++) {
            const auto &e = layer_.edge_generators()[i];
            out << "gauge " << k << " " << i << " " << global_qubit(2 * k - 1, e.qubits[0]) << " "
                << global_qubit(2 * k - 1, e.qubits[1]) << " " << global_qubit(2 * k, e.qubits[0])
                << " " << global_qubit(2 * k, e.qubits[1]) << "\n";
        }
        out << "bell " << k << " layers " << 2 * k << " " << 2 * k + 1 << "\n";
    }
    LayoutGeometry geo = unfold_layout(*this);
    for (const auto &strip : geo.strips) {
        out << "strip " << strip.boundary;
        for (uint32_t q : strip.qubits) out << " " << q;
        out << "\n";
    }
    return out.str();
}

}  // namespace stacked
