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

#ifndef STACKEDCODES_STACKED_CODE_HPP
#define STACKEDCODES_STACKED_CODE_HPP

#include <string>
#include <utility>
#include <vector>

#include "hex_color_code.hpp"

namespace stacked {

// The (d-1)+1 stacked code: layers 1..d-1 are copies of the distance-d
// 2D code, layer d is a single ancilla qubit.  Layers (2k-1, 2k) form a
// gauge-coupled pair; layers (2k, 2k+1) are joined by Bell stabilizers,
// the last one ending on the ancilla.
//
// Stabilizer generators, per pair k = 1..(d-1)/2:
//   gauge_op(k,i)  = H_e_i^(2k-1) H_e_i^(2k)    weight-4 Z
//   base_z(k,i)    = H_P_i^(2k-1)               Z plaquette, odd layer
//   cell_x(k,i)    = G_P_i^(2k-1) G_P_i^(2k)    X cell
//   cell_z(k,i)    = H_P_i^(2k-1) H_P_i^(2k)    Z cell
//   bell_x(k)      = X_L^(2k) X_L^(2k+1)        full-sheet X Bell
//   bell_z(k)      = Z_L^(2k) Z_L^(2k+1)        full-sheet Z Bell
// with X_L^(d) = X and Z_L^(d) = Z on the ancilla qubit.
class StackedCode {
  public:
    static StackedCode build(int d);

    int distance() const { return d_; }
    const HexColorCode &layer_code() const { return layer_; }
    size_t total_qubits() const { return total_n_; }
    size_t num_layers() const { return size_t(d_) - 1; }
    size_t num_pairs() const { return size_t(d_ - 1) / 2; }
    size_t plaquettes_per_layer() const { return layer_.plaquettes().size(); }
    size_t ancilla_qubit() const { return total_n_ - 1; }

    // Global index of 2D qubit q in layer l (1-based layer).
    size_t layer_offset(size_t l) const { return (l - 1) * layer_.num_qubits(); }
    size_t global_qubit(size_t l, uint32_t q) const { return layer_offset(l) + q; }
    PauliOperator embed(size_t layer, const PauliOperator &op2d) const;
    // X_L / Z_L of layer l, or the single ancilla X / Z when l == d.
    PauliOperator layer_logical(size_t l, char letter) const;
    // Boundary string of layer l (letter 'X' or 'Z'), or ancilla op when l == d.
    PauliOperator layer_side(size_t l, Color c, char letter) const;

    PauliOperator gauge_op(size_t pair, size_t i) const;
    PauliOperator base_z(size_t pair, size_t i) const;
    PauliOperator cell_x(size_t pair, size_t i) const;
    PauliOperator cell_z(size_t pair, size_t i) const;
    PauliOperator bell_x(size_t pair) const;
    PauliOperator bell_z(size_t pair) const;
    std::vector<PauliOperator> all_gauge_ops() const;

    // Right column: per pair, gauge ops, base Z plaquettes, X cells,
    // Z cells, then the pair's Bell stabilizers.
    const StabilizerGroup &stabilizer_group() const { return group_; }
    // Left column: per pair, odd-layer G and H plaquettes, cells, Bells.
    // Measuring every gauge operator on this group yields the right column.
    StabilizerGroup left_column_group() const;

    PauliOperator logical_x() const;  // X on every qubit
    PauliOperator logical_z() const;  // Z on every qubit
    // Weight-d Z string through the stack: Z_q on every layer + ancilla Z.
    PauliOperator column_logical_z(uint32_t q2d) const;

    std::string serialize() const;

  private:
    StackedCode() = default;

    int d_ = 0;
    HexColorCode layer_;
    size_t total_n_ = 0;
    std::vector<PauliOperator> group_gens_;
    StabilizerGroup group_{1, {PauliOperator::single(1, 0, 'Z')}};
};

StackedCode build_stacked_code(int d);

enum class CellColor : int { Green = 0, Purple = 1, Yellow = 2, Blue = 3 };
const char *cell_color_name(CellColor c);

// Dual lattice of the stacked code: one vertex per stabilizer cell and
// Pauli type, an edge wherever two same-type cells share a qubit.  The
// 2D-derived cells keep their plaquette color; Bell cells are blue.
struct DualVertex {
    char pauli;       // 'X' or 'Z'
    CellColor color;
    int pair;         // pair index for plaquette cells, boundary index for Bell cells
    int plaquette;    // -1 for Bell cells
};

struct DualLattice {
    std::vector<DualVertex> vertices;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    bool properly_colored = false;
    size_t blue_x_count = 0;
    size_t blue_z_count = 0;
};

DualLattice dual_lattice(const StackedCode &code);

// Unfolded 2D arrangement: the two layers of a pair are interleaved in
// one plane, pairs are tiled left to right, and each inter-pair boundary
// carries a 1D strip of O(d) qubits along the facing triangle sides.
struct Strip {
    size_t boundary;                 // k = 1..(d-1)/2
    std::vector<uint32_t> qubits;    // ordered along the strip
};

struct LayoutGeometry {
    std::vector<std::pair<double, double>> positions;  // per global qubit
    std::vector<Strip> strips;
    double gauge_locality_bound = 0.0;  // max support diameter over gauge ops
};

LayoutGeometry unfold_layout(const StackedCode &code);

// Strip-supported Bell operator representatives, one (X, Z) pair per
// inter-pair boundary.  Multiplying the X strip by the touching plaquette
// products recovers the full-sheet Bell stabilizer.
struct BoundaryBellOps {
    size_t boundary;
    PauliOperator strip_x;
    PauliOperator strip_z;
};

std::vector<BoundaryBellOps> boundary_bell_operators(const StackedCode &code);

// The three boundary-operator identities, checked as exact Pauli
// equalities.  Each returns the two sides so tests can report witnesses.
struct OperatorIdentity {
    bool holds;
    PauliOperator lhs;
    PauliOperator rhs;
};

// (prod of color-c G plaquettes on layer 2k) * strip = X_L^(2k) (x) strip part on 2k+1.
OperatorIdentity boundary_identity_first_sheet(const StackedCode &code, size_t boundary);
// Full product over both sheets = the full-sheet Bell stabilizer.
OperatorIdentity boundary_identity_full(const StackedCode &code, size_t boundary);
// Within a pair: X_L^(2k-1) X_L^(2k) equals plaquette products times the
// joint boundary string shared by the co-located sheets.
OperatorIdentity pair_joint_logical_identity(const StackedCode &code, size_t pair, Color c);

// Smallest 2D code distance d2 that supports carving out a distance-d
// stacked layout, d2 >= d*sqrt(d-1) + 1, plus the nonlocality scale note.
struct Required2dDistance {
    int d2;
    double bound;
    bool bound_is_integer;
    std::string nonlocality_note;  // separations scale as O(d2^(2/3))
};

Required2dDistance required_2d_distance(int d);

}  // namespace stacked

#endif
