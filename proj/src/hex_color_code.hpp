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

#ifndef STACKEDCODES_HEX_COLOR_CODE_HPP
#define STACKEDCODES_HEX_COLOR_CODE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stabilizer_group.hpp"

namespace stacked {

enum class Color : int { Green = 0, Purple = 1, Yellow = 2 };

const char *color_name(Color c);
Color color_from_name(const std::string &name);

// Integer lattice coordinate.  The triangular patch lives on the site set
// {(a,b) : a >= 0, b >= 1, a+b <= s} with s = (3d-1)/2.  Sites with
// (a-b) % 3 == 0 are hexagon centers (the plaquettes, truncated to weight
// 4 where the hexagon sticks out of the patch); the remaining sites are
// qubits, 3-valent inside the patch.  Hexagon neighbors of a site are the
// six offsets (+-1,0), (0,+-1), (1,-1), (-1,1).
struct Coord {
    int a = 0;
    int b = 0;
    bool operator==(const Coord &o) const { return a == o.a && b == o.b; }
};

struct Plaquette {
    Coord center;
    Color color;
    std::vector<uint32_t> support;  // qubit indices, ascending
};

struct EdgeGenerator {
    uint32_t plaquette;              // paired plaquette index
    std::array<uint32_t, 2> qubits;  // lattice edge endpoints, ascending
};

// The [[n,1,d]] triangular hexagonal color code.  X and Z plaquette
// operators share supports; logical X and Z are the full-support
// operators, with one minimal weight-d boundary string per color.
class HexColorCode {
  public:
    static HexColorCode build(int d);

    int distance() const { return d_; }
    size_t num_qubits() const { return coords_.size(); }
    const std::vector<Coord> &coords() const { return coords_; }
    const std::vector<Plaquette> &plaquettes() const { return plaquettes_; }
    const std::vector<EdgeGenerator> &edge_generators() const { return edges_; }
    // All lattice edges (adjacent qubit pairs), ascending pairs, sorted.
    const std::vector<std::array<uint32_t, 2>> &lattice_edges() const { return lattice_edges_; }

    PauliOperator x_plaquette_op(size_t i) const;  // G_P
    PauliOperator z_plaquette_op(size_t i) const;  // H_P
    PauliOperator edge_op(size_t i) const;         // H_e, weight 2

    StabilizerGroup x_stabilizers() const;
    StabilizerGroup z_stabilizers() const;
    StabilizerGroup stabilizer_group() const;  // X generators then Z generators

    PauliOperator logical_x() const;  // X on every qubit
    PauliOperator logical_z() const;  // Z on every qubit

    // Qubits of the boundary side carrying color c, ordered along the side.
    const std::vector<uint32_t> &boundary_side(Color c) const;

    // Anticommutation matrix M[i][j] = (edge i anticommutes with plaquette j).
    std::vector<BitVec> edge_pairing_matrix() const;

    std::string serialize() const;

  private:
    HexColorCode() = default;

    int d_ = 0;
    std::vector<Coord> coords_;
    std::vector<Plaquette> plaquettes_;
    std::vector<EdgeGenerator> edges_;
    std::vector<std::array<uint32_t, 2>> lattice_edges_;
    std::array<std::vector<uint32_t>, 3> sides_;
};

HexColorCode build_hex_color_code(int d);

// Re-derives the deterministic edge-generator selection for a built code
// and re-runs the algebraic validation (pairing + span conditions).
std::vector<EdgeGenerator> select_edge_generators(const HexColorCode &code);

// Weight-d Z-type logical string along the boundary of the given color.
PauliOperator minimal_logical_string(const HexColorCode &code, Color c);

}  // namespace stacked

#endif
