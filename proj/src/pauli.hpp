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

#ifndef STACKEDCODES_PAULI_HPP
#define STACKEDCODES_PAULI_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bitvec.hpp"

namespace stacked {

// An n-qubit Pauli operator
//
//     P = i^phase * (sigma_0 x sigma_1 x ... x sigma_{n-1}),
//
// where sigma_q is the literal single-qubit Pauli selected by
// (x_bits[q], z_bits[q]):  (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
//
// Phase convention: the global quarter-phase multiplies the *literal*
// tensor product of I/X/Y/Z letters.  Under this convention X*Z = -iY.
// All phase arithmetic in the library derives from that single choice.
class PauliOperator {
  public:
    explicit PauliOperator(size_t n) : x_(n), z_(n), phase_(0) {
        if (n < 1) throw ArgumentError("PauliOperator needs at least one qubit");
    }
    PauliOperator(BitVec x, BitVec z, int phase);

    static PauliOperator identity(size_t n) { return PauliOperator(n); }
    // Single-qubit letter 'X', 'Y' or 'Z' at position q.
    static PauliOperator single(size_t n, size_t q, char letter);
    // X-type or Z-type operator with the given support.
    static PauliOperator from_support(size_t n, std::span<const uint32_t> support, char letter);
    static PauliOperator from_support(size_t n, const BitVec &support, char letter);

    size_t num_qubits() const { return x_.size(); }
    const BitVec &x_bits() const { return x_; }
    const BitVec &z_bits() const { return z_; }
    int phase() const { return phase_; }

    size_t weight() const;
    bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
    // Hermitian iff the global phase is +1 or -1.
    bool is_hermitian() const { return (phase_ & 1) == 0; }

    bool commutes_with(const PauliOperator &o) const;
    PauliOperator operator*(const PauliOperator &o) const;
    PauliOperator negated() const;

    // Same operator embedded into a larger register at qubit offset.
    PauliOperator embedded(size_t total, size_t offset) const;

    // Text form: optional leading token "+", "-", "i", "-i" followed by
    // one letter of {I,X,Y,Z} per qubit.  print/parse round-trips exactly.
    std::string str() const;
    static PauliOperator parse(const std::string &text);

    bool operator==(const PauliOperator &o) const {
        return phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
    }
    bool operator!=(const PauliOperator &o) const { return !(*this == o); }

  private:
    BitVec x_, z_;
    uint8_t phase_;  // mod 4, exponent of i
};

// Spec-level entry points (thin wrappers over the member operations).
bool commutes(const PauliOperator &a, const PauliOperator &b);
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

}  // namespace stacked

#endif
