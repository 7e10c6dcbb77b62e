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

#ifndef STACKEDCODES_GATE_VERIFIER_HPP
#define STACKEDCODES_GATE_VERIFIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stacked_code.hpp"

namespace stacked {

// Per-qubit diagonal Z rotation angles in exact quarter-pi units:
// qubit q applies diag[1, e^{i pi u_q / 4}] with u_q an integer mod 8.
// All phase arithmetic stays in integers; no floating point appears
// anywhere in the verification path.
class RotationVector {
  public:
    explicit RotationVector(size_t n) : units_(n, 0) {
        if (n < 1) throw ArgumentError("rotation vector needs at least one qubit");
    }
    static RotationVector uniform(size_t n, int unit);

    size_t size() const { return units_.size(); }
    int unit(size_t q) const { return units_[q]; }
    void set_unit(size_t q, int u) { units_[q] = uint8_t(((u % 8) + 8) % 8); }

    // Defined only when every unit is even (the lift rule u -> u/2).
    RotationVector halved() const;
    RotationVector negated() const;

    // Sum of units over the set bits, mod 8.
    int dot_units(const BitVec &ket) const;
    int total_units() const;

    bool operator==(const RotationVector &o) const { return units_ == o.units_; }
    std::string str() const;

  private:
    std::vector<uint8_t> units_;
};

// Deterministic Gray-order enumeration of the GF(2) span of the given
// generator supports.  f(ket, flipped_generator) runs once per codeword;
// flipped_generator is SIZE_MAX for the initial (zero) codeword.
void for_each_codeword(const std::vector<BitVec> &generators,
                       const std::function<void(const BitVec &, size_t)> &f);

struct SConditionReport {
    bool codeword_phases_vanish = false;    // every codeword ket keeps phase 0
    bool complement_phase_is_half = false;  // every complement ket gains phase pi/2
    std::optional<int> complement_phase_units;
    std::optional<BitVec> failing_codeword;
    char classified = '0';  // 'S', 'D' for the inverse phase gate, '0' neither
};

// Solve for a transversal rotation with units in {2, 6} implementing the
// logical phase gate; verified against the full codeword enumeration.
RotationVector find_S_rotation(const HexColorCode &code);
SConditionReport verify_S_conditions(const HexColorCode &code, const RotationVector &theta);

struct LiftResult {
    RotationVector vector;  // (theta/2, theta/2, ancilla unit) on 2n+1 qubits
    int alpha_units;        // the codeword-independent phase a, in {1, 5}
};

// Halve the layer rotation, compute the cross phase a on every codeword
// (checking constancy rather than assuming it), and set the ancilla slot
// to cancel it.  alpha satisfies alpha = 1/2 - alpha mod 2.
LiftResult lift_T_rotation(const HexColorCode &code, const RotationVector &theta2d);

// Transversal rotation vector for the full stacked code, built by
// replacing each level's ancilla rotation with the next level's
// transversal vector (the innermost level is the bare ancilla qubit).
// Rotation signs alternate between layer pairs so every level hands the
// level above exactly the canceling ancilla phase.
RotationVector recursive_lift(const StackedCode &code);
RotationVector recursive_lift(int d);

enum class TVerifyMode { Enumeration, Structural };

struct TActionReport {
    bool ok = false;
    int phase0_units = -1;  // uniform phase over the |0> codeword kets
    int phase1_units = -1;  // uniform phase over the |1> codeword kets
    char gate = 'N';        // 'T', 'Z' for TZ, 'N' for neither / failure
    TVerifyMode mode = TVerifyMode::Enumeration;
    std::optional<BitVec> witness_ket;
    std::string detail;

    std::string str() const;
};

// Verify that the rotation vector acts as a logical T or TZ gate on the
// stacked code: the |0> codeword kets all keep phase 0 and the |1> kets
// share one phase in {pi/4, 5pi/4}.
//
// Enumeration mode walks all 2^(#X generators) kets per logical state.
// Structural mode checks the generator, pairwise-overlap and
// triple-overlap conditions instead; because a mod-8 linear phase expands
// with coefficients (-2)^{|subset|-1}, fourfold and higher overlaps
// vanish mod 8, so the three levels together already cover every ket.
// Enumeration is used through d = 5; larger codes fall back to the
// structural check and the report says so.
TActionReport verify_T_action(const StackedCode &code, const RotationVector &v,
                              std::optional<TVerifyMode> force_mode = std::nullopt);

}  // namespace stacked

#endif
