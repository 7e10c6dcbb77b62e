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

#ifndef STACKEDCODES_SWITCH_ENGINE_HPP
#define STACKEDCODES_SWITCH_ENGINE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "outcomes.hpp"
#include "stacked_code.hpp"

namespace stacked {

struct TranscriptError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One protocol event: either a measurement (with its outcome, whether the
// outcome was forced, and which generator the operator replaced) or an
// applied Pauli (error injection or sign fix).
struct TranscriptStep {
    enum class Kind { Measure, Pauli };
    Kind kind = Kind::Measure;
    std::string label;  // "gauge k i", "G l i", "H l i", "stripX k", "stripZ k", "apply ..."
    PauliOperator op;
    int outcome = 0;  // +1/-1 for measurements, 0 for Pauli steps
    bool deterministic = false;
    ptrdiff_t replaced_index = -1;
};

// Ordered record of one switching run.  Replaying the steps from the
// initial group reproduces the final group exactly; logical operator
// representatives are carried through every step.
class SwitchTranscript {
  public:
    int d = 0;
    std::string direction;  // "up" or "down"
    std::vector<PauliOperator> initial_generators;
    std::vector<TranscriptStep> steps;
    PauliOperator logical_x_rep{1};
    PauliOperator logical_z_rep{1};
    char logical_frame = 'I';  // byproduct Pauli on the encoded qubit

    // Outcome of the measurement step with the given label.
    int outcome_of(const std::string &label) const;
    bool has_step(const std::string &label) const;

    StabilizerGroup replay() const;

    std::string serialize() const;
    static SwitchTranscript parse(const std::string &text);

    // Fingerprint of a group's canonical form, recorded in the serialized
    // transcript so replays can be checked bit-exactly.
    static uint64_t group_fingerprint(const StabilizerGroup &g);
};

struct SwitchResult {
    StabilizerGroup group;
    SwitchTranscript transcript;
};

// Stabilizers of the prepared ancilla: every layer above the data layer
// holds a code state, consecutive layers (2k, 2k+1) are joined into
// logical Bell pairs, the last pair ending on the bare ancilla qubit.
// Acts as identity on layer 1.
StabilizerGroup prepare_ancilla_group(const StackedCode &code);
// Same state on its own (d-2)*n+1 qubit register (data layer excluded).
StabilizerGroup ancilla_state_group_local(const StackedCode &code);
// Data-layer plaquettes plus the prepared ancilla: generates the same
// group as StackedCode::left_column_group().
StabilizerGroup data_plus_ancilla_group(const StackedCode &code);

struct SwitchOptions {
    // Strip measurements may be repeated an odd number of times with a
    // majority vote; flip_injector(step_repetition) can corrupt single
    // readings to exercise the vote.
    int strip_repetitions = 1;
    std::function<bool(size_t)> flip_injector;
};

// Supplies the outcome of each measurement step.  `deterministic` says
// the operator is (+/-) an element of the current group with the given
// forced sign; a state-backed hook measures its state and returns the
// actual result, which may disagree with `forced` when an error is
// present.
using MeasureHook = std::function<int(const std::string &label, const PauliOperator &op,
                                      bool deterministic, std::optional<int> forced)>;

// Measure every gauge operator on the left-column group.  The result
// equals the directly built stacked group up to the recorded outcome
// signs (exactly, when all outcomes are +1).
SwitchResult switch_up(const StabilizerGroup &input, const StackedCode &code,
                       OutcomeSource &outcomes);
SwitchResult switch_up(const StabilizerGroup &input, const StackedCode &code,
                       const MeasureHook &hook);

// Measure the per-layer plaquettes and the boundary strip operators on a
// (possibly sign-twisted) stacked group.  Layer 1 returns to the 2D code,
// the ancilla layers return to Bell-paired form, and the logical frame is
// extracted from the tracked representatives.
SwitchResult switch_down(const StabilizerGroup &input, const StackedCode &code,
                         OutcomeSource &outcomes, const SwitchOptions &opts = {});
SwitchResult switch_down(const StabilizerGroup &input, const StackedCode &code,
                         const MeasureHook &hook, const SwitchOptions &opts = {});

// Product of the two recorded plaquette outcomes of a cell; equals the
// cell's eigenvalue in the pre-measurement state.  pauli is 'X' (G
// plaquettes) or 'Z' (H plaquettes).
int infer_cell_syndrome(const SwitchTranscript &t, size_t pair, size_t plaquette, char pauli);

// Recorded strip outcome times the touching plaquette outcomes; equals
// the eigenvalue of the full-sheet Bell stabilizer of that boundary.
int infer_bell_syndrome(const SwitchTranscript &t, const StackedCode &code, size_t boundary,
                        char pauli);

// Sign of op in the signed group: +1 in-group, -1 negated.
// Throws ProtocolError when op is not (+/-) an element.
int group_sign(const StabilizerGroup &g, const PauliOperator &op);

// A Pauli that anticommutes with exactly the negative-sign generators
// (so applying it restores the all-plus group) while commuting with every
// operator in `preserve`.
PauliOperator sign_fix_pauli(const StabilizerGroup &g,
                             const std::vector<PauliOperator> &preserve);

int majority_vote(const std::vector<int> &readings);

}  // namespace stacked

#endif
