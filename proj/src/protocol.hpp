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

#ifndef STACKEDCODES_PROTOCOL_HPP
#define STACKEDCODES_PROTOCOL_HPP

#include "statevector.hpp"
#include "switch_engine.hpp"

namespace stacked {

// A Pauli error injected on the stacked register while the logical qubit
// is stored in the stacked code (after the transversal rotation, before
// switching back down).
struct ErrorSpec {
    char pauli = 'Z';  // 'X', 'Y' or 'Z'
    uint32_t qubit = 0;
    std::string str() const { return std::string(1, pauli) + "@" + std::to_string(qubit); }
};
ErrorSpec parse_error_spec(const std::string &text);

// Exact 15-qubit end-to-end run (d = 3 only): encode a seeded random
// logical state, switch up by gauge measurements, apply the recursive
// transversal rotation, optionally inject an error, switch back down,
// decode/correct, and compare against the logical pi/8 gate.
struct OracleProtocolResult {
    uint64_t seed = 0;
    double fidelity = 0;       // vs T(input), after all corrections
    char frame = 'I';          // logical byproduct extracted from the transcript
    char gate = 'N';           // classification of the raw rotation: 'T' or 'Z' (TZ)
    bool error_injected = false;
    bool error_detected = false;  // some deterministic outcome deviated
    bool error_corrected = false; // decoded error matches the injection
    std::string decoded_error;
    bool outcome_consistency = true;  // Born results matched forced predictions
    SwitchTranscript up;
    SwitchTranscript down;
};

OracleProtocolResult run_oracle_protocol(int d, uint64_t seed,
                                         std::optional<ErrorSpec> inject = std::nullopt);

// Stabilizer-only round trip at any odd d: switch up, optionally twist by
// a Pauli error, switch down; checks the product-rule syndrome inference
// against the directly computed cell syndromes.
struct StabilizerProtocolResult {
    uint64_t seed = 0;
    char frame = 'I';
    bool groups_match = false;          // final group equals data x ancilla form
    bool inference_ok = false;          // product rule == direct syndrome, all cells
    bool bell_inference_ok = false;     // strip-based inference == Bell syndromes
    int syndrome_weight = 0;            // number of -1 cell syndromes
    SwitchTranscript up;
    SwitchTranscript down;
};

StabilizerProtocolResult run_stabilizer_protocol(int d, uint64_t seed,
                                                 std::optional<ErrorSpec> inject = std::nullopt);

}  // namespace stacked

#endif
