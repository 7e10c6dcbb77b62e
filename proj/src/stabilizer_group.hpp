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

#ifndef STACKEDCODES_STABILIZER_GROUP_HPP
#define STACKEDCODES_STABILIZER_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "pauli.hpp"

namespace stacked {

enum class Containment { InGroup, InGroupNegated, Outside };

// Canonical presentation of a stabilizer group: the reduced row echelon
// form of the stacked (x|z) generator matrix, with deterministic column
// order (all x columns, then all z columns) and signs carried along by
// genuine Pauli multiplication.  Two generator lists present the same
// signed group iff their canonical forms compare equal.
struct CanonicalForm {
    std::vector<PauliOperator> rows;  // sorted by pivot column
    std::vector<int> pivots;

    bool operator==(const CanonicalForm &o) const;
    bool operator!=(const CanonicalForm &o) const { return !(*this == o); }
    // Equality of the underlying unsigned groups (phases ignored).
    bool same_span(const CanonicalForm &o) const;
    std::string str() const;
};

struct MeasurementEffect {
    bool deterministic = false;
    // For a non-deterministic measurement: index of the generator that was
    // replaced (the lowest-index anticommuting one), and its former value.
    ptrdiff_t replaced_index = -1;
    std::optional<PauliOperator> replaced_generator;
    // For a deterministic measurement: the forced outcome, when the
    // measured operator is +/- an element of the group.
    std::optional<int> forced_outcome;
};

// A list of independent, pairwise commuting, non-identity Hermitian
// Pauli generators.  Values are immutable after construction; every
// operation returns a new group.
class StabilizerGroup {
  public:
    StabilizerGroup(size_t n, std::vector<PauliOperator> generators);

    size_t num_qubits() const { return n_; }
    size_t size() const { return gens_.size(); }
    const std::vector<PauliOperator> &generators() const { return gens_; }
    const PauliOperator &generator(size_t i) const { return gens_[i]; }

    CanonicalForm canonical_form() const;
    Containment contains(const PauliOperator &p) const;

    // Group after measuring Hermitian m with the given outcome (+1/-1).
    //
    // If m commutes with every generator the group is returned unchanged
    // and effect (if requested) reports whether the outcome was forced.
    // Otherwise the lowest-index anticommuting generator g* is replaced by
    // (+/- m) and every other anticommuting generator is multiplied by g*.
    StabilizerGroup after_measurement(const PauliOperator &m, int outcome,
                                      MeasurementEffect *effect = nullptr) const;

    // Group describing the same state after a Pauli error e: generators
    // anticommuting with e flip sign.
    StabilizerGroup with_pauli_applied(const PauliOperator &e) const;

    // Re-check all construction invariants; used by tests and fuzzing.
    void validate() const;

  private:
    struct unchecked_t {};
    StabilizerGroup(unchecked_t, size_t n, std::vector<PauliOperator> generators)
        : n_(n), gens_(std::move(generators)) {}

    size_t n_;
    std::vector<PauliOperator> gens_;
};

// Spec-level entry points.
StabilizerGroup measure_pauli(const StabilizerGroup &group, const PauliOperator &m, int outcome);
CanonicalForm canonical_form(const StabilizerGroup &group);
Containment contains(const StabilizerGroup &group, const PauliOperator &p);

}  // namespace stacked

#endif
