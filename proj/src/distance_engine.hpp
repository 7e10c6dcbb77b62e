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

#ifndef STACKEDCODES_DISTANCE_ENGINE_HPP
#define STACKEDCODES_DISTANCE_ENGINE_HPP

#include <optional>
#include <string>

#include "stacked_code.hpp"

namespace stacked {

enum class PauliType { X, Z, Any };
enum class SearchStrategy { Exhaustive, SyndromePruned, MeetInTheMiddle, RandomProbe };

const char *pauli_type_name(PauliType t);
const char *strategy_name(SearchStrategy s);

// A minimum-weight-logical search: find the lightest Pauli operator that
// commutes with every generator of `group` yet acts nontrivially on the
// logical qubit (anticommutes with logical_x or logical_z).
//
// Size table (instances above the budget raise BudgetError rather than
// silently truncating):
//   Exhaustive        sum_w C(n,w)*L^w  <= 2e8   (L = 3 for Any, else 1)
//   SyndromePruned    same bound        <= 4e9   (pruning cuts the real cost)
//   MeetInTheMiddle   X/Z types only; half-enumeration <= 2e7 entries
//   RandomProbe       always admissible; never claims completeness
struct DistanceQuery {
    const StabilizerGroup *group = nullptr;
    PauliOperator logical_x{1};
    PauliOperator logical_z{1};
    PauliType type = PauliType::Any;
    int w_max = 1;
    SearchStrategy strategy = SearchStrategy::SyndromePruned;
    uint64_t seed = 0;          // RandomProbe only
    uint64_t probe_trials = 200000;
};

struct DistanceResult {
    bool found = false;
    int weight = 0;
    std::optional<PauliOperator> witness;
    bool complete = false;  // when !found: proves no logical of weight <= w_max
    std::string strategy;
    uint64_t seed = 0;
    double elapsed_seconds = 0.0;

    std::string str() const;
};

DistanceResult min_weight_logical(const DistanceQuery &query);

// Complete search for X-type logicals of the stacked code up to w_max;
// confirms the X distance is not below the Z distance.
DistanceResult x_distance_bound(const StackedCode &code, int w_max,
                                SearchStrategy strategy = SearchStrategy::SyndromePruned);

}  // namespace stacked

#endif
