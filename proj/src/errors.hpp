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

#ifndef STACKEDCODES_ERRORS_HPP
#define STACKEDCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stacked {

// Operands act on different qubit counts.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A caller-supplied value violates a precondition (bad distance, bad
// outcome, non-Hermitian measurement, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An instance is too large for the requested (complete) computation.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A protocol step received a state it cannot consume (e.g. the input
// stabilizer group does not match the expected starting group).
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parser rejected its input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructed object failed its own validity checks.  Reaching this
// indicates a defect, not a usage error.
struct DefectError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace stacked

#endif
