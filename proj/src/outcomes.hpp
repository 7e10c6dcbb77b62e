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

#ifndef STACKEDCODES_OUTCOMES_HPP
#define STACKEDCODES_OUTCOMES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "errors.hpp"

namespace stacked {

// Supplies +1/-1 outcomes for non-deterministic measurements.  Outcomes
// are injected rather than sampled from amplitudes so protocol runs can
// be replayed and error cases enumerated.
class OutcomeSource {
  public:
    static OutcomeSource all_plus() { return OutcomeSource(Mode::AllPlus); }

    static OutcomeSource fixed(std::vector<int> outcomes) {
        OutcomeSource s(Mode::Fixed);
        s.fixed_ = std::move(outcomes);
        return s;
    }

    static OutcomeSource seeded(uint64_t seed) {
        OutcomeSource s(Mode::Seeded);
        s.rng_.seed(seed);
        return s;
    }

    int next() {
        switch (mode_) {
            case Mode::AllPlus:
                return 1;
            case Mode::Fixed:
                if (pos_ >= fixed_.size()) throw ArgumentError("fixed outcome list exhausted");
                return fixed_[pos_++];
            case Mode::Seeded:
                return (rng_() & 1) ? 1 : -1;
        }
        return 1;
    }

  private:
    enum class Mode { AllPlus, Fixed, Seeded };
    explicit OutcomeSource(Mode m) : mode_(m) {}

    Mode mode_;
    std::vector<int> fixed_;
    size_t pos_ = 0;
    std::mt19937_64 rng_;
};

}  // namespace stacked

#endif
