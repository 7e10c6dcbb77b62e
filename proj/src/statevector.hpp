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

#ifndef STACKEDCODES_STATEVECTOR_HPP
#define STACKEDCODES_STATEVECTOR_HPP

#include <complex>
#include <random>
#include <vector>

#include "gate_verifier.hpp"
#include "stabilizer_group.hpp"

namespace stacked {

// Exact amplitude-level state on up to 20 qubits.  Qubit 0 is the most
// significant bit of the basis-ket index.  Phase-critical paths compute
// in integer units first and convert to complex once.
class StateVector {
  public:
    static constexpr size_t kMaxQubits = 20;

    explicit StateVector(size_t n);  // |0...0>

    size_t num_qubits() const { return n_; }
    size_t dim() const { return amps_.size(); }
    const std::vector<std::complex<double>> &amplitudes() const { return amps_; }
    std::complex<double> &amp(size_t ket) { return amps_[ket]; }
    const std::complex<double> &amp(size_t ket) const { return amps_[ket]; }

    size_t qubit_mask(size_t q) const { return size_t{1} << (n_ - 1 - q); }

    double norm() const;
    void normalize();

    StateVector tensor(const StateVector &other) const;
    std::complex<double> inner(const StateVector &other) const;
    double fidelity(const StateVector &other) const;  // |<this|other>|^2

    friend StateVector operator+(const StateVector &a, const StateVector &b);
    StateVector scaled(std::complex<double> c) const;

  private:
    size_t n_;
    std::vector<std::complex<double>> amps_;
};

// Uniform superposition over the codeword set (basis 0) or its logical-X
// translate (basis 1); a +1 eigenstate of every generator.
StateVector encode_logical(const StabilizerGroup &group, const PauliOperator &logical_x, int basis);
StateVector encode_logical(const HexColorCode &code, int basis);
StateVector encode_logical(const StackedCode &code, int basis);

// Normalized product of (I + g)/2 projectors applied to |0...0>.
StateVector stabilizer_state(const StabilizerGroup &group);

StateVector apply_pauli(const StateVector &s, const PauliOperator &p);
StateVector apply_rotation(const StateVector &s, const RotationVector &v);
std::complex<double> expectation(const StateVector &s, const PauliOperator &p);

struct SvMeasurement {
    int outcome;
    StateVector state;
    double probability_plus;
};

// Born-rule measurement; deterministic given the generator state.
SvMeasurement measure_pauli_sv(const StateVector &s, const PauliOperator &p, std::mt19937_64 &rng);
SvMeasurement measure_pauli_sv(const StateVector &s, const PauliOperator &p, uint64_t seed);
// Forced projection; throws ProtocolError on a zero-probability branch.
SvMeasurement project_pauli_sv(const StateVector &s, const PauliOperator &p, int outcome);

}  // namespace stacked

#endif
