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

#include "statevector.hpp"

#include <cmath>
#include <numbers>

namespace stacked {

namespace {

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::complex<double> eighth_root(int units) {
    double angle = std::numbers::pi * double(((units % 8) + 8) % 8) / 4.0;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

StateVector::StateVector(size_t n) : n_(n) {
    if (n < 1) throw ArgumentError("state needs at least one qubit");
    if (n > kMaxQubits) {
        throw BudgetError("state vector simulation is capped at " + std::to_string(kMaxQubits) +
                          " qubits");
    }
    amps_.assign(size_t{1} << n, {0, 0});
    amps_[0] = 1.0;
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto &a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::normalize() {
    double nn = norm();
    if (nn < 1e-12) throw ProtocolError("cannot normalize a vanishing state");
    for (auto &a : amps_) a /= nn;
}

StateVector StateVector::tensor(const StateVector &other) const {
    StateVector out(n_ + other.n_);
    size_t dim_b = other.amps_.size();
    for (size_t i = 0; i < amps_.size(); i++) {
        for (size_t j = 0; j < dim_b; j++) {
            out.amps_[(i << other.n_) | j] = amps_[i] * other.amps_[j];
        }
    }
    return out;
}

std::complex<double> StateVector::inner(const StateVector &other) const {
    if (n_ != other.n_) throw DimensionError("state sizes differ");
    std::complex<double> acc = 0;
    for (size_t i = 0; i < amps_.size(); i++) acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

double StateVector::fidelity(const StateVector &other) const { return std::norm(inner(other)); }

StateVector operator+(const StateVector &a, const StateVector &b) {
    if (a.n_ != b.n_) throw DimensionError("state sizes differ");
    StateVector out = a;
    for (size_t i = 0; i < out.amps_.size(); i++) out.amps_[i] += b.amps_[i];
    return out;
}

StateVector StateVector::scaled(std::complex<double> c) const {
    StateVector out = *this;
    for (auto &a : out.amps_) a *= c;
    return out;
}

StateVector apply_pauli(const StateVector &s, const PauliOperator &p) {
    if (p.num_qubits() != s.num_qubits()) throw DimensionError("operand acts on wrong qubit count");
    size_t n = s.num_qubits();
    size_t xmask = 0, zmask = 0;
    p.x_bits().for_each_set([&](size_t q) { xmask |= s.qubit_mask(q); });
    p.z_bits().for_each_set([&](size_t q) { zmask |= s.qubit_mask(q); });
    int base = p.phase() + int(p.x_bits().and_popcount(p.z_bits()));  // i^base, one i per Y

    StateVector out(n);
    for (size_t ket = 0; ket < s.dim(); ket++) {
        int exp = (base + 2 * std::popcount(ket & zmask)) & 3;
        out.amp(ket ^ xmask) = kIPow[exp] * s.amp(ket);
    }
    return out;
}

StateVector apply_rotation(const StateVector &s, const RotationVector &v) {
    if (v.size() != s.num_qubits()) throw DimensionError("rotation length mismatch");
    size_t n = s.num_qubits();
    // units[ket] = units[ket minus lowest bit] + unit of that bit's qubit
    std::vector<uint8_t> units(s.dim(), 0);
    for (size_t ket = 1; ket < s.dim(); ket++) {
        size_t low = ket & (~ket + 1);
        size_t bit_pos = size_t(std::countr_zero(low));
        size_t q = n - 1 - bit_pos;
        units[ket] = uint8_t((units[ket ^ low] + v.unit(q)) % 8);
    }
    StateVector out = s;
    std::complex<double> table[8];
    for (int u = 0; u < 8; u++) table[u] = eighth_root(u);
    for (size_t ket = 0; ket < s.dim(); ket++) out.amp(ket) *= table[units[ket]];
    return out;
}

std::complex<double> expectation(const StateVector &s, const PauliOperator &p) {
    return s.inner(apply_pauli(s, p));
}

StateVector stabilizer_state(const StabilizerGroup &group) {
    StateVector s(group.num_qubits());
    for (const auto &g : group.generators()) {
        StateVector gs = apply_pauli(s, g);
        s = s + gs;
        if (s.norm() < 1e-9) {
            throw ProtocolError("projector product vanished; |0...0> is orthogonal to the state");
        }
        s.normalize();
    }
    return s;
}

StateVector encode_logical(const StabilizerGroup &group, const PauliOperator &logical_x,
                           int basis) {
    if (basis != 0 && basis != 1) throw ArgumentError("basis must be 0 or 1");
    StateVector s = stabilizer_state(group);
    if (basis == 1) s = apply_pauli(s, logical_x);
    for (const auto &g : group.generators()) {
        if (std::abs(expectation(s, g) - std::complex<double>(1, 0)) > 1e-9) {
            throw DefectError("encoded state is not a +1 eigenstate of a generator");
        }
    }
    return s;
}

StateVector encode_logical(const HexColorCode &code, int basis) {
    return encode_logical(code.stabilizer_group(), code.logical_x(), basis);
}

StateVector encode_logical(const StackedCode &code, int basis) {
    return encode_logical(code.stabilizer_group(), code.logical_x(), basis);
}

namespace {

SvMeasurement measure_impl(const StateVector &s, const PauliOperator &p, double draw) {
    if (!p.is_hermitian()) throw ArgumentError("measured operator must be Hermitian");
    StateVector ps = apply_pauli(s, p);
    double expect = s.inner(ps).real();
    double p_plus = std::clamp((1.0 + expect) / 2.0, 0.0, 1.0);
    int outcome = draw < p_plus ? 1 : -1;

    StateVector projected = outcome == 1 ? s + ps : s + ps.scaled(-1.0);
    projected.normalize();
    return SvMeasurement{outcome, std::move(projected), p_plus};
}

}  // namespace

SvMeasurement measure_pauli_sv(const StateVector &s, const PauliOperator &p,
                               std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return measure_impl(s, p, u(rng));
}

SvMeasurement measure_pauli_sv(const StateVector &s, const PauliOperator &p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure_pauli_sv(s, p, rng);
}

SvMeasurement project_pauli_sv(const StateVector &s, const PauliOperator &p, int outcome) {
    if (outcome != 1 && outcome != -1) throw ArgumentError("outcome must be +1 or -1");
    if (!p.is_hermitian()) throw ArgumentError("measured operator must be Hermitian");
    StateVector ps = apply_pauli(s, p);
    StateVector projected = outcome == 1 ? s + ps : s + ps.scaled(-1.0);
    double nn = projected.norm();
    if (nn < 1e-9) throw ProtocolError("projection onto a zero-probability branch");
    projected.normalize();
    double expect = s.inner(ps).real();
    return SvMeasurement{outcome, std::move(projected), (1.0 + expect) / 2.0};
}

}  // namespace stacked
