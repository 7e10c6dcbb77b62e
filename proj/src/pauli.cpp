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

#include "pauli.hpp"

namespace stacked {

PauliOperator::PauliOperator(BitVec x, BitVec z, int phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(uint8_t(((phase % 4) + 4) % 4)) {
    if (x_.size() != z_.size()) throw DimensionError("x/z support length mismatch");
    if (x_.size() < 1) throw ArgumentError("PauliOperator needs at least one qubit");
}

PauliOperator PauliOperator::single(size_t n, size_t q, char letter) {
    if (q >= n) throw ArgumentError("qubit index out of range");
    PauliOperator p(n);
    switch (letter) {
        case 'X':
            p.x_.set(q, true);
            break;
        case 'Y':
            p.x_.set(q, true);
            p.z_.set(q, true);
            break;
        case 'Z':
            p.z_.set(q, true);
            break;
        default:
            throw ArgumentError("letter must be one of X, Y, Z");
    }
    return p;
}

PauliOperator PauliOperator::from_support(size_t n, std::span<const uint32_t> support, char letter) {
    BitVec s(n);
    for (uint32_t q : support) {
        if (q >= n) throw ArgumentError("qubit index out of range");
        s.set(q, true);
    }
    return from_support(n, s, letter);
}

PauliOperator PauliOperator::from_support(size_t n, const BitVec &support, char letter) {
    if (support.size() != n) throw DimensionError("support length mismatch");
    PauliOperator p(n);
    switch (letter) {
        case 'X':
            p.x_ = support;
            break;
        case 'Z':
            p.z_ = support;
            break;
        case 'Y':
            p.x_ = support;
            p.z_ = support;
            break;
        default:
            throw ArgumentError("letter must be one of X, Y, Z");
    }
    return p;
}

size_t PauliOperator::weight() const {
    size_t w = 0;
    const auto &xw = x_.words();
    const auto &zw = z_.words();
    for (size_t k = 0; k < xw.size(); k++) w += std::popcount(xw[k] | zw[k]);
    return w;
}

bool PauliOperator::commutes_with(const PauliOperator &o) const {
    if (num_qubits() != o.num_qubits()) throw DimensionError("operand qubit counts differ");
    // Symplectic inner product x_a.z_b + z_a.x_b mod 2.
    return !(x_.and_parity(o.z_bits()) ^ z_.and_parity(o.x_bits()));
}

PauliOperator PauliOperator::operator*(const PauliOperator &o) const {
    if (num_qubits() != o.num_qubits()) throw DimensionError("operand qubit counts differ");
    // Work in the ordered X^x Z^z convention, where the product rule is a
    // single (-1)^{z_a . x_b} reordering, then convert back.  A literal
    // letter string relates to the ordered form by one factor of i per Y.
    int sympa = phase_ + int(x_.and_popcount(z_));
    int sympb = o.phase_ + int(o.x_.and_popcount(o.z_));
    int symp = sympa + sympb + 2 * int(z_.and_popcount(o.x_));
    BitVec rx = x_ ^ o.x_;
    BitVec rz = z_ ^ o.z_;
    int lit = symp - int(rx.and_popcount(rz));
    return PauliOperator(std::move(rx), std::move(rz), lit);
}

PauliOperator PauliOperator::negated() const {
    return PauliOperator(x_, z_, phase_ + 2);
}

PauliOperator PauliOperator::embedded(size_t total, size_t offset) const {
    size_t n = num_qubits();
    if (offset + n > total) throw ArgumentError("embedding exceeds register size");
    BitVec x(total), z(total);
    x_.for_each_set([&](size_t q) { x.set(offset + q, true); });
    z_.for_each_set([&](size_t q) { z.set(offset + q, true); });
    return PauliOperator(std::move(x), std::move(z), phase_);
}

std::string PauliOperator::str() const {
    static const char *prefix[4] = {"+", "i", "-", "-i"};
    std::string s = prefix[phase_];
    for (size_t q = 0; q < num_qubits(); q++) {
        bool x = x_.get(q), z = z_.get(q);
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

PauliOperator PauliOperator::parse(const std::string &text) {
    size_t pos = 0;
    int phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') phase = 2;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        pos++;
    }
    size_t n = text.size() - pos;
    if (n == 0) throw ParseError("empty Pauli string");
    BitVec x(n), z(n);
    for (size_t q = 0; q < n; q++) {
        switch (text[pos + q]) {
            case 'I':
                break;
            case 'X':
                x.set(q, true);
                break;
            case 'Y':
                x.set(q, true);
                z.set(q, true);
                break;
            case 'Z':
                z.set(q, true);
                break;
            default:
                throw ParseError("invalid Pauli letter in \"" + text + "\"");
        }
    }
    return PauliOperator(std::move(x), std::move(z), phase);
}

bool commutes(const PauliOperator &a, const PauliOperator &b) { return a.commutes_with(b); }

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) { return a * b; }

}  // namespace stacked
