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

#ifndef STACKEDCODES_BITVEC_HPP
#define STACKEDCODES_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace stacked {

// Fixed-length binary vector packed into 64-bit words.  Bit index
// = word * 64 + position inside the word.
class BitVec {
  public:
    BitVec() : n_(0) {}
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec ones(size_t n) {
        BitVec v(n);
        for (size_t q = 0; q < n; q++) v.set(q, true);
        return v;
    }

    size_t size() const { return n_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(size_t i, bool b) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (b) {
            w_[i >> 6] |= mask;
        } else {
            w_[i >> 6] &= ~mask;
        }
    }

    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &o) {
        check_same_size(o);
        for (size_t k = 0; k < w_.size(); k++) w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    // Parity of |this AND other|; the workhorse of all commutation tests.
    bool and_parity(const BitVec &o) const {
        check_same_size(o);
        uint64_t acc = 0;
        for (size_t k = 0; k < w_.size(); k++) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1;
    }

    size_t and_popcount(const BitVec &o) const {
        check_same_size(o);
        size_t c = 0;
        for (size_t k = 0; k < w_.size(); k++) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    bool is_zero() const {
        for (uint64_t w : w_) {
            if (w) return false;
        }
        return true;
    }

    bool any() const { return !is_zero(); }

    // Index of the lowest set bit, or -1.
    int lowest_set() const {
        for (size_t k = 0; k < w_.size(); k++) {
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        }
        return -1;
    }

    std::vector<uint32_t> indices() const {
        std::vector<uint32_t> out;
        for (size_t k = 0; k < w_.size(); k++) {
            uint64_t w = w_[k];
            while (w) {
                out.push_back(uint32_t(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each_set(F &&f) const {
        for (size_t k = 0; k < w_.size(); k++) {
            uint64_t w = w_[k];
            while (w) {
                f(size_t(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const BitVec &o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec &o) const { return !(*this == o); }

    std::string to01() const {
        std::string s(n_, '0');
        for (size_t i = 0; i < n_; i++) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    const std::vector<uint64_t> &words() const { return w_; }

  private:
    void check_same_size(const BitVec &o) const {
        if (n_ != o.n_) throw DimensionError("bit vector length mismatch");
    }

    size_t n_;
    std::vector<uint64_t> w_;
};

}  // namespace stacked

#endif
