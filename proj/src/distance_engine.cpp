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

#include "distance_engine.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_map>

namespace stacked {

const char *pauli_type_name(PauliType t) {
    switch (t) {
        case PauliType::X:
            return "X";
        case PauliType::Z:
            return "Z";
        case PauliType::Any:
            return "any";
    }
    return "?";
}

const char *strategy_name(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::Exhaustive:
            return "exhaustive";
        case SearchStrategy::SyndromePruned:
            return "syndrome-pruned";
        case SearchStrategy::MeetInTheMiddle:
            return "meet-in-the-middle";
        case SearchStrategy::RandomProbe:
            return "random-probe";
    }
    return "?";
}

std::string DistanceResult::str() const {
    std::ostringstream out;
    if (found) {
        out << "found weight " << weight << " witness " << witness->str();
    } else {
        out << "none below " << weight + 1;
    }
    out << " (strategy " << strategy << (complete ? ", complete" : ", incomplete") << ")";
    return out.str();
}

namespace {

// Letters tried per chosen qubit.
constexpr char kLettersAny[3] = {'X', 'Z', 'Y'};

struct SearchContext {
    const StabilizerGroup *group;
    size_t n;
    size_t m;  // generator count
    // syndrome bit layout: [0, m) generator anticommutation, m and m+1 the
    // logical_x / logical_z anticommutation indicators
    std::vector<std::array<BitVec, 3>> columns;  // per qubit, per letter (X, Z, Y)
    std::vector<BitVec> freeze;  // per qubit position: generator bits untouchable from here on
    int letters;                 // 1 for typed searches, 3 for Any
    PauliType type;

    BitVec empty_syndrome() const { return BitVec(m + 2); }

    bool is_goal(const BitVec &syn) const {
        if (!(syn.get(m) || syn.get(m + 1))) return false;
        for (size_t i = 0; i < m; i++) {
            if (syn.get(i)) return false;
        }
        return true;
    }

    size_t letter_index(char c) const { return c == 'X' ? 0 : (c == 'Z' ? 1 : 2); }

    char letter_at(int k) const {
        if (type == PauliType::X) return 'X';
        if (type == PauliType::Z) return 'Z';
        return kLettersAny[k];
    }
};

SearchContext make_context(const DistanceQuery &q) {
    SearchContext ctx;
    ctx.group = q.group;
    ctx.n = q.group->num_qubits();
    ctx.m = q.group->size();
    ctx.type = q.type;
    ctx.letters = q.type == PauliType::Any ? 3 : 1;

    ctx.columns.resize(ctx.n);
    for (size_t qb = 0; qb < ctx.n; qb++) {
        for (char c : kLettersAny) {
            PauliOperator p = PauliOperator::single(ctx.n, qb, c);
            BitVec col(ctx.m + 2);
            for (size_t i = 0; i < ctx.m; i++) {
                if (!p.commutes_with(q.group->generator(i))) col.set(i, true);
            }
            if (!p.commutes_with(q.logical_x)) col.set(ctx.m, true);
            if (!p.commutes_with(q.logical_z)) col.set(ctx.m + 1, true);
            ctx.columns[qb][ctx.letter_index(c)] = std::move(col);
        }
    }

    // freeze[q]: generators (and logical indicators never frozen) whose
    // support lies entirely below qubit q; once the search has passed q, a
    // set syndrome bit there can no longer be cleared.
    std::vector<int> last_qubit(ctx.m, -1);
    for (size_t i = 0; i < ctx.m; i++) {
        const auto &g = q.group->generator(i);
        for (size_t qb = 0; qb < ctx.n; qb++) {
            if (g.x_bits().get(qb) || g.z_bits().get(qb)) last_qubit[i] = int(qb);
        }
    }
    ctx.freeze.assign(ctx.n + 1, BitVec(ctx.m + 2));
    for (size_t qb = 0; qb <= ctx.n; qb++) {
        for (size_t i = 0; i < ctx.m; i++) {
            if (last_qubit[i] < int(qb)) ctx.freeze[qb].set(i, true);
        }
    }
    return ctx;
}

// Depth-first enumeration of supports of exactly `target_w` qubits in
// ascending order.  With `prune` set, a branch dies as soon as a frozen
// generator bit is still raised (it can never be cleared by later qubits).
struct DfsSearch {
    const SearchContext &ctx;
    int target_w;
    bool prune;
    std::vector<uint32_t> chosen;
    std::vector<char> letters;
    std::optional<PauliOperator> witness;

    DfsSearch(const SearchContext &c, int w, bool p) : ctx(c), target_w(w), prune(p) {}

    bool run() {
        BitVec syn = ctx.empty_syndrome();
        return descend(0, 0, syn);
    }

    bool descend(size_t next_qubit, int depth, BitVec &syn) {
        if (depth == target_w) {
            if (!ctx.is_goal(syn)) return false;
            PauliOperator acc = PauliOperator::identity(ctx.n);
            for (size_t i = 0; i < chosen.size(); i++) {
                acc = acc * PauliOperator::single(ctx.n, chosen[i], letters[i]);
            }
            witness = acc;
            return true;
        }
        if (prune) {
            // All generator bits currently set must still be reachable.
            const BitVec &frozen = ctx.freeze[next_qubit];
            for (size_t i = 0; i < ctx.m; i++) {
                if (syn.get(i) && frozen.get(i)) return false;
            }
        }
        for (size_t qb = next_qubit; qb + size_t(target_w - depth) <= ctx.n; qb++) {
            for (int k = 0; k < ctx.letters; k++) {
                char c = ctx.letter_at(k);
                const BitVec &col = ctx.columns[qb][ctx.letter_index(c)];
                syn ^= col;
                chosen.push_back(uint32_t(qb));
                letters.push_back(c);
                if (descend(qb + 1, depth + 1, syn)) return true;
                chosen.pop_back();
                letters.pop_back();
                syn ^= col;
            }
        }
        return false;
    }
};

double combinations(size_t n, int w) {
    double c = 1;
    for (int i = 0; i < w; i++) c = c * double(n - size_t(i)) / double(i + 1);
    return c;
}

double enumeration_cost(size_t n, int w_max, int letters) {
    double total = 0;
    for (int w = 1; w <= w_max; w++) total += combinations(n, w) * std::pow(double(letters), w);
    return total;
}

void verify_witness(const DistanceQuery &q, const PauliOperator &w) {
    for (const auto &g : q.group->generators()) {
        if (!w.commutes_with(g)) throw DefectError("distance witness anticommutes with a generator");
    }
    if (w.commutes_with(q.logical_x) && w.commutes_with(q.logical_z)) {
        throw DefectError("distance witness acts trivially on the logical qubit");
    }
    if (q.group->contains(w) != Containment::Outside) {
        throw DefectError("distance witness lies inside the group");
    }
}

DistanceResult dfs_strategy(const DistanceQuery &q, bool prune) {
    SearchContext ctx = make_context(q);
    DistanceResult res;
    for (int w = 1; w <= q.w_max; w++) {
        DfsSearch dfs(ctx, w, prune);
        if (dfs.run()) {
            res.found = true;
            res.weight = w;
            res.witness = dfs.witness;
            res.complete = true;
            verify_witness(q, *res.witness);
            return res;
        }
    }
    res.found = false;
    res.weight = q.w_max;
    res.complete = true;
    return res;
}

std::string syndrome_key(const BitVec &syn) {
    std::string key;
    for (uint64_t w : syn.words()) key.append(reinterpret_cast<const char *>(&w), sizeof(w));
    return key;
}

DistanceResult mitm_strategy(const DistanceQuery &q) {
    if (q.type == PauliType::Any) {
        throw BudgetError("meet-in-the-middle supports X or Z typed queries only");
    }
    SearchContext ctx = make_context(q);
    size_t half = ctx.n / 2;
    char letter = q.type == PauliType::X ? 'X' : 'Z';
    size_t li = ctx.letter_index(letter);

    // Enumerate left-half supports up to w_max; keep the lightest support
    // per syndrome.
    struct Entry {
        int w;
        std::vector<uint32_t> qubits;
    };
    std::unordered_map<std::string, Entry> left;
    std::vector<uint32_t> stack;
    BitVec syn = ctx.empty_syndrome();
    auto record = [&]() {
        std::string key = syndrome_key(syn);
        auto it = left.find(key);
        if (it == left.end() || int(stack.size()) < it->second.w) {
            left[key] = Entry{int(stack.size()), stack};
        }
    };
    std::function<void(size_t, int)> enum_left = [&](size_t next, int remaining) {
        record();
        if (remaining == 0) return;
        for (size_t qb = next; qb < half; qb++) {
            syn ^= ctx.columns[qb][li];
            stack.push_back(uint32_t(qb));
            enum_left(qb + 1, remaining - 1);
            stack.pop_back();
            syn ^= ctx.columns[qb][li];
        }
    };
    enum_left(0, q.w_max);

    // Right halves: for each, look up the complementary syndrome that
    // clears all generator bits and raises a logical indicator.
    DistanceResult res;
    int best = q.w_max + 1;
    std::vector<uint32_t> best_support;
    for (int target_bit : {0, 1}) {
        BitVec want = ctx.empty_syndrome();
        want.set(ctx.m + size_t(target_bit), true);
        std::function<void(size_t, int)> enum_right = [&](size_t next, int remaining) {
            BitVec need = syn ^ want;
            auto it = left.find(syndrome_key(need));
            if (it != left.end()) {
                int total = it->second.w + int(stack.size());
                if (total > 0 && total < best) {
                    best = total;
                    best_support = it->second.qubits;
                    best_support.insert(best_support.end(), stack.begin(), stack.end());
                }
            }
            if (remaining == 0) return;
            for (size_t qb = std::max(next, half); qb < ctx.n; qb++) {
                syn ^= ctx.columns[qb][li];
                stack.push_back(uint32_t(qb));
                enum_right(qb + 1, remaining - 1);
                stack.pop_back();
                syn ^= ctx.columns[qb][li];
            }
        };
        enum_right(half, q.w_max);
    }
    // The two logical indicator targets may combine (X and Z flips both
    // raised); sweep those too.
    {
        BitVec want = ctx.empty_syndrome();
        want.set(ctx.m, true);
        want.set(ctx.m + 1, true);
        std::function<void(size_t, int)> enum_right = [&](size_t next, int remaining) {
            BitVec need = syn ^ want;
            auto it = left.find(syndrome_key(need));
            if (it != left.end()) {
                int total = it->second.w + int(stack.size());
                if (total > 0 && total < best) {
                    best = total;
                    best_support = it->second.qubits;
                    best_support.insert(best_support.end(), stack.begin(), stack.end());
                }
            }
            if (remaining == 0) return;
            for (size_t qb = std::max(next, half); qb < ctx.n; qb++) {
                syn ^= ctx.columns[qb][li];
                stack.push_back(uint32_t(qb));
                enum_right(qb + 1, remaining - 1);
                stack.pop_back();
                syn ^= ctx.columns[qb][li];
            }
        };
        enum_right(half, q.w_max);
    }

    if (best <= q.w_max) {
        res.found = true;
        res.weight = best;
        res.witness = PauliOperator::from_support(
            ctx.n, std::span<const uint32_t>(best_support.data(), best_support.size()), letter);
        verify_witness(q, *res.witness);
    } else {
        res.found = false;
        res.weight = q.w_max;
    }
    res.complete = true;
    return res;
}

DistanceResult probe_strategy(const DistanceQuery &q) {
    SearchContext ctx = make_context(q);
    std::mt19937_64 rng(q.seed);
    DistanceResult res;
    res.seed = q.seed;
    int best = q.w_max + 1;
    std::optional<PauliOperator> best_wit;
    for (uint64_t t = 0; t < q.probe_trials; t++) {
        int w = 1 + int(rng() % uint64_t(q.w_max));
        if (w >= best) continue;
        BitVec syn = ctx.empty_syndrome();
        std::vector<uint32_t> qs;
        std::vector<char> ls;
        while (int(qs.size()) < w) {
            uint32_t qb = uint32_t(rng() % ctx.n);
            bool dup = false;
            for (uint32_t x : qs) dup |= x == qb;
            if (dup) continue;
            char c = ctx.type == PauliType::Any ? kLettersAny[rng() % 3] : ctx.letter_at(0);
            qs.push_back(qb);
            ls.push_back(c);
            syn ^= ctx.columns[qb][ctx.letter_index(c)];
        }
        if (ctx.is_goal(syn)) {
            PauliOperator acc = PauliOperator::identity(ctx.n);
            for (size_t i = 0; i < qs.size(); i++) {
                acc = acc * PauliOperator::single(ctx.n, qs[i], ls[i]);
            }
            best = w;
            best_wit = acc;
        }
    }
    if (best <= q.w_max) {
        res.found = true;
        res.weight = best;
        res.witness = best_wit;
        verify_witness(q, *res.witness);
    } else {
        res.found = false;
        res.weight = q.w_max;
    }
    res.complete = false;  // sampling proves nothing about absence
    return res;
}

}  // namespace

DistanceResult min_weight_logical(const DistanceQuery &q) {
    if (!q.group) throw ArgumentError("query has no group");
    if (q.w_max < 1) throw ArgumentError("w_max must be at least 1");
    size_t n = q.group->num_qubits();
    if (q.logical_x.num_qubits() != n || q.logical_z.num_qubits() != n) {
        throw DimensionError("logical representatives act on wrong qubit count");
    }

    int letters = q.type == PauliType::Any ? 3 : 1;
    auto t0 = std::chrono::steady_clock::now();
    DistanceResult res;
    switch (q.strategy) {
        case SearchStrategy::Exhaustive:
            if (enumeration_cost(n, q.w_max, letters) > 2e8) {
                throw BudgetError("exhaustive enumeration exceeds its budget on this instance");
            }
            res = dfs_strategy(q, false);
            break;
        case SearchStrategy::SyndromePruned:
            if (enumeration_cost(n, q.w_max, letters) > 4e9) {
                throw BudgetError("pruned search exceeds its budget on this instance");
            }
            res = dfs_strategy(q, true);
            break;
        case SearchStrategy::MeetInTheMiddle:
            if (enumeration_cost(n / 2, q.w_max, 1) > 2e7) {
                throw BudgetError("meet-in-the-middle table exceeds its budget on this instance");
            }
            res = mitm_strategy(q);
            break;
        case SearchStrategy::RandomProbe:
            res = probe_strategy(q);
            break;
    }
    res.strategy = strategy_name(q.strategy);
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

DistanceResult x_distance_bound(const StackedCode &code, int w_max, SearchStrategy strategy) {
    DistanceQuery q;
    const StabilizerGroup &g = code.stabilizer_group();
    q.group = &g;
    q.logical_x = code.logical_x();
    q.logical_z = code.logical_z();
    q.type = PauliType::X;
    q.w_max = w_max;
    q.strategy = strategy;
    return min_weight_logical(q);
}

}  // namespace stacked
