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

#include "switch_engine.hpp"

#include <sstream>

#include "gf2.hpp"

namespace stacked {

namespace {

// Running engine state: the group, the transcript under construction and
// the tracked logical representatives.
struct Engine {
    StabilizerGroup group;
    SwitchTranscript transcript;
    const MeasureHook &hook;

    Engine(const StabilizerGroup &initial, const MeasureHook &h) : group(initial), hook(h) {
        transcript.initial_generators = initial.generators();
    }

    bool anticommutes_with_some_generator(const PauliOperator &m) const {
        for (const auto &g : group.generators()) {
            if (!g.commutes_with(m)) return true;
        }
        return false;
    }

    // Measure m; the hook supplies the outcome (for deterministic
    // measurements it receives the sign forced by the group).
    int measure(const std::string &label, const PauliOperator &m) {
        TranscriptStep step;
        step.kind = TranscriptStep::Kind::Measure;
        step.label = label;
        step.op = m;
        if (!anticommutes_with_some_generator(m)) {
            std::optional<int> forced;
            switch (group.contains(m)) {
                case Containment::InGroup:
                    forced = 1;
                    break;
                case Containment::InGroupNegated:
                    forced = -1;
                    break;
                case Containment::Outside:
                    throw ProtocolError("measured operator " + label +
                                        " commutes with the group but lies outside it");
            }
            step.outcome = hook(label, m, true, forced);
            step.deterministic = true;
            step.replaced_index = -1;
        } else {
            step.outcome = hook(label, m, false, std::nullopt);
            MeasurementEffect eff;
            group = group.after_measurement(m, step.outcome, &eff);
            step.deterministic = false;
            step.replaced_index = eff.replaced_index;
            // A logical representative anticommuting with m stays a valid
            // representative after multiplication by the replaced (signed)
            // generator.
            if (!transcript.logical_x_rep.commutes_with(m)) {
                transcript.logical_x_rep = transcript.logical_x_rep * *eff.replaced_generator;
            }
            if (!transcript.logical_z_rep.commutes_with(m)) {
                transcript.logical_z_rep = transcript.logical_z_rep * *eff.replaced_generator;
            }
        }
        transcript.steps.push_back(step);
        return step.outcome;
    }

    void apply_pauli(const std::string &label, const PauliOperator &p) {
        group = group.with_pauli_applied(p);
        TranscriptStep step;
        step.kind = TranscriptStep::Kind::Pauli;
        step.label = label;
        step.op = p;
        transcript.steps.push_back(step);
    }
};

std::string make_label(const char *tag, size_t a, size_t b) {
    return std::string(tag) + "-" + std::to_string(a) + "-" + std::to_string(b);
}

std::string make_label(const char *tag, size_t a) {
    return std::string(tag) + "-" + std::to_string(a);
}

}  // namespace

int SwitchTranscript::outcome_of(const std::string &label) const {
    for (const auto &s : steps) {
        if (s.kind == TranscriptStep::Kind::Measure && s.label == label) return s.outcome;
    }
    throw TranscriptError("transcript has no measurement labeled " + label);
}

bool SwitchTranscript::has_step(const std::string &label) const {
    for (const auto &s : steps) {
        if (s.label == label) return true;
    }
    return false;
}

StabilizerGroup SwitchTranscript::replay() const {
    if (initial_generators.empty()) throw TranscriptError("transcript has no initial group");
    StabilizerGroup g(initial_generators[0].num_qubits(), initial_generators);
    for (const auto &s : steps) {
        if (s.kind == TranscriptStep::Kind::Pauli) {
            g = g.with_pauli_applied(s.op);
            continue;
        }
        MeasurementEffect eff;
        g = g.after_measurement(s.op, s.outcome, &eff);
        bool det = eff.deterministic;
        if (det != s.deterministic || (!det && eff.replaced_index != s.replaced_index)) {
            throw TranscriptError("replay diverged at step " + s.label);
        }
    }
    return g;
}

uint64_t SwitchTranscript::group_fingerprint(const StabilizerGroup &g) {
    std::string text = g.canonical_form().str();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

StabilizerGroup prepare_ancilla_group(const StackedCode &code) {
    const HexColorCode &layer = code.layer_code();
    std::vector<PauliOperator> gens;
    for (size_t l = 2; l <= code.num_layers(); l++) {
        for (size_t i = 0; i < layer.plaquettes().size(); i++) {
            gens.push_back(code.embed(l, layer.x_plaquette_op(i)));
        }
        for (size_t i = 0; i < layer.plaquettes().size(); i++) {
            gens.push_back(code.embed(l, layer.z_plaquette_op(i)));
        }
    }
    for (size_t k = 1; k <= code.num_pairs(); k++) {
        gens.push_back(code.bell_x(k));
        gens.push_back(code.bell_z(k));
    }
    return StabilizerGroup(code.total_qubits(), std::move(gens));
}

StabilizerGroup ancilla_state_group_local(const StackedCode &code) {
    const HexColorCode &layer = code.layer_code();
    size_t n2 = layer.num_qubits();
    size_t local_n = (code.num_layers() - 1) * n2 + 1;
    auto local_offset = [&](size_t l) { return (l - 2) * n2; };
    auto local_logical = [&](size_t l, char letter) {
        if (l == size_t(code.distance())) return PauliOperator::single(local_n, local_n - 1, letter);
        return PauliOperator::from_support(n2, BitVec::ones(n2), letter).embedded(local_n, local_offset(l));
    };
    std::vector<PauliOperator> gens;
    for (size_t l = 2; l <= code.num_layers(); l++) {
        for (size_t i = 0; i < layer.plaquettes().size(); i++) {
            gens.push_back(layer.x_plaquette_op(i).embedded(local_n, local_offset(l)));
        }
        for (size_t i = 0; i < layer.plaquettes().size(); i++) {
            gens.push_back(layer.z_plaquette_op(i).embedded(local_n, local_offset(l)));
        }
    }
    for (size_t k = 1; k <= code.num_pairs(); k++) {
        gens.push_back(local_logical(2 * k, 'X') * local_logical(2 * k + 1, 'X'));
        gens.push_back(local_logical(2 * k, 'Z') * local_logical(2 * k + 1, 'Z'));
    }
    return StabilizerGroup(local_n, std::move(gens));
}

StabilizerGroup data_plus_ancilla_group(const StackedCode &code) {
    const HexColorCode &layer = code.layer_code();
    std::vector<PauliOperator> gens;
    for (size_t i = 0; i < layer.plaquettes().size(); i++) {
        gens.push_back(code.embed(1, layer.x_plaquette_op(i)));
    }
    for (size_t i = 0; i < layer.plaquettes().size(); i++) {
        gens.push_back(code.embed(1, layer.z_plaquette_op(i)));
    }
    for (const auto &g : prepare_ancilla_group(code).generators()) gens.push_back(g);
    return StabilizerGroup(code.total_qubits(), std::move(gens));
}

namespace {

void require_same_group(const StabilizerGroup &input, const StabilizerGroup &expected,
                        bool signs_too, const char *what) {
    CanonicalForm a = input.canonical_form();
    CanonicalForm b = expected.canonical_form();
    bool ok = signs_too ? a == b : a.same_span(b);
    if (ok) return;
    size_t bad = 0;
    for (size_t i = 0; i < a.rows.size() && i < b.rows.size(); i++) {
        bool differ = signs_too ? a.rows[i] != b.rows[i]
                                : (a.rows[i].x_bits() != b.rows[i].x_bits() ||
                                   a.rows[i].z_bits() != b.rows[i].z_bits());
        if (differ) {
            bad = i;
            break;
        }
    }
    throw ProtocolError(std::string(what) + ": input group mismatch at canonical generator " +
                        std::to_string(bad));
}

}  // namespace

SwitchResult switch_up(const StabilizerGroup &input, const StackedCode &code,
                       OutcomeSource &outcomes) {
    require_same_group(input, code.left_column_group(), true, "switch_up");

    Engine eng(input);
    eng.transcript.d = code.distance();
    eng.transcript.direction = "up";
    eng.transcript.logical_x_rep = code.layer_logical(1, 'X');
    eng.transcript.logical_z_rep = code.layer_logical(1, 'Z');

    for (size_t k = 1; k <= code.num_pairs(); k++) {
        for (size_t i = 0; i < code.plaquettes_per_layer(); i++) {
            eng.measure(make_label("gauge", k, i), code.gauge_op(k, i), outcomes);
        }
    }

    require_same_group(eng.group, code.stabilizer_group(), false, "switch_up result");
    return SwitchResult{eng.group, std::move(eng.transcript)};
}

SwitchResult switch_down(const StabilizerGroup &input, const StackedCode &code,
                         OutcomeSource &outcomes, const SwitchOptions &opts) {
    require_same_group(input, code.stabilizer_group(), false, "switch_down");
    if (opts.strip_repetitions < 1 || opts.strip_repetitions % 2 == 0) {
        throw ArgumentError("strip_repetitions must be a positive odd count");
    }

    Engine eng(input);
    eng.transcript.d = code.distance();
    eng.transcript.direction = "down";
    eng.transcript.logical_x_rep = code.layer_logical(1, 'X');
    eng.transcript.logical_z_rep = code.layer_logical(1, 'Z');

    const HexColorCode &layer = code.layer_code();
    for (size_t l = 1; l <= code.num_layers(); l++) {
        for (size_t i = 0; i < layer.plaquettes().size(); i++) {
            eng.measure(make_label("G", l, i), code.embed(l, layer.x_plaquette_op(i)), outcomes);
        }
    }
    for (size_t l = 1; l <= code.num_layers(); l++) {
        for (size_t i = 0; i < layer.plaquettes().size(); i++) {
            eng.measure(make_label("H", l, i), code.embed(l, layer.z_plaquette_op(i)), outcomes);
        }
    }

    auto strips = boundary_bell_operators(code);
    for (const auto &bo : strips) {
        for (char pauli : {'X', 'Z'}) {
            const PauliOperator &op = pauli == 'X' ? bo.strip_x : bo.strip_z;
            std::string label = make_label(pauli == 'X' ? "stripX" : "stripZ", bo.boundary);
            if (opts.strip_repetitions == 1) {
                eng.measure(label, op, outcomes);
            } else {
                // Repeat the strip measurement; the first reading fixes the
                // state, the vote fixes the record.
                int physical = eng.measure(label, op, outcomes);
                std::vector<int> readings;
                for (int r = 0; r < opts.strip_repetitions; r++) {
                    bool flipped = opts.flip_injector && opts.flip_injector(size_t(r));
                    readings.push_back(flipped ? -physical : physical);
                }
                eng.transcript.steps.back().outcome = majority_vote(readings);
            }
        }
    }

    require_same_group(eng.group, data_plus_ancilla_group(code), false, "switch_down result");

    // Frame: the sign of each tracked representative relative to the
    // canonical logical, reduced against the all-plus final group.
    StabilizerGroup canon = data_plus_ancilla_group(code);
    auto rep_sign = [&](const PauliOperator &rep, const PauliOperator &target) {
        switch (canon.contains(rep * target)) {
            case Containment::InGroup:
                return 1;
            case Containment::InGroupNegated:
                return -1;
            case Containment::Outside:
                throw DefectError("tracked logical left its class");
        }
        return 0;
    };
    int sx = rep_sign(eng.transcript.logical_x_rep, code.layer_logical(1, 'X'));
    int sz = rep_sign(eng.transcript.logical_z_rep, code.layer_logical(1, 'Z'));
    eng.transcript.logical_frame = sx == 1 ? (sz == 1 ? 'I' : 'X') : (sz == 1 ? 'Z' : 'Y');

    return SwitchResult{eng.group, std::move(eng.transcript)};
}

int infer_cell_syndrome(const SwitchTranscript &t, size_t pair, size_t plaquette, char pauli) {
    const char *tag = pauli == 'X' ? "G" : "H";
    return t.outcome_of(make_label(tag, 2 * pair - 1, plaquette)) *
           t.outcome_of(make_label(tag, 2 * pair, plaquette));
}

int infer_bell_syndrome(const SwitchTranscript &t, const StackedCode &code, size_t boundary,
                        char pauli) {
    const char *tag = pauli == 'X' ? "G" : "H";
    int acc = t.outcome_of(make_label(pauli == 'X' ? "stripX" : "stripZ", boundary));
    const auto &plaq = code.layer_code().plaquettes();
    for (size_t i = 0; i < plaq.size(); i++) {
        if (plaq[i].color == Color::Purple) acc *= t.outcome_of(make_label(tag, 2 * boundary, i));
    }
    if (2 * boundary + 1 < size_t(code.distance())) {
        for (size_t i = 0; i < plaq.size(); i++) {
            if (plaq[i].color == Color::Yellow) {
                acc *= t.outcome_of(make_label(tag, 2 * boundary + 1, i));
            }
        }
    }
    return acc;
}

int group_sign(const StabilizerGroup &g, const PauliOperator &op) {
    switch (g.contains(op)) {
        case Containment::InGroup:
            return 1;
        case Containment::InGroupNegated:
            return -1;
        case Containment::Outside:
            throw ProtocolError("operator is not an element of the group");
    }
    return 0;
}

PauliOperator sign_fix_pauli(const StabilizerGroup &g,
                             const std::vector<PauliOperator> &preserve) {
    size_t n = g.num_qubits();
    std::vector<BitVec> rows;
    std::vector<bool> rhs;
    auto add_constraint = [&](const PauliOperator &p, bool want_anticommute) {
        BitVec row(2 * n);
        p.z_bits().for_each_set([&](size_t q) { row.set(q, true); });
        p.x_bits().for_each_set([&](size_t q) { row.set(n + q, true); });
        rows.push_back(std::move(row));
        rhs.push_back(want_anticommute);
    };
    for (const auto &gen : g.generators()) add_constraint(gen, gen.phase() == 2);
    for (const auto &p : preserve) add_constraint(p, false);

    auto sol = gf2::solve(rows, rhs, 2 * n);
    if (!sol) throw DefectError("sign fix system is inconsistent");
    BitVec x(n), z(n);
    for (size_t q = 0; q < n; q++) {
        if (sol->get(q)) x.set(q, true);
        if (sol->get(n + q)) z.set(q, true);
    }
    return PauliOperator(std::move(x), std::move(z), 0);
}

int majority_vote(const std::vector<int> &readings) {
    if (readings.empty() || readings.size() % 2 == 0) {
        throw ArgumentError("majority vote needs an odd number of readings");
    }
    int acc = 0;
    for (int r : readings) acc += r > 0 ? 1 : -1;
    return acc > 0 ? 1 : -1;
}

std::string SwitchTranscript::serialize() const {
    std::ostringstream out;
    out << "stackedcodes-transcript v1\n";
    out << "d " << d << "\n";
    out << "direction " << direction << "\n";
    for (const auto &g : initial_generators) out << "initial " << g.str() << "\n";
    for (size_t i = 0; i < steps.size(); i++) {
        const auto &s = steps[i];
        if (s.kind == TranscriptStep::Kind::Measure) {
            out << "step " << i << " measure " << s.label << " " << s.op.str() << " " << s.outcome
                << " det " << (s.deterministic ? 1 : 0) << " replaced " << s.replaced_index << "\n";
        } else {
            out << "step " << i << " pauli " << s.label << " " << s.op.str() << "\n";
        }
    }
    out << "logical_x_rep " << logical_x_rep.str() << "\n";
    out << "logical_z_rep " << logical_z_rep.str() << "\n";
    out << "frame " << logical_frame << "\n";
    out << "final-fingerprint " << group_fingerprint(replay()) << "\n";
    return out.str();
}

SwitchTranscript SwitchTranscript::parse(const std::string &text) {
    SwitchTranscript t;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "stackedcodes-transcript v1") {
        throw ParseError("missing transcript header");
    }
    std::optional<uint64_t> recorded_fp;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "d") {
            ls >> t.d;
        } else if (kw == "direction") {
            ls >> t.direction;
        } else if (kw == "initial") {
            std::string op;
            ls >> op;
            t.initial_generators.push_back(PauliOperator::parse(op));
        } else if (kw == "step") {
            size_t idx;
            std::string kind, label, op;
            ls >> idx >> kind >> label >> op;
            TranscriptStep s;
            s.label = label;
            s.op = PauliOperator::parse(op);
            if (kind == "measure") {
                std::string detkw, repkw;
                int det;
                ls >> s.outcome >> detkw >> det >> repkw >> s.replaced_index;
                if (detkw != "det" || repkw != "replaced") throw ParseError("bad step line");
                s.kind = TranscriptStep::Kind::Measure;
                s.deterministic = det != 0;
            } else if (kind == "pauli") {
                s.kind = TranscriptStep::Kind::Pauli;
            } else {
                throw ParseError("unknown step kind " + kind);
            }
            t.steps.push_back(std::move(s));
        } else if (kw == "logical_x_rep") {
            std::string op;
            ls >> op;
            t.logical_x_rep = PauliOperator::parse(op);
        } else if (kw == "logical_z_rep") {
            std::string op;
            ls >> op;
            t.logical_z_rep = PauliOperator::parse(op);
        } else if (kw == "frame") {
            std::string f;
            ls >> f;
            t.logical_frame = f.empty() ? 'I' : f[0];
        } else if (kw == "final-fingerprint") {
            uint64_t fp;
            ls >> fp;
            recorded_fp = fp;
        } else {
            throw ParseError("unknown transcript line: " + line);
        }
    }
    if (recorded_fp && *recorded_fp != group_fingerprint(t.replay())) {
        throw TranscriptError("transcript replay fingerprint mismatch");
    }
    return t;
}

}  // namespace stacked
