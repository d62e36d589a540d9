// Copyright 2026 The benchmit Authors
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


#include "benchmit/benchgen.h"

#include <stdexcept>

#include "benchmit/rng.h"

namespace benchmit {

const char* generator_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::Agnostic:
            return "agnostic";
        case GeneratorKind::Tailored:
            return "tailored";
        case GeneratorKind::Entangling:
            return "entangling";
    }
    return "?";
}

GeneratorKind generator_from_name(const std::string& name) {
    if (name == "agnostic") {
        return GeneratorKind::Agnostic;
    }
    if (name == "tailored") {
        return GeneratorKind::Tailored;
    }
    if (name == "entangling") {
        return GeneratorKind::Entangling;
    }
    throw std::invalid_argument("unknown benchmark generator '" + name + "'");
}

nlohmann::json BenchmarkBundle::manifest() const {
    return {{"generator", generator_name(kind)},
            {"observable", observable.str()},
            {"expected_bits", bits_to_string(expected_bits)},
            {"flip_mask", bits_to_string(flip_mask)},
            {"seed", seed}};
}

std::size_t flip_outcome(std::size_t outcome, const BitState& mask) {
    for (std::size_t q = 0; q < mask.size(); q++) {
        if (mask[q]) {
            outcome ^= std::size_t{1} << q;
        }
    }
    return outcome;
}

namespace {

constexpr Pauli kAxes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
constexpr Pauli kLetters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

void check_observable(const Circuit& app, const PauliString& o) {
    if (o.size() != app.n_qubits()) {
        throw std::invalid_argument("observable length " + std::to_string(o.size()) +
                                    " does not match " + std::to_string(app.n_qubits()) +
                                    " qubits");
    }
    if (o.weight() == 0) {
        throw std::invalid_argument("observable has empty support");
    }
}

// Copies layer boundaries of src (which must already be in dst's gate numbering).
void copy_with_layers(const Circuit& src, Circuit& dst) {
    const auto& layers = src.layer_starts();
    std::size_t next = 0;
    for (std::size_t i = 0; i < src.size(); i++) {
        while (next < layers.size() && layers[next] == i) {
            dst.mark_layer();
            next++;
        }
        dst.append(src[i]);
    }
}

Gate single_rotation_or_rz(std::uint32_t q, Pauli p, Angle a) {
    return p == Pauli::I ? Gate::rot(q, Pauli::Z, a) : Gate::rot(q, p, a);
}

}  // namespace

BenchmarkBundle gen_agnostic(const Circuit& app, const PauliString& o, std::uint64_t seed) {
    if (app.level() != Level::Logical) {
        throw std::invalid_argument("gen_agnostic expects a logical Pauli-rotation circuit");
    }
    check_observable(app, o);
    const std::size_t n = app.n_qubits();
    Rng rng(seed);
    ProductState state = zero_product_state(n);

    BenchmarkBundle out;
    out.kind = GeneratorKind::Agnostic;
    out.seed = seed;
    out.observable = o;
    out.benchmark = Circuit(n, Level::Logical);
    out.padded_application = Circuit(n, Level::Logical);

    const auto& layers = app.layer_starts();
    std::size_t next_layer = 0;
    for (std::size_t i = 0; i < app.size(); i++) {
        while (next_layer < layers.size() && layers[next_layer] == i) {
            out.benchmark.mark_layer();
            next_layer++;
        }
        const Gate& g = app[i];
        if (g.arity == 1) {
            Angle theta = Angle::quarter_turns(1 + static_cast<int>(rng.below(3)));
            Pauli axis = kAxes[rng.below(3)];
            std::uint32_t q = g.qubits[0];
            state[q] = apply_clifford_rotation(state[q], axis, theta);
            out.benchmark.append(Gate::rot(q, axis, theta));
            continue;
        }
        int anchor = static_cast<int>(rng.below(2));
        Pauli free_letter = kAxes[rng.below(3)];
        std::uint32_t qa = g.qubits[anchor];
        std::uint32_t qb = g.qubits[1 - anchor];
        Pauli anchor_letter = state[qa].axis;
        auto [sa, sb] = apply_pi_two_qubit(state[qa], state[qb], anchor_letter, free_letter);
        state[qa] = sa;
        state[qb] = sb;
        std::array<Pauli, 2> letters;
        letters[anchor] = anchor_letter;
        letters[1 - anchor] = free_letter;
        out.benchmark.append(Gate::rot2(g.qubits[0], letters[0], g.qubits[1], letters[1],
                                        Angle::quarter_turns(2)));
    }

    copy_with_layers(app, out.padded_application);
    out.benchmark.mark_layer();
    out.padded_application.mark_layer();
    for (std::size_t q : o.support()) {
        auto corr = correction_rotation(state[q], o[q]);
        auto uq = static_cast<std::uint32_t>(q);
        out.benchmark.append(single_rotation_or_rz(uq, corr.axis, corr.angle));
        Pauli d = kLetters[rng.below(4)];
        out.padded_application.append(single_rotation_or_rz(uq, d, Angle::quarter_turns(4)));
    }
    out.expected_bits.assign(n, 0);
    out.flip_mask.assign(n, 0);
    return out;
}

BenchmarkBundle gen_tailored(const Circuit& app, const PauliString& o) {
    if (app.level() != Level::Native) {
        throw std::invalid_argument("gen_tailored expects a native circuit");
    }
    check_observable(app, o);
    if (!o.is_diagonal()) {
        throw std::invalid_argument("gen_tailored needs an observable over {I, Z}, got " + o.str());
    }
    BenchmarkBundle out;
    out.kind = GeneratorKind::Tailored;
    out.observable = o;
    out.padded_application = app;
    out.benchmark = Circuit(app.n_qubits(), Level::Native);
    const auto& layers = app.layer_starts();
    std::size_t next_layer = 0;
    for (std::size_t i = 0; i < app.size(); i++) {
        while (next_layer < layers.size() && layers[next_layer] == i) {
            out.benchmark.mark_layer();
            next_layer++;
        }
        const Gate& g = app[i];
        out.benchmark.append(g.kind == GateKind::SX ? Gate::x(g.qubits[0]) : g);
    }
    BitState bits = track_bits(out.benchmark);
    out.expected_bits.assign(app.n_qubits(), 0);
    for (std::size_t q : o.support()) {
        out.expected_bits[q] = bits[q];
    }
    out.flip_mask = out.expected_bits;
    return out;
}

std::vector<Gate> layout_matched_inverse(const Circuit& c, std::size_t begin, std::size_t end,
                                         const Circuit& target, std::size_t tbegin,
                                         std::size_t tend) {
    const std::size_t n = c.n_qubits();
    std::vector<Gate> remaining;
    for (std::size_t i = end; i-- > begin;) {
        Gate g = c[i];
        if (g.kind != GateKind::PauliRot) {
            throw std::invalid_argument("layer inversion expects Pauli rotations");
        }
        g.angle = -g.angle;
        remaining.push_back(g);
    }
    if (remaining.size() != tend - tbegin) {
        throw std::invalid_argument("layer of " + std::to_string(remaining.size()) +
                                    " gates cannot mirror a layer of " +
                                    std::to_string(tend - tbegin));
    }
    auto same_layout = [](const Gate& a, const Gate& b) {
        return a.arity == b.arity && a.qubits[0] == b.qubits[0] &&
               (a.arity == 1 || a.qubits[1] == b.qubits[1]);
    };
    std::vector<Gate> out;
    for (std::size_t t = tbegin; t < tend; t++) {
        bool placed = false;
        for (std::size_t k = 0; k < remaining.size() && !placed; k++) {
            if (!same_layout(remaining[k], target[t])) {
                continue;
            }
            PauliString gk = remaining[k].generator(n);
            bool commutes = true;
            for (std::size_t m = 0; m < k && commutes; m++) {
                commutes = gk.commutes_with(remaining[m].generator(n));
            }
            if (commutes) {
                out.push_back(remaining[k]);
                remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
                placed = true;
            }
        }
        if (!placed) {
            throw std::invalid_argument("layer has no inverse with a consistent gate layout (target gate " +
                                        std::to_string(t) + ")");
        }
    }
    return out;
}

BenchmarkBundle gen_entangling(const Circuit& app, const PauliString& o,
                               const EntanglingOptions& opts) {
    if (app.level() != Level::Logical) {
        throw std::invalid_argument("gen_entangling expects a layered logical circuit");
    }
    check_observable(app, o);
    if (!o.is_diagonal()) {
        throw std::invalid_argument("gen_entangling needs a diagonal observable, got " + o.str());
    }
    const std::size_t k = app.layer_count();
    if (k == 0 || app.layer_starts().front() != 0) {
        throw std::invalid_argument("gen_entangling needs layer marks starting at gate 0");
    }
    if (k % 2 != 0) {
        throw std::invalid_argument("gen_entangling needs an even layer count, got " +
                                    std::to_string(k));
    }
    // Layer ranges [start, end) of U_1 .. U_{2L} (possibly merged into two halves).
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    if (opts.single_pair) {
        ranges.push_back({0, app.layer_range(k / 2 - 1).second});
        ranges.push_back({app.layer_range(k / 2).first, app.size()});
    } else {
        for (std::size_t i = 0; i < k; i++) {
            ranges.push_back(app.layer_range(i));
        }
    }
    const std::size_t l = ranges.size() / 2;

    BenchmarkBundle out;
    out.kind = GeneratorKind::Entangling;
    out.observable = o;
    out.padded_application = app;
    out.benchmark = Circuit(app.n_qubits(), Level::Logical);
    for (std::size_t i = 0; i < l; i++) {
        out.benchmark.mark_layer();
        for (std::size_t g = ranges[i].first; g < ranges[i].second; g++) {
            out.benchmark.append(app[g]);
        }
    }
    for (std::size_t j = 1; j <= l; j++) {
        auto src = ranges[l - j];
        auto dst = ranges[l + j - 1];
        out.benchmark.mark_layer();
        for (const Gate& g :
             layout_matched_inverse(app, src.first, src.second, app, dst.first, dst.second)) {
            out.benchmark.append(g);
        }
    }
    if (opts.single_pair) {
        // Keep the original layer boundaries visible in the benchmark as well.
        Circuit relayered(app.n_qubits(), Level::Logical);
        const auto& starts = app.layer_starts();
        std::size_t next = 0;
        for (std::size_t i = 0; i < out.benchmark.size(); i++) {
            while (next < starts.size() && starts[next] == i) {
                relayered.mark_layer();
                next++;
            }
            relayered.append(out.benchmark[i]);
        }
        out.benchmark = std::move(relayered);
    }
    out.expected_bits.assign(app.n_qubits(), 0);
    out.flip_mask.assign(app.n_qubits(), 0);
    return out;
}

}  // namespace benchmit
