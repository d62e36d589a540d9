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


#include "benchmit/noisy_sim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "benchmit/program.h"

namespace benchmit {

namespace {

void check_native(const Circuit& c) {
    if (c.level() != Level::Native) {
        throw std::invalid_argument("noisy simulation expects a native-level circuit");
    }
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) {
        throw std::length_error(std::string(what) + " is capped at " + std::to_string(cap) +
                                " qubits; circuit has " + std::to_string(n));
    }
}

// Draws the error pattern of one trajectory: for each CZ location, 0 for no error or
// 1 + (index into the 16 two-qubit Paulis). Returns whether any error fired.
bool draw_errors(const std::vector<double>& p_at, Rng& rng, std::vector<std::uint8_t>& pattern) {
    bool any = false;
    for (std::size_t k = 0; k < p_at.size(); k++) {
        pattern[k] = 0;
        if (p_at[k] > 0 && rng.uniform() < p_at[k]) {
            pattern[k] = static_cast<std::uint8_t>(1 + rng.below(16));
            any = true;
        }
    }
    return any;
}

std::vector<double> cz_probabilities(const Program& prog, const NoiseModel& nm) {
    std::vector<double> p_at;
    for (const ProgramOp& op : prog.ops) {
        if (op.kind == ProgramOp::Kind::CZ) {
            p_at.push_back(nm.depolarizing(op.a, op.b));
        }
    }
    return p_at;
}

StateVector run_trajectory(const Program& prog, const std::vector<std::uint8_t>& pattern) {
    StateVector sv(prog.n_qubits);
    std::size_t k = 0;
    for (const ProgramOp& op : prog.ops) {
        sv.apply(op);
        if (op.kind != ProgramOp::Kind::CZ) {
            continue;
        }
        if (std::uint8_t e = pattern[k++]) {
            int idx = e - 1;
            auto pa = static_cast<Pauli>(idx & 3);
            auto pb = static_cast<Pauli>(idx >> 2);
            if (pa != Pauli::I) {
                sv.apply_1q(op.a, Mat2::pauli(pa));
            }
            if (pb != Pauli::I) {
                sv.apply_1q(op.b, Mat2::pauli(pb));
            }
        }
    }
    return sv;
}

std::vector<double> cumulative(const std::vector<double>& probs) {
    std::vector<double> cdf(probs.size());
    double acc = 0;
    for (std::size_t i = 0; i < probs.size(); i++) {
        acc += std::max(0.0, probs[i]);
        cdf[i] = acc;
    }
    return cdf;
}

std::size_t draw_index(const std::vector<double>& cdf, Rng& rng) {
    double u = rng.uniform() * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
        --it;
    }
    return static_cast<std::size_t>(it - cdf.begin());
}

std::size_t apply_readout_flips(std::size_t outcome, const std::vector<ReadoutError>& readout,
                                Rng& rng) {
    for (std::size_t q = 0; q < readout.size(); q++) {
        bool one = (outcome >> q) & 1;
        double flip = one ? readout[q].p0_given_1 : readout[q].p1_given_0;
        if (flip > 0 && rng.uniform() < flip) {
            outcome ^= std::size_t{1} << q;
        }
    }
    return outcome;
}

}  // namespace

DensityMatrix simulate_density(const Circuit& native, const NoiseModel& nm) {
    check_native(native);
    check_cap(native.n_qubits(), kDensityQubitCap, "channel_exact simulation");
    nm.validate(native.n_qubits());
    Program prog = compile_program(native);
    DensityMatrix rho(native.n_qubits());
    for (const ProgramOp& op : prog.ops) {
        if (op.kind == ProgramOp::Kind::CZ) {
            rho.apply_noisy_cz(op.a, op.b, nm.depolarizing(op.a, op.b));
        } else {
            rho.apply(op);
        }
    }
    return rho;
}

TrajectoryEstimate trajectory_expectation(const Circuit& native, const PauliString& o,
                                          const NoiseModel& nm, std::size_t n_trajectories,
                                          std::uint64_t seed) {
    check_native(native);
    check_cap(native.n_qubits(), kStatevectorQubitCap, "trajectory simulation");
    nm.validate(native.n_qubits());
    if (n_trajectories == 0) {
        throw std::invalid_argument("trajectory count must be positive");
    }
    Program prog = compile_program(native);
    std::vector<double> p_at = cz_probabilities(prog, nm);
    std::vector<std::uint8_t> pattern(p_at.size());
    std::vector<std::uint8_t> none(p_at.size(), 0);
    const double ideal = run_trajectory(prog, none).expectation(o);
    Rng rng(seed);
    double sum = 0;
    double sum_sq = 0;
    for (std::size_t t = 0; t < n_trajectories; t++) {
        double v = draw_errors(p_at, rng, pattern) ? run_trajectory(prog, pattern).expectation(o)
                                                   : ideal;
        sum += v;
        sum_sq += v * v;
    }
    TrajectoryEstimate est;
    const auto n = static_cast<double>(n_trajectories);
    est.mean = sum / n;
    if (n_trajectories > 1) {
        double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1));
        est.standard_error = std::sqrt(var / n);
    }
    return est;
}

double noisy_expectation(const Circuit& native, const PauliString& o, const NoiseModel& nm,
                         const NoisyOptions& opts) {
    if (opts.mode == NoisyMode::ChannelExact) {
        return simulate_density(native, nm).expectation(o);
    }
    return trajectory_expectation(native, o, nm, opts.trajectories, opts.seed).mean;
}

namespace {

// Plain dense density matrix for the branch expansion; deliberately shares no kernels with
// DensityMatrix so the two can check each other.
struct DenseRho {
    std::size_t n;
    std::size_t dim;
    std::vector<cplx> m;

    cplx& at(std::size_t r, std::size_t c) { return m[r * dim + c]; }

    void unitary_1q(std::uint32_t q, const Mat2& u) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t c = 0; c < dim; c++) {
            for (std::size_t r = 0; r < dim; r++) {
                if (r & bit) {
                    continue;
                }
                cplx a0 = at(r, c);
                cplx a1 = at(r | bit, c);
                at(r, c) = u(0, 0) * a0 + u(0, 1) * a1;
                at(r | bit, c) = u(1, 0) * a0 + u(1, 1) * a1;
            }
        }
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                if (c & bit) {
                    continue;
                }
                cplx a0 = at(r, c);
                cplx a1 = at(r, c | bit);
                at(r, c) = a0 * std::conj(u(0, 0)) + a1 * std::conj(u(0, 1));
                at(r, c | bit) = a0 * std::conj(u(1, 0)) + a1 * std::conj(u(1, 1));
            }
        }
    }

    void cz(std::uint32_t a, std::uint32_t b) {
        const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                double s = (((r & mask) == mask) ? -1.0 : 1.0) * (((c & mask) == mask) ? -1.0 : 1.0);
                at(r, c) *= s;
            }
        }
    }

    // rho -> Tr_ab(rho) (x) I/4.
    void full_depolarize(std::uint32_t a, std::uint32_t b) {
        const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
        std::vector<cplx> out(dim * dim, cplx(0));
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                if ((r & mask) != (c & mask)) {
                    continue;
                }
                // Contributes to every (r', c') with the same outside bits and equal ab bits.
                cplx v = at(r, c) / 4.0;
                std::size_t ro = r & ~mask;
                std::size_t co = c & ~mask;
                for (std::size_t s : {std::size_t{0}, std::size_t{1} << a, std::size_t{1} << b,
                                      mask}) {
                    out[(ro | s) * dim + (co | s)] += v;
                }
            }
        }
        m.swap(out);
    }

    double expectation(const PauliString& p) {
        std::uint64_t x = p.x_mask();
        std::uint64_t z = p.z_mask();
        cplx phase = i_power(static_cast<int>(p.y_count()));
        cplx total = 0;
        for (std::size_t c = 0; c < dim; c++) {
            double s = (std::popcount(c & z) & 1) ? -1.0 : 1.0;
            total += phase * s * at(c, c ^ x);
        }
        return total.real();
    }
};

}  // namespace

double branch_oracle(const Circuit& native, const PauliString& o, double p, int r) {
    check_native(native);
    if (r < 1 || r % 2 == 0) {
        throw std::invalid_argument("branch_oracle needs an odd positive noise level r");
    }
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    const std::size_t n_cz = gate_census(native).cz;
    if (n_cz > 12) {
        throw std::length_error("branch_oracle enumerates 2^N branches and is capped at N = 12; "
                                "circuit has " + std::to_string(n_cz) + " CZ gates");
    }
    check_cap(native.n_qubits(), 8, "branch_oracle");
    const double keep = std::pow(1 - p, r);
    const double lose = 1 - keep;

    DenseRho start{native.n_qubits(), std::size_t{1} << native.n_qubits(), {}};
    start.m.assign(start.dim * start.dim, cplx(0));
    start.at(0, 0) = 1;

    const auto& gates = native.gates();
    double total = 0;
    std::function<void(std::size_t, DenseRho, std::size_t)> walk = [&](std::size_t i, DenseRho rho,
                                                                       std::size_t m) {
        for (; i < gates.size(); i++) {
            const Gate& g = gates[i];
            if (g.kind != GateKind::CZ) {
                rho.unitary_1q(g.qubits[0], single_qubit_matrix(g));
                continue;
            }
            DenseRho dep = rho;
            dep.full_depolarize(g.qubits[0], g.qubits[1]);
            walk(i + 1, std::move(dep), m + 1);
            rho.cz(g.qubits[0], g.qubits[1]);
        }
        double weight = std::pow(keep, static_cast<double>(n_cz - m)) *
                        std::pow(lose, static_cast<double>(m));
        total += weight * rho.expectation(o);
    };
    walk(0, start, 0);
    return total;
}

nlohmann::json ShotRecord::to_json() const {
    return {{"counts", counts}, {"n_shots", n_shots}, {"seed", seed}};
}

ShotRecord ShotRecord::from_json(const nlohmann::json& j) {
    ShotRecord sr;
    sr.counts = j.at("counts").get<std::map<std::string, std::size_t>>();
    sr.n_shots = j.at("n_shots").get<std::size_t>();
    sr.seed = j.value("seed", std::uint64_t{0});
    return sr;
}

std::string index_to_bits(std::size_t index, std::size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; q++) {
        if ((index >> q) & 1) {
            s[q] = '1';
        }
    }
    return s;
}

ShotRecord sample_shots(const Circuit& native, const NoiseModel& nm, std::size_t n_shots,
                        std::uint64_t seed) {
    check_native(native);
    check_cap(native.n_qubits(), kStatevectorQubitCap, "shot sampling");
    nm.validate(native.n_qubits());
    Program prog = compile_program(native);
    std::vector<double> p_at = cz_probabilities(prog, nm);
    std::vector<std::uint8_t> pattern(p_at.size());
    std::vector<std::uint8_t> none(p_at.size(), 0);
    const std::vector<double> ideal_cdf = cumulative(run_trajectory(prog, none).probabilities());
    Rng rng(seed);
    std::vector<std::size_t> hist(ideal_cdf.size(), 0);
    for (std::size_t s = 0; s < n_shots; s++) {
        std::size_t outcome;
        if (draw_errors(p_at, rng, pattern)) {
            outcome = draw_index(cumulative(run_trajectory(prog, pattern).probabilities()), rng);
        } else {
            outcome = draw_index(ideal_cdf, rng);
        }
        outcome = apply_readout_flips(outcome, nm.readout, rng);
        hist[outcome]++;
    }
    ShotRecord sr;
    sr.n_shots = n_shots;
    sr.seed = seed;
    for (std::size_t i = 0; i < hist.size(); i++) {
        if (hist[i]) {
            sr.counts[index_to_bits(i, native.n_qubits())] = hist[i];
        }
    }
    return sr;
}

OutcomeProbability outcome_prob(const ShotRecord& sr, std::size_t q) {
    std::size_t total = 0;
    std::size_t ones = 0;
    for (const auto& [bits, count] : sr.counts) {
        if (q >= bits.size()) {
            throw std::out_of_range("qubit " + std::to_string(q) + " outside a " +
                                    std::to_string(bits.size()) + "-bit record");
        }
        total += count;
        if (bits[q] == '1') {
            ones += count;
        }
    }
    if (total == 0) {
        throw std::invalid_argument("outcome_prob of an empty shot record");
    }
    OutcomeProbability out;
    out.p1 = static_cast<double>(ones) / static_cast<double>(total);
    out.p0 = 1 - out.p1;
    return out;
}

std::vector<double> apply_readout(std::vector<double> probs,
                                  const std::vector<ReadoutError>& readout) {
    for (std::size_t q = 0; q < readout.size(); q++) {
        const double e10 = readout[q].p1_given_0;
        const double e01 = readout[q].p0_given_1;
        if (e10 == 0 && e01 == 0) {
            continue;
        }
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t j = 0; j < probs.size(); j++) {
            if (j & bit) {
                continue;
            }
            double p0 = probs[j];
            double p1 = probs[j | bit];
            probs[j] = (1 - e10) * p0 + e01 * p1;
            probs[j | bit] = e10 * p0 + (1 - e01) * p1;
        }
    }
    return probs;
}

std::vector<std::size_t> sample_counts(const std::vector<double>& probs, std::size_t n_shots,
                                       Rng& rng) {
    std::vector<double> cdf = cumulative(probs);
    std::vector<std::size_t> counts(probs.size(), 0);
    for (std::size_t s = 0; s < n_shots; s++) {
        counts[draw_index(cdf, rng)]++;
    }
    return counts;
}

}  // namespace benchmit
