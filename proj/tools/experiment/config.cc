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


#include "experiment/config.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace benchmit::experiment {

using nlohmann::json;

namespace {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string indexed(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) {
        throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
    }
}

void only_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    require_object(j, path);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) {
            std::string list;
            for (const auto& k : allowed) {
                list += list.empty() ? k : ", " + k;
            }
            throw ConfigError(join(path, it.key()), "unknown key (allowed: " + list + ")");
        }
    }
}

const json* member(const json& j, const std::string& key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

bool read_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) {
        throw ConfigError(path, "expected true or false");
    }
    return j.get<bool>();
}

double read_number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    return j.get<double>();
}

double read_probability(const json& j, const std::string& path) {
    double p = read_number(j, path);
    if (!(p >= 0 && p <= 1)) {
        throw ConfigError(path, "probability must lie in [0, 1]");
    }
    return p;
}

std::uint64_t read_uint(const json& j, const std::string& path) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        return j.get<std::uint64_t>();
    }
    throw ConfigError(path, "expected a non-negative integer");
}

std::size_t read_positive(const json& j, const std::string& path) {
    std::uint64_t v = read_uint(j, path);
    if (v == 0) {
        throw ConfigError(path, "must be at least 1");
    }
    return static_cast<std::size_t>(v);
}

std::string read_string(const json& j, const std::string& path) {
    if (!j.is_string()) {
        throw ConfigError(path, "expected a string");
    }
    return j.get<std::string>();
}

template <typename F>
auto read_enum(const json& j, const std::string& path, F parse) {
    std::string s = read_string(j, path);
    try {
        return parse(s);
    } catch (const std::exception& e) {
        throw ConfigError(path, e.what());
    }
}

TranspilePath path_from_name(const std::string& s) {
    if (s == "rigid") {
        return TranspilePath::Rigid;
    }
    if (s == "compact") {
        return TranspilePath::Compact;
    }
    throw std::invalid_argument("unknown transpile path '" + s + "' (expected rigid|compact)");
}

std::string_view path_name(TranspilePath p) {
    return p == TranspilePath::Rigid ? "rigid" : "compact";
}

ObservableKind observable_kind_from_name(const std::string& s) {
    if (s == "explicit") {
        return ObservableKind::Explicit;
    }
    if (s == "single_z") {
        return ObservableKind::SingleZ;
    }
    if (s == "center_z") {
        return ObservableKind::CenterZ;
    }
    if (s == "correlators") {
        return ObservableKind::Correlators;
    }
    throw std::invalid_argument("unknown observable kind '" + s +
                                "' (expected explicit|single_z|center_z|correlators)");
}

std::string_view observable_kind_name(ObservableKind k) {
    switch (k) {
        case ObservableKind::Explicit:
            return "explicit";
        case ObservableKind::SingleZ:
            return "single_z";
        case ObservableKind::CenterZ:
            return "center_z";
        case ObservableKind::Correlators:
            return "correlators";
    }
    return "";
}

BackendMode backend_from_name(const std::string& s) {
    if (s == "channel_exact") {
        return BackendMode::ChannelExact;
    }
    if (s == "trajectories") {
        return BackendMode::Trajectories;
    }
    if (s == "density_sampling") {
        return BackendMode::DensitySampling;
    }
    throw std::invalid_argument("unknown backend mode '" + s +
                                "' (expected channel_exact|trajectories|density_sampling)");
}

SigmaEstimator sigma_from_name(const std::string& s) {
    if (s == "twirl_spread") {
        return SigmaEstimator::TwirlSpread;
    }
    if (s == "instance_spread") {
        return SigmaEstimator::InstanceSpread;
    }
    throw std::invalid_argument("unknown sigma estimator '" + s +
                                "' (expected twirl_spread|instance_spread)");
}

FitKind fit_from_name(const std::string& s) {
    return fit_kind_from_name(s);
}

std::vector<int> read_levels(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw ConfigError(path, "expected an array of odd noise levels");
    }
    std::vector<int> levels;
    for (std::size_t i = 0; i < j.size(); i++) {
        levels.push_back(static_cast<int>(read_positive(j[i], indexed(path, i))));
    }
    ZneConfig probe;
    probe.levels = levels;
    try {
        probe.validate();
    } catch (const std::exception& e) {
        throw ConfigError(path, e.what());
    }
    return levels;
}

MethodConfig read_method(const json& j, const std::string& path, bool ic, IcVariant* variant) {
    std::set<std::string> keys{"enabled", "fit", "levels"};
    if (ic) {
        keys.insert("variant");
    }
    only_keys(j, path, keys);
    MethodConfig m;
    if (auto* v = member(j, "enabled")) {
        m.enabled = read_bool(*v, join(path, "enabled"));
    }
    if (auto* v = member(j, "fit")) {
        m.fit = read_enum(*v, join(path, "fit"), fit_from_name);
    }
    if (auto* v = member(j, "levels")) {
        m.levels = read_levels(*v, join(path, "levels"));
    }
    if (ic) {
        if (auto* v = member(j, "variant")) {
            *variant = read_enum(*v, join(path, "variant"),
                                 [](const std::string& s) { return ic_variant_from_name(s); });
        }
    }
    return m;
}

Topology read_topology(const json& j, const std::string& path) {
    only_keys(j, path, {"shape", "n_qubits", "edges"});
    TopologyShape shape = TopologyShape::LinearChain;
    if (auto* v = member(j, "shape")) {
        shape = read_enum(*v, join(path, "shape"), topology_shape_from_name);
    }
    const json* n = member(j, "n_qubits");
    if (!n) {
        throw ConfigError(join(path, "n_qubits"), "required");
    }
    std::size_t nq = read_positive(*n, join(path, "n_qubits"));
    const json* e = member(j, "edges");
    if (shape == TopologyShape::LinearChain) {
        if (e) {
            throw ConfigError(join(path, "edges"), "a linear_chain topology takes no edge list");
        }
        return Topology::linear_chain(nq);
    }
    if (!e || !e->is_array()) {
        throw ConfigError(join(path, "edges"), "required: an array of [a, b] qubit pairs");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < e->size(); i++) {
        const json& pair = (*e)[i];
        const std::string p = join(path, "edges") + "[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            throw ConfigError(p, "expected a pair of qubit indices");
        }
        auto a = read_uint(pair[0], indexed(p, 0));
        auto b = read_uint(pair[1], indexed(p, 1));
        if (a >= nq || b >= nq || a == b) {
            throw ConfigError(p, "edge must join two distinct qubits below n_qubits");
        }
        edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
    try {
        Topology t(nq, std::move(edges), shape);
        if (!t.connected()) {
            throw std::invalid_argument("coupling graph is not connected");
        }
        return t;
    } catch (const std::exception& ex) {
        throw ConfigError(join(path, "edges"), ex.what());
    }
}

ReadoutError read_readout_entry(const json& j, const std::string& path) {
    only_keys(j, path, {"p1_given_0", "p0_given_1"});
    ReadoutError r;
    if (auto* v = member(j, "p1_given_0")) {
        r.p1_given_0 = read_probability(*v, join(path, "p1_given_0"));
    }
    if (auto* v = member(j, "p0_given_1")) {
        r.p0_given_1 = read_probability(*v, join(path, "p0_given_1"));
    }
    return r;
}

NoiseModel read_noise(const json& j, const std::string& path, const Topology& t) {
    only_keys(j, path, {"p2q", "per_edge", "readout"});
    NoiseModel nm;
    if (auto* v = member(j, "p2q")) {
        nm.p2q = read_probability(*v, join(path, "p2q"));
    }
    if (auto* v = member(j, "per_edge")) {
        const std::string p = join(path, "per_edge");
        if (!v->is_array()) {
            throw ConfigError(p, "expected an array of {edge, p} entries");
        }
        for (std::size_t i = 0; i < v->size(); i++) {
            const std::string pi = indexed(p, i);
            only_keys((*v)[i], pi, {"edge", "p"});
            const json* e = member((*v)[i], "edge");
            const json* pr = member((*v)[i], "p");
            if (!e || !e->is_array() || e->size() != 2) {
                throw ConfigError(join(pi, "edge"), "expected a pair of qubit indices");
            }
            if (!pr) {
                throw ConfigError(join(pi, "p"), "required");
            }
            auto a = static_cast<std::uint32_t>(read_uint((*e)[0], indexed(join(pi, "edge"), 0)));
            auto b = static_cast<std::uint32_t>(read_uint((*e)[1], indexed(join(pi, "edge"), 1)));
            if (!t.has_edge(a, b)) {
                throw ConfigError(join(pi, "edge"), "not an edge of the topology");
            }
            nm.per_edge[{std::min(a, b), std::max(a, b)}] = read_probability(*pr, join(pi, "p"));
        }
    }
    if (auto* v = member(j, "readout")) {
        const std::string p = join(path, "readout");
        if (v->is_object()) {
            nm.readout.assign(t.n_qubits(), read_readout_entry(*v, p));
        } else if (v->is_array()) {
            if (v->size() != t.n_qubits()) {
                throw ConfigError(p, "per-qubit readout list needs one entry per qubit");
            }
            for (std::size_t i = 0; i < v->size(); i++) {
                nm.readout.push_back(read_readout_entry((*v)[i], indexed(p, i)));
            }
        } else {
            throw ConfigError(p, "expected an object or a per-qubit array");
        }
    }
    return nm;
}

}  // namespace

std::string_view backend_mode_name(BackendMode m) {
    switch (m) {
        case BackendMode::ChannelExact:
            return "channel_exact";
        case BackendMode::Trajectories:
            return "trajectories";
        case BackendMode::DensitySampling:
            return "density_sampling";
    }
    return "";
}

std::string_view sigma_estimator_name(SigmaEstimator s) {
    return s == SigmaEstimator::TwirlSpread ? "twirl_spread" : "instance_spread";
}

std::vector<int> ExperimentConfig::level_union() const {
    std::set<int> all;
    for (const MethodConfig* m : {&zne, &bnzne, &iczne}) {
        if (m->enabled) {
            all.insert(m->levels.begin(), m->levels.end());
        }
    }
    return {all.begin(), all.end()};
}

std::vector<PauliString> ExperimentConfig::observable_list() const {
    const std::size_t n = n_qubits();
    std::vector<PauliString> out;
    switch (observables.kind) {
        case ObservableKind::Explicit:
            for (const auto& s : observables.paulis) {
                out.push_back(PauliString::parse(s));
            }
            break;
        case ObservableKind::CenterZ:
            out.push_back(PauliString::single(n, model.topology.center(), Pauli::Z));
            break;
        case ObservableKind::SingleZ:
        case ObservableKind::Correlators:
            for (std::size_t q = 0; q < n; q++) {
                out.push_back(PauliString::single(n, q, Pauli::Z));
            }
            if (observables.kind == ObservableKind::Correlators) {
                for (std::size_t x = 0; x < n; x++) {
                    for (std::size_t y = 1; y <= observables.y_max && x + y < n; y++) {
                        PauliString p(n);
                        p.set(x, Pauli::Z);
                        p.set(x + y, Pauli::Z);
                        out.push_back(p);
                    }
                }
            }
            break;
    }
    return out;
}

ZneConfig ExperimentConfig::zne_config(const MethodConfig& m) const {
    ZneConfig z;
    z.levels = m.levels;
    z.fit = m.fit;
    z.twirls_per_level = twirl ? twirl_instances : 0;
    z.shots_per_circuit = backend == BackendMode::ChannelExact ? 0 : shots;
    z.average = average;
    z.dd = dd;
    z.trex = trex;
    return z;
}

ExperimentConfig parse_config(const json& j) {
    only_keys(j, "", {"name", "model", "topology", "transpile_path", "observables", "benchmark",
                      "mitigation", "noise", "backend", "seeds", "output"});
    ExperimentConfig c;
    if (auto* v = member(j, "name")) {
        c.name = read_string(*v, "name");
    }

    const json* topo = member(j, "topology");
    if (!topo) {
        throw ConfigError("topology", "required");
    }
    c.model.topology = read_topology(*topo, "topology");

    if (auto* m = member(j, "model")) {
        only_keys(*m, "model",
                  {"kind", "theta1", "theta2", "theta3", "theta4", "n_trotter", "trotter_order"});
        if (auto* v = member(*m, "kind")) {
            c.model.model = read_enum(*v, "model.kind",
                                      [](const std::string& s) { return model_kind_from_name(s); });
        }
        double* thetas[] = {&c.model.theta1, &c.model.theta2, &c.model.theta3, &c.model.theta4};
        for (int i = 0; i < 4; i++) {
            const std::string key = "theta" + std::to_string(i + 1);
            if (auto* v = member(*m, key)) {
                *thetas[i] = read_number(*v, "model." + key);
            }
        }
        if (auto* v = member(*m, "n_trotter")) {
            c.n_trotter.clear();
            if (v->is_array()) {
                if (v->empty()) {
                    throw ConfigError("model.n_trotter", "needs at least one value");
                }
                for (std::size_t i = 0; i < v->size(); i++) {
                    c.n_trotter.push_back(read_positive((*v)[i], indexed("model.n_trotter", i)));
                }
            } else {
                c.n_trotter.push_back(read_positive(*v, "model.n_trotter"));
            }
            std::set<std::size_t> seen(c.n_trotter.begin(), c.n_trotter.end());
            if (seen.size() != c.n_trotter.size()) {
                throw ConfigError("model.n_trotter", "values must be distinct");
            }
        }
        if (auto* v = member(*m, "trotter_order")) {
            c.model.order = read_enum(*v, "model.trotter_order", [](const std::string& s) {
                return trotter_order_from_name(s);
            });
        }
    }
    c.model.n_trotter = c.n_trotter.front();
    try {
        c.model.validate();
    } catch (const std::exception& e) {
        throw ConfigError("model", e.what());
    }

    if (auto* v = member(j, "transpile_path")) {
        c.path = read_enum(*v, "transpile_path", path_from_name);
    }

    if (auto* o = member(j, "observables")) {
        only_keys(*o, "observables", {"kind", "paulis", "y_max"});
        if (auto* v = member(*o, "kind")) {
            c.observables.kind = read_enum(*v, "observables.kind", observable_kind_from_name);
        }
        if (auto* v = member(*o, "paulis")) {
            if (c.observables.kind != ObservableKind::Explicit) {
                throw ConfigError("observables.paulis", "only valid with kind 'explicit'");
            }
            if (!v->is_array()) {
                throw ConfigError("observables.paulis", "expected an array of Pauli strings");
            }
            for (std::size_t i = 0; i < v->size(); i++) {
                const std::string p = indexed("observables.paulis", i);
                std::string s = read_string((*v)[i], p);
                PauliString ps;
                try {
                    ps = PauliString::parse(s);
                } catch (const std::exception& e) {
                    throw ConfigError(p, e.what());
                }
                if (ps.size() != c.n_qubits()) {
                    throw ConfigError(p, "length must equal topology.n_qubits");
                }
                if (ps.weight() == 0) {
                    throw ConfigError(p, "identity observable carries no information");
                }
                c.observables.paulis.push_back(ps.str());
            }
        }
        if (auto* v = member(*o, "y_max")) {
            if (c.observables.kind != ObservableKind::Correlators) {
                throw ConfigError("observables.y_max", "only valid with kind 'correlators'");
            }
            c.observables.y_max = read_positive(*v, "observables.y_max");
            if (c.observables.y_max >= c.n_qubits()) {
                throw ConfigError("observables.y_max", "must be below topology.n_qubits");
            }
        }
    }
    if (c.observables.kind == ObservableKind::Explicit && c.observables.paulis.empty()) {
        throw ConfigError("observables.paulis", "required for kind 'explicit'");
    }
    if (c.observables.kind == ObservableKind::Correlators && c.observables.y_max == 0) {
        throw ConfigError("observables.y_max", "required for kind 'correlators'");
    }

    if (auto* b = member(j, "benchmark")) {
        only_keys(*b, "benchmark", {"generator", "instances", "single_pair"});
        if (auto* v = member(*b, "generator")) {
            c.generator = read_enum(*v, "benchmark.generator", generator_from_name);
        }
        if (auto* v = member(*b, "instances")) {
            c.instances = read_positive(*v, "benchmark.instances");
        }
        if (auto* v = member(*b, "single_pair")) {
            c.single_pair = read_bool(*v, "benchmark.single_pair");
        }
    }
    if (c.generator == GeneratorKind::Entangling) {
        for (std::size_t nt : c.n_trotter) {
            if (nt % 2 != 0 && !c.single_pair) {
                throw ConfigError("model.n_trotter",
                                  "entangling benchmarks mirror half the Trotter steps; N_T=" +
                                      std::to_string(nt) +
                                      " is odd (use even values or benchmark.single_pair)");
            }
        }
        for (const auto& o : c.observable_list()) {
            if (!o.is_diagonal()) {
                throw ConfigError("benchmark.generator",
                                  "entangling benchmarks need diagonal observables, got " + o.str());
            }
        }
    }

    if (auto* m = member(j, "mitigation")) {
        only_keys(*m, "mitigation",
                  {"zne", "bnzne", "iczne", "bias_mitigation", "select_fit", "guard",
                   "pauli_twirling", "dd", "trex", "sigma_estimator"});
        if (auto* v = member(*m, "zne")) {
            c.zne = read_method(*v, "mitigation.zne", false, nullptr);
        }
        if (auto* v = member(*m, "bnzne")) {
            c.bnzne = read_method(*v, "mitigation.bnzne", false, nullptr);
        }
        if (auto* v = member(*m, "iczne")) {
            c.iczne = read_method(*v, "mitigation.iczne", true, &c.ic_variant);
        }
        if (auto* v = member(*m, "bias_mitigation")) {
            c.bias_mitigation = read_bool(*v, "mitigation.bias_mitigation");
        }
        if (auto* v = member(*m, "select_fit")) {
            c.select_fit = read_bool(*v, "mitigation.select_fit");
        }
        if (auto* v = member(*m, "guard")) {
            c.guard = read_number(*v, "mitigation.guard");
            if (!(c.guard > 0 && c.guard < 1)) {
                throw ConfigError("mitigation.guard", "must lie in (0, 1)");
            }
        }
        if (auto* pt = member(*m, "pauli_twirling")) {
            const std::string p = "mitigation.pauli_twirling";
            only_keys(*pt, p, {"enabled", "instances", "average"});
            if (auto* v = member(*pt, "enabled")) {
                c.twirl = read_bool(*v, p + ".enabled");
            }
            if (auto* v = member(*pt, "instances")) {
                c.twirl_instances = read_positive(*v, p + ".instances");
            }
            if (auto* v = member(*pt, "average")) {
                c.average = read_enum(*v, p + ".average",
                                      [](const std::string& s) { return average_mode_from_name(s); });
            }
        }
        if (auto* v = member(*m, "dd")) {
            c.dd = read_bool(*v, "mitigation.dd");
        }
        if (auto* t = member(*m, "trex")) {
            only_keys(*t, "mitigation.trex", {"enabled", "calibration_masks"});
            if (auto* v = member(*t, "enabled")) {
                c.trex = read_bool(*v, "mitigation.trex.enabled");
            }
            if (auto* v = member(*t, "calibration_masks")) {
                c.trex_masks = read_positive(*v, "mitigation.trex.calibration_masks");
            }
        }
        if (auto* v = member(*m, "sigma_estimator")) {
            c.sigma_estimator = read_enum(*v, "mitigation.sigma_estimator", sigma_from_name);
        }
    }
    if (!c.zne.enabled && !c.bnzne.enabled && !c.iczne.enabled) {
        throw ConfigError("mitigation", "enable at least one of zne, bnzne, iczne");
    }
    if (c.sigma_estimator == SigmaEstimator::InstanceSpread && c.instances < 2) {
        throw ConfigError("mitigation.sigma_estimator",
                          "instance_spread needs benchmark.instances >= 2");
    }

    if (auto* v = member(j, "noise")) {
        c.noise = read_noise(*v, "noise", c.model.topology);
    }

    if (auto* b = member(j, "backend")) {
        only_keys(*b, "backend", {"mode", "shots"});
        if (auto* v = member(*b, "mode")) {
            c.backend = read_enum(*v, "backend.mode", backend_from_name);
        }
        if (auto* v = member(*b, "shots")) {
            c.shots = read_positive(*v, "backend.shots");
        }
    }
    if (auto* s = member(j, "seeds")) {
        only_keys(*s, "seeds", {"base"});
        if (auto* v = member(*s, "base")) {
            c.seed = read_uint(*v, "seeds.base");
        }
    }
    if (auto* o = member(j, "output")) {
        only_keys(*o, "output", {"directory"});
        if (auto* v = member(*o, "directory")) {
            c.output_dir = read_string(*v, "output.directory");
            if (c.output_dir.empty()) {
                throw ConfigError("output.directory", "must not be empty");
            }
        }
    }
    return c;
}

ExperimentConfig load_config(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        throw ConfigError("<file>", "cannot open '" + file + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

json config_to_json(const ExperimentConfig& c) {
    auto method = [](const MethodConfig& m) {
        return json{{"enabled", m.enabled},
                    {"fit", fit_kind_name(m.fit)},
                    {"levels", m.levels}};
    };
    json topo = {{"shape", topology_shape_name(c.model.topology.shape())},
                 {"n_qubits", c.n_qubits()}};
    if (c.model.topology.shape() != TopologyShape::LinearChain) {
        json edges = json::array();
        for (const Edge& e : c.model.topology.edges()) {
            edges.push_back({e.first, e.second});
        }
        topo["edges"] = edges;
    }
    json obs = {{"kind", observable_kind_name(c.observables.kind)}};
    if (c.observables.kind == ObservableKind::Explicit) {
        obs["paulis"] = c.observables.paulis;
    }
    if (c.observables.kind == ObservableKind::Correlators) {
        obs["y_max"] = c.observables.y_max;
    }
    json iczne = method(c.iczne);
    iczne["variant"] = ic_variant_name(c.ic_variant);
    json noise = {{"p2q", c.noise.p2q}};
    if (!c.noise.per_edge.empty()) {
        json pe = json::array();
        for (const auto& [e, p] : c.noise.per_edge) {
            pe.push_back({{"edge", {e.first, e.second}}, {"p", p}});
        }
        noise["per_edge"] = pe;
    }
    if (!c.noise.readout.empty()) {
        json ro = json::array();
        for (const auto& r : c.noise.readout) {
            ro.push_back({{"p1_given_0", r.p1_given_0}, {"p0_given_1", r.p0_given_1}});
        }
        noise["readout"] = ro;
    }
    return {
        {"name", c.name},
        {"model",
         {{"kind", model_kind_name(c.model.model)},
          {"theta1", c.model.theta1},
          {"theta2", c.model.theta2},
          {"theta3", c.model.theta3},
          {"theta4", c.model.theta4},
          {"n_trotter", c.n_trotter},
          {"trotter_order", trotter_order_name(c.model.order)}}},
        {"topology", topo},
        {"transpile_path", path_name(c.path)},
        {"observables", obs},
        {"benchmark",
         {{"generator", generator_name(c.generator)},
          {"instances", c.instances},
          {"single_pair", c.single_pair}}},
        {"mitigation",
         {{"zne", method(c.zne)},
          {"bnzne", method(c.bnzne)},
          {"iczne", iczne},
          {"bias_mitigation", c.bias_mitigation},
          {"select_fit", c.select_fit},
          {"guard", c.guard},
          {"pauli_twirling",
           {{"enabled", c.twirl},
            {"instances", c.twirl_instances},
            {"average", average_mode_name(c.average)}}},
          {"dd", c.dd},
          {"trex", {{"enabled", c.trex}, {"calibration_masks", c.trex_masks}}},
          {"sigma_estimator", sigma_estimator_name(c.sigma_estimator)}}},
        {"noise", noise},
        {"backend", {{"mode", backend_mode_name(c.backend)}, {"shots", c.shots}}},
        {"seeds", {{"base", c.seed}}},
        {"output", {{"directory", c.output_dir}}},
    };
}

std::string config_hash(const ExperimentConfig& c) {
    json j = config_to_json(c);
    j.erase("output");
    const std::string text = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace benchmit::experiment
