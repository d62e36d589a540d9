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


#include "benchmit/models.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "benchmit/circuit_io.h"

namespace benchmit {

std::string_view model_kind_name(ModelKind k) {
    return k == ModelKind::KickedIsing ? "kicked_ising" : "heisenberg";
}

ModelKind model_kind_from_name(std::string_view name) {
    if (name == "kicked_ising") {
        return ModelKind::KickedIsing;
    }
    if (name == "heisenberg") {
        return ModelKind::Heisenberg;
    }
    throw std::invalid_argument("unknown model: " + std::string(name));
}

std::string_view trotter_order_name(TrotterOrder o) {
    return o == TrotterOrder::First ? "first" : "symmetric";
}

TrotterOrder trotter_order_from_name(std::string_view name) {
    if (name == "first") {
        return TrotterOrder::First;
    }
    if (name == "symmetric") {
        return TrotterOrder::Symmetric;
    }
    throw std::invalid_argument("unknown Trotter order: " + std::string(name));
}

void ModelParams::validate() const {
    if (n_trotter < 1) {
        throw std::invalid_argument("N_T must be at least 1");
    }
    for (double t : {theta1, theta2, theta3, theta4}) {
        if (!std::isfinite(t)) {
            throw std::invalid_argument("model angles must be finite");
        }
    }
    if (topology.n_qubits() == 0 || topology.edges().empty()) {
        throw std::invalid_argument("model needs a topology with at least one edge");
    }
}

std::vector<std::vector<Edge>> colored_edge_groups(const Topology& t) {
    std::vector<Edge> edges = t.edges();
    std::sort(edges.begin(), edges.end());
    std::vector<std::set<std::uint32_t>> used;
    std::vector<std::vector<Edge>> groups;
    for (const Edge& e : edges) {
        std::size_t c = 0;
        while (c < used.size() && (used[c].count(e.first) || used[c].count(e.second))) {
            c++;
        }
        if (c == used.size()) {
            used.emplace_back();
            groups.emplace_back();
        }
        used[c].insert(e.first);
        used[c].insert(e.second);
        groups[c].push_back(e);
    }
    return groups;
}

std::vector<Edge> colored_edge_order(const Topology& t) {
    std::vector<Edge> out;
    for (const auto& g : colored_edge_groups(t)) {
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

namespace {

void append_site_layer(Circuit& c, std::size_t n, const std::vector<Pauli>& time_order,
                       double theta) {
    for (std::size_t q = 0; q < n; q++) {
        for (Pauli p : time_order) {
            c.append(Gate::rot(static_cast<std::uint32_t>(q), p, Angle::radians(theta)));
        }
    }
}

void append_edge_layer(Circuit& c, const std::vector<Edge>& edges,
                       const std::vector<Pauli>& time_order, double theta) {
    for (const Edge& e : edges) {
        for (Pauli p : time_order) {
            c.append(Gate::rot2(e.first, p, e.second, p, Angle::radians(theta)));
        }
    }
}

// Symmetric edge layer for non-commuting edge terms: colors 0..k-2 at half angle, color k-1 at
// full angle, then colors k-2..0 at half angle.
void append_palindromic_edges(Circuit& c, const std::vector<std::vector<Edge>>& groups,
                              const std::vector<Pauli>& time_order, double theta) {
    const std::size_t k = groups.size();
    for (std::size_t g = 0; g + 1 < k; g++) {
        append_edge_layer(c, groups[g], time_order, theta / 2);
    }
    append_edge_layer(c, groups[k - 1], time_order, theta);
    std::vector<Pauli> reversed(time_order.rbegin(), time_order.rend());
    for (std::size_t g = k - 1; g-- > 0;) {
        append_edge_layer(c, groups[g], reversed, theta / 2);
    }
}

Circuit build_layers(const ModelParams& p, const std::vector<Pauli>& site_order, double site_theta,
                     const std::vector<Pauli>& edge_order, double edge_theta) {
    p.validate();
    const std::size_t n = p.topology.n_qubits();
    const auto groups = colored_edge_groups(p.topology);
    const auto edges = colored_edge_order(p.topology);
    // Edge terms sharing one Pauli letter commute, so their layer is already symmetric.
    const bool commuting_edges = edge_order.size() == 1;
    Circuit c(n, Level::Logical);
    std::vector<Pauli> site_reversed(site_order.rbegin(), site_order.rend());
    for (std::size_t step = 0; step < p.n_trotter; step++) {
        c.mark_layer();
        if (p.order == TrotterOrder::First) {
            append_site_layer(c, n, site_order, site_theta);
            append_edge_layer(c, edges, edge_order, edge_theta);
        } else {
            append_site_layer(c, n, site_order, site_theta / 2);
            if (commuting_edges) {
                append_edge_layer(c, edges, edge_order, edge_theta);
            } else {
                append_palindromic_edges(c, groups, edge_order, edge_theta);
            }
            append_site_layer(c, n, site_reversed, site_theta / 2);
        }
    }
    return c;
}

}  // namespace

Circuit build_kicked_ising(const ModelParams& p) {
    if (p.model != ModelKind::KickedIsing) {
        throw std::invalid_argument("build_kicked_ising needs model kicked_ising");
    }
    return build_layers(p, {Pauli::X}, p.theta1, {Pauli::Z}, p.theta2);
}

Circuit build_heisenberg(const ModelParams& p) {
    if (p.model != ModelKind::Heisenberg) {
        throw std::invalid_argument("build_heisenberg needs model heisenberg");
    }
    return build_layers(p, {Pauli::Z, Pauli::X}, p.theta3, {Pauli::Z, Pauli::Y, Pauli::X},
                        p.theta4);
}

Circuit build_model(const ModelParams& p) {
    return p.model == ModelKind::KickedIsing ? build_kicked_ising(p) : build_heisenberg(p);
}

double connected_correlator(double zz, double z_i, double z_j) { return zz - z_i * z_j; }

CorrelatorTable correlator_table(const std::vector<double>& z,
                                 const std::vector<std::vector<double>>& zz) {
    if (zz.size() != z.size()) {
        throw std::invalid_argument("pair table needs one row per site");
    }
    CorrelatorTable t;
    for (std::size_t x = 0; x < z.size(); x++) {
        std::vector<double> row;
        for (std::size_t k = 0; k < zz[x].size(); k++) {
            const std::size_t j = x + k + 1;
            if (j >= z.size()) {
                throw std::invalid_argument("pair table reaches past the last site");
            }
            row.push_back(connected_correlator(zz[x][k], z[x], z[j]));
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

std::string CorrelatorTable::to_csv() const {
    std::ostringstream os;
    os << "x,y,value\n";
    for (std::size_t x = 0; x < values.size(); x++) {
        for (std::size_t k = 0; k < values[x].size(); k++) {
            os << x + 1 << ',' << k + 1 << ',' << format_real(values[x][k]) << '\n';
        }
    }
    return os.str();
}

DecayRateFit decay_rate(const std::vector<double>& row, std::size_t y_max, double floor) {
    if (y_max > row.size()) {
        throw std::invalid_argument("y_max exceeds the correlator row");
    }
    DecayRateFit fit;
    std::vector<double> ys;
    std::vector<double> ls;
    for (std::size_t k = 0; k < y_max; k++) {
        const double a = std::abs(row[k]);
        if (!(a >= floor)) {
            fit.excluded++;
            continue;
        }
        ys.push_back(static_cast<double>(k + 1));
        ls.push_back(-std::log(a));
    }
    if (ys.size() < 3) {
        throw std::invalid_argument("decay fit needs at least 3 correlators above the floor");
    }
    const double n = static_cast<double>(ys.size());
    double my = 0, ml = 0;
    for (std::size_t i = 0; i < ys.size(); i++) {
        my += ys[i];
        ml += ls[i];
    }
    my /= n;
    ml /= n;
    double syy = 0, syl = 0;
    for (std::size_t i = 0; i < ys.size(); i++) {
        syy += (ys[i] - my) * (ys[i] - my);
        syl += (ys[i] - my) * (ls[i] - ml);
    }
    fit.alpha = syl / syy;
    fit.used = ys.size();
    double rr = 0;
    for (std::size_t i = 0; i < ys.size(); i++) {
        const double d = ls[i] - (ml + fit.alpha * (ys[i] - my));
        rr += d * d;
    }
    fit.residual = std::sqrt(rr);
    return fit;
}

FidelityMetrics fidelity_metrics(const std::vector<double>& qem, const std::vector<double>& exact) {
    if (qem.empty() || qem.size() != exact.size()) {
        throw std::invalid_argument("fidelity metrics need equal-length non-empty inputs");
    }
    FidelityMetrics m;
    double ratio_sum = 0;
    std::size_t ratio_count = 0;
    double sq = 0;
    for (std::size_t i = 0; i < qem.size(); i++) {
        sq += (qem[i] - exact[i]) * (qem[i] - exact[i]);
        if (exact[i] == 0) {
            m.excluded++;
            continue;
        }
        ratio_sum += qem[i] / exact[i];
        ratio_count++;
    }
    m.fidelity = ratio_count ? ratio_sum / static_cast<double>(ratio_count)
                             : std::numeric_limits<double>::quiet_NaN();
    m.rmse = std::sqrt(sq / static_cast<double>(qem.size()));
    return m;
}

nlohmann::json FidelityMetrics::to_json() const {
    return {{"fidelity", fidelity}, {"rmse", rmse}, {"excluded", excluded}};
}

std::string decay_rates_csv(const std::vector<DecayRateFit>& fits) {
    std::ostringstream os;
    os << "x,alpha_x\n";
    for (std::size_t x = 0; x < fits.size(); x++) {
        os << x + 1 << ',' << format_real(fits[x].alpha) << '\n';
    }
    return os.str();
}

}  // namespace benchmit
