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


#include "experiment/report.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "benchmit/circuit_io.h"
#include "benchmit/models.h"
#include "benchmit/pauli.h"
#include "experiment/config.h"
#include "experiment/runner.h"

namespace benchmit::experiment {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& id : ids) {
        s += s.empty() ? id : ", " + id;
    }
    return s;
}

std::string cell(const json& v) {
    return v.is_null() ? std::string() : format_real(v.get<double>());
}

void write_file(const fs::path& file, const std::string& text) {
    std::ofstream out(file);
    if (!out) {
        throw ExecutionError("cannot write '" + file.string() + "'");
    }
    out << text;
}

/// Single-site and pair values of one method, keyed by 0-based sites.
struct MethodValues {
    std::map<std::size_t, double> z;
    std::map<std::pair<std::size_t, std::size_t>, double> zz;
};

std::map<std::string, MethodValues> collect(const json& job, std::size_t& n, std::size_t& y_max) {
    std::map<std::string, MethodValues> out;
    for (const json& obs : job.at("observables")) {
        const PauliString p = PauliString::parse(obs.at("pauli").get<std::string>());
        n = p.size();
        const auto supp = p.support();
        bool all_z = true;
        for (std::size_t q : supp) {
            all_z = all_z && p[q] == Pauli::Z;
        }
        if (!all_z || supp.empty() || supp.size() > 2) {
            continue;
        }
        auto put = [&](const std::string& method, double v) {
            if (supp.size() == 1) {
                out[method].z[supp[0]] = v;
            } else {
                out[method].zz[{supp[0], supp[1]}] = v;
                y_max = std::max(y_max, supp[1] - supp[0]);
            }
        };
        put("exact", obs.at("exact").get<double>());
        for (auto it = obs.at("methods").begin(); it != obs.at("methods").end(); ++it) {
            const json& v = it.value().at("value");
            if (!v.is_null()) {
                put(it.key(), v.get<double>());
            }
        }
    }
    return out;
}

/// Correlator table over sites with a complete row of y_max distances (shorter rows near the
/// end of the register are kept when every available distance is present).
std::optional<CorrelatorTable> table_for(const MethodValues& mv, std::size_t n,
                                         std::size_t y_max) {
    if (mv.z.size() != n || y_max == 0) {
        return std::nullopt;
    }
    std::vector<double> z(n);
    std::vector<std::vector<double>> zz(n);
    for (std::size_t x = 0; x < n; x++) {
        z[x] = mv.z.at(x);
        for (std::size_t y = 1; y <= y_max && x + y < n; y++) {
            auto it = mv.zz.find({x, x + y});
            if (it == mv.zz.end()) {
                return std::nullopt;
            }
            zz[x].push_back(it->second);
        }
    }
    return correlator_table(z, zz);
}

}  // namespace

IncompleteBundle::IncompleteBundle(std::vector<std::string> missing)
    : std::runtime_error("bundle is incomplete; missing jobs: " + join_ids(missing) +
                         " (run `benchmit run` with the same config to resume)"),
      missing_(std::move(missing)) {}

ReportFiles write_report(const json& results, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    ReportFiles rf;
    rf.dir = out_dir;

    std::ostringstream fid;
    std::ostringstream rmse;
    fid << "N_T,method,fidelity,sigma\n";
    rmse << "N_T,method,rmse\n";
    for (const json& m : results.at("metrics")) {
        const std::string nt = std::to_string(m.at("n_trotter").get<std::size_t>());
        const std::string name = m.at("method").get<std::string>();
        fid << nt << ',' << name << ',' << cell(m.at("fidelity")) << ','
            << cell(m.at("fidelity_sigma")) << '\n';
        rmse << nt << ',' << name << ',' << cell(m.at("rmse")) << '\n';
    }
    write_file(out_dir / "fidelity.csv", fid.str());
    write_file(out_dir / "rmse.csv", rmse.str());

    std::ostringstream corr;
    std::ostringstream decay;
    corr << "N_T,method,x,y,value\n";
    decay << "N_T,method,x,alpha_x\n";
    for (const json& job : results.at("jobs")) {
        const std::string nt = std::to_string(job.at("n_trotter").get<std::size_t>());
        std::size_t n = 0;
        std::size_t y_max = 0;
        const auto values = collect(job, n, y_max);
        std::vector<std::string> order{"exact"};
        order.insert(order.end(), kMethodOrder.begin(), kMethodOrder.end());
        for (const auto& [name, mv] : values) {
            if (std::find(order.begin(), order.end(), name) == order.end()) {
                order.push_back(name);
            }
        }
        for (const std::string& name : order) {
            auto it = values.find(name);
            if (it == values.end()) {
                continue;
            }
            const auto table = table_for(it->second, n, y_max);
            if (!table) {
                continue;
            }
            for (std::size_t x = 0; x < table->values.size(); x++) {
                const auto& row = table->values[x];
                for (std::size_t k = 0; k < row.size(); k++) {
                    corr << nt << ',' << name << ',' << x + 1 << ',' << k + 1 << ','
                         << format_real(row[k]) << '\n';
                }
                if (row.size() < y_max) {
                    continue;
                }
                try {
                    const DecayRateFit f = decay_rate(row, y_max);
                    decay << nt << ',' << name << ',' << x + 1 << ',' << format_real(f.alpha)
                          << '\n';
                } catch (const std::exception&) {
                    // Fewer than three distances clear the floor: no rate for this site.
                }
            }
        }
    }
    write_file(out_dir / "correlators.csv", corr.str());
    write_file(out_dir / "decay_rates.csv", decay.str());
    rf.files = {"correlators.csv", "decay_rates.csv", "fidelity.csv", "rmse.csv"};
    return rf;
}

ReportFiles report(const fs::path& dir) {
    if (!fs::exists(dir / "manifest.json")) {
        throw ExecutionError("'" + dir.string() +
                             "' is not a bundle directory (no manifest.json); pass the "
                             "out/<hash> directory written by `benchmit generate` or `run`");
    }
    json manifest;
    {
        std::ifstream in(dir / "manifest.json");
        manifest = json::parse(in);
    }
    std::vector<std::string> missing;
    for (const auto& id : manifest.at("jobs")) {
        if (!fs::exists(dir / "jobs" / (id.get<std::string>() + ".json"))) {
            missing.push_back(id.get<std::string>());
        }
    }
    if (!missing.empty()) {
        throw IncompleteBundle(missing);
    }
    json results;
    if (fs::exists(dir / "results.json")) {
        std::ifstream in(dir / "results.json");
        results = json::parse(in);
    } else {
        std::ifstream cin(dir / "config.json");
        const ExperimentConfig c = parse_config(json::parse(cin));
        std::vector<json> jobs;
        for (const auto& id : manifest.at("jobs")) {
            std::ifstream in(dir / "jobs" / (id.get<std::string>() + ".json"));
            jobs.push_back(json::parse(in));
        }
        results = assemble_results(c, jobs);
    }
    return write_report(results, dir / "report");
}

}  // namespace benchmit::experiment
