// Copyright 2026-present the sparse-iht authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include "check_suite.hpp"
#include "sparse_iht/errors.hpp"
#include "sparse_iht/escape_lab.hpp"
#include "sparse_iht/iht_engine.hpp"
#include "sparse_iht/instance_io.hpp"
#include "sparse_iht/kernels.hpp"
#include "sparse_iht/stationary.hpp"

namespace sparse_iht::cli {
namespace {

using nlohmann::json;

std::string Num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string Fixed4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

void RequireFormat(const RunSpec& spec) {
    if (spec.format != "csv" && spec.format != "json" && spec.format != "table") {
        throw ConfigError("--format must be one of csv, json, table (got '" + spec.format + "')");
    }
}

// Writes all files or none: existing targets are checked up front.
void WriteOutputs(const RunSpec& spec, const std::vector<std::pair<std::string, std::string>>& files) {
    std::filesystem::create_directories(spec.out);
    if (!spec.overwrite) {
        for (const auto& [name, text] : files) {
            const auto path = spec.out / name;
            if (std::filesystem::exists(path)) {
                throw IoError("refusing to overwrite '" + path.string() + "' (pass --overwrite)");
            }
        }
    }
    for (const auto& [name, text] : files) {
        const auto path = spec.out / name;
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write '" + path.string() + "'");
        f << text;
        if (!f) throw IoError("write failed for '" + path.string() + "'");
    }
}

std::vector<double> ParseInlineList(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(cell, &used));
            while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse '" + cell + "' in x0");
        }
    }
    return v;
}

}  // namespace

void apply_config(RunSpec& spec, const std::string& json_text, const std::set<std::string>& explicit_flags) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw IoError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
    if (!doc.contains("version") || doc.at("version") != 1) {
        throw ConfigError("config: missing or unsupported \"version\" (expected 1)");
    }
    auto take = [&](const char* key, auto& field) {
        if (!doc.contains(key) || explicit_flags.count(key)) return;
        try {
            field = doc.at(key).get<std::remove_reference_t<decltype(field)>>();
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config: bad value for \"") + key + "\": " + e.what());
        }
    };
    for (const auto& [key, value] : doc.items()) {
        static const std::set<std::string> known{"version", "instance", "s",        "gamma",   "seed",
                                                 "runs",    "steps",    "sigma",    "basin_tol", "max_iters",
                                                 "conv_tol", "x0",      "threads",  "out",     "overwrite",
                                                 "format"};
        if (!known.count(key)) throw ConfigError("config: unknown key \"" + key + "\"");
    }
    take("instance", spec.instance);
    take("s", spec.s);
    if (doc.contains("gamma") && !explicit_flags.count("gamma")) {
        const auto& g = doc.at("gamma");
        spec.gamma = g.is_string() ? g.get<std::string>() : Num(g.get<double>());
    }
    take("seed", spec.seed);
    take("runs", spec.runs);
    take("steps", spec.steps);
    take("sigma", spec.sigma);
    take("basin_tol", spec.basin_tol);
    take("max_iters", spec.max_iters);
    take("conv_tol", spec.conv_tol);
    take("x0", spec.x0);
    take("threads", spec.threads);
    if (doc.contains("out") && !explicit_flags.count("out")) spec.out = doc.at("out").get<std::string>();
    take("overwrite", spec.overwrite);
    take("format", spec.format);
}

double resolve_gamma(const RunSpec& spec, const QuadraticInstance& q, const SparsityBudget& budget) {
    if (spec.gamma == "auto") return rss_constant(q, budget).max_stepsize();
    double g = 0.0;
    try {
        std::size_t used = 0;
        g = std::stod(spec.gamma, &used);
        if (used != spec.gamma.size()) throw std::invalid_argument(spec.gamma);
    } catch (const std::exception&) {
        throw ConfigError("--gamma must be a positive number or 'auto' (got '" + spec.gamma + "')");
    }
    if (!(g > 0.0) || !std::isfinite(g)) throw ConfigError("--gamma must be positive");
    return g;
}

DenseVector resolve_x0(const RunSpec& spec, const QuadraticInstance& q, const SparsityBudget& budget,
                       double gamma) {
    const std::string& src = spec.x0;
    if (src == "zero") return DenseVector::zeros(q.n());
    if (src.rfind("stationary:", 0) == 0) {
        const std::size_t id = std::stoul(src.substr(11));
        for (const auto& p : enumerate_stationary(q, budget, gamma)) {
            if (p.id == id) return p.point;
        }
        throw ConfigError("no stationary point with id " + std::to_string(id));
    }
    std::vector<double> v;
    if (std::filesystem::exists(src)) {
        const std::string text = read_text_file(src);
        if (std::filesystem::path(src).extension() == ".json") {
            try {
                v = json::parse(text).get<std::vector<double>>();
            } catch (const json::exception& e) {
                throw IoError(src + ": " + e.what());
            }
        } else {
            std::string joined;
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                if (!joined.empty()) joined += ",";
                joined += line;
            }
            v = ParseInlineList(joined);
        }
    } else {
        v = ParseInlineList(src);
    }
    if (v.size() != q.n()) {
        throw ConfigError("x0 has " + std::to_string(v.size()) + " entries, instance dimension is " +
                          std::to_string(q.n()));
    }
    return DenseVector(std::move(v));
}

int cmd_constants(const RunSpec& spec, std::ostream& out) {
    RequireFormat(spec);
    const QuadraticInstance q = resolve_instance(spec.instance);
    const SparsityBudget budget(spec.s, q.n());
    const RestrictedConstants c = rss_constant(q, budget);
    if (spec.format == "json") {
        json doc{{"instance", spec.instance},
                 {"m", q.m()},
                 {"n", q.n()},
                 {"s", budget.s()},
                 {"L_s", c.lipschitz},
                 {"inv_L_s", c.max_stepsize()},
                 {"support_size", c.support_size},
                 {"kernels", std::string(kernels::backend_name(kernels::active_backend()))}};
        doc["beta_s"] = c.convexity ? json(*c.convexity) : json(nullptr);
        doc["restricted_L_s"] = c.restricted_lipschitz ? json(*c.restricted_lipschitz) : json(nullptr);
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "instance: " << spec.instance << "\n"
        << "m: " << q.m() << "\n"
        << "n: " << q.n() << "\n"
        << "s: " << budget.s() << "\n"
        << "L_s: " << Num(c.lipschitz) << "\n"
        << "1/L_s: " << Num(c.max_stepsize()) << " (" << Fixed4(c.max_stepsize()) << ")\n";
    if (c.convexity) {
        out << "beta_s (|T|=" << c.support_size << "): " << Num(*c.convexity) << "\n"
            << "restricted L_s (|T|=" << c.support_size << "): " << Num(*c.restricted_lipschitz) << "\n";
    } else {
        out << "beta_s: not computed (n > " << kExhaustiveConstantsMaxDim << ")\n";
    }
    out << "kernels: " << kernels::backend_name(kernels::active_backend()) << "\n";
    return kOk;
}

int cmd_stationary(const RunSpec& spec, std::ostream& out) {
    RequireFormat(spec);
    const QuadraticInstance q = resolve_instance(spec.instance);
    const SparsityBudget budget(spec.s, q.n());
    const double gamma = resolve_gamma(spec, q, budget);
    const auto points = enumerate_stationary(q, budget, gamma, spec.threads);
    const std::string table = stationary_table_text(points);
    const std::string js = stationary_to_json(points, gamma);
    WriteOutputs(spec, {{"stationary.txt", table}, {"stationary.json", js}});
    if (spec.format == "json") {
        out << js;
    } else {
        out << "gamma: " << Num(gamma) << "\n" << table;
    }
    return kOk;
}

int cmd_run(const RunSpec& spec, std::ostream& out) {
    RequireFormat(spec);
    const QuadraticInstance q = resolve_instance(spec.instance);
    const SparsityBudget budget(spec.s, q.n());
    const double gamma = resolve_gamma(spec, q, budget);
    const DenseVector x0 = resolve_x0(spec, q, budget, gamma);
    if (l0_norm(x0) > budget.s()) {
        throw ConfigError("infeasible x0: " + std::to_string(l0_norm(x0)) + " nonzeros, s = " +
                          std::to_string(budget.s()));
    }
    const QuadraticObjective obj(q);
    IHTConfig cfg;
    cfg.gamma = gamma;
    cfg.max_iters = spec.max_iters;
    cfg.conv_tol = spec.conv_tol;
    cfg.enforce_gamma_bound = false;
    const RestrictedConstants constants = rss_constant(q, budget);
    const Trajectory t = run_iht(obj, x0, cfg, budget, constants);

    std::vector<std::pair<std::string, std::string>> files;
    if (spec.format != "json") files.emplace_back("trajectory.csv", trajectory_to_csv(t));
    if (spec.format != "csv") files.emplace_back("trajectory.json", trajectory_to_json(t));
    WriteOutputs(spec, files);

    const StationaryPoint last = classify(obj, t.final_point, gamma, budget);
    out << "termination: " << termination_name(t.termination) << "\n"
        << "steps: " << t.steps_taken << "\n"
        << "final_f: " << Num(t.f_values.back()) << "\n"
        << "final_point:";
    for (double v : t.final_point.values()) out << " " << Num(v);
    out << "\n"
        << "final_classification: " << stability_key(last.classification) << "\n"
        << "tie_events: " << t.tie_events << "\n";
    if (gamma > constants.max_stepsize() + kGammaBoundSlack) {
        out << "warning: gamma exceeds 1/L_s = " << Num(constants.max_stepsize()) << "; certificates not enforced\n";
    }
    return t.termination == Termination::certificate_violation ? kNumerical : kOk;
}

int cmd_escape(const RunSpec& spec, std::ostream& out) {
    RequireFormat(spec);
    const QuadraticInstance q = resolve_instance(spec.instance);
    const SparsityBudget budget(spec.s, q.n());
    const double gamma = resolve_gamma(spec, q, budget);
    const auto points = enumerate_stationary(q, budget, gamma);

    EscapeExperimentConfig cfg;
    cfg.sigma = spec.sigma;
    cfg.runs_per_point = spec.runs;
    cfg.steps = spec.steps;
    cfg.master_seed = spec.seed;
    cfg.gamma = gamma;
    cfg.basin_tol = spec.basin_tol;
    cfg.threads = spec.threads;
    const EscapeReport report = run_escape_experiment(q, points, cfg, budget);

    WriteOutputs(spec, {{"escape_report.json", escape_report_json(report)},
                        {"escape_runs.csv", escape_runs_csv(report)}});
    emit_plane_projections(report, points, spec.out / "planes", spec.overwrite);

    out << "runs: " << report.runs.size() << "\n"
        << "fraction_escaped: " << Num(report.fraction_escaped) << "\n"
        << "unattributed: " << report.unattributed << "\n"
        << "destinations (source -> dest: count):\n";
    for (const auto& c : report.counts) {
        out << "  " << c.source_id << " -> " << (c.dest_id ? std::to_string(*c.dest_id) : "unattributed") << ": "
            << c.count << "\n";
    }
    return kOk;
}

int cmd_check(const RunSpec& spec, std::ostream& out) {
    const QuadraticInstance q = resolve_instance(spec.instance);
    const SparsityBudget budget(spec.s, q.n());
    const double gamma = resolve_gamma(spec, q, budget);
    const auto items = run_check_suite(q, budget, gamma, spec.seed);
    bool ok = true;
    for (const auto& item : items) {
        out << (item.passed ? "PASS  " : "FAIL  ") << item.name;
        if (!item.detail.empty()) out << "  (" << item.detail << ")";
        out << "\n";
        ok = ok && item.passed;
    }
    return ok ? kOk : kNumerical;
}

int guarded(const std::function<int()>& fn, std::ostream& err) {
    try {
        return fn();
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace sparse_iht::cli
