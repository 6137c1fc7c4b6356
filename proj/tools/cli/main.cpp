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

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <string>

#include "commands.hpp"
#include "sparse_iht/instance_io.hpp"
#include "sparse_iht/kernels.hpp"

namespace {

using sparse_iht::cli::RunSpec;

struct Flags {
    RunSpec spec;
    std::string config;
    std::string kernels = "auto";
};

void AddCommon(CLI::App* sub, Flags& f) {
    auto& s = f.spec;
    sub->add_option("--instance", s.instance, "Fixture name, instance .json, or 'A.csv,y.csv'");
    sub->add_option("--s", s.s, "Sparsity level");
    sub->add_option("--gamma", s.gamma, "Stepsize, or 'auto' for 1/L_s");
    sub->add_option("--out", s.out, "Output directory");
    sub->add_flag("--overwrite", s.overwrite, "Replace existing output files");
    sub->add_option("--format", s.format, "csv, json or table")->check(CLI::IsMember({"csv", "json", "table"}));
    sub->add_option("--config", f.config, "JSON config file ({\"version\": 1, ...})");
    sub->add_option("--threads", s.threads, "Worker threads (0 = hardware)");
    sub->add_option("--seed", s.seed, "Master seed");
    sub->add_option("--kernels", f.kernels, "auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

std::set<std::string> ExplicitFlags(const CLI::App* sub) {
    std::set<std::string> names;
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0) continue;
        std::string name = opt->get_name();
        while (!name.empty() && name.front() == '-') name.erase(name.begin());
        for (auto& ch : name) {
            if (ch == '-') ch = '_';
        }
        names.insert(name);
    }
    return names;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace sparse_iht;
    CLI::App app{"Iterative hard thresholding: constants, stationary points, runs and escape experiments"};
    app.require_subcommand(1);
    Flags f;
    auto& s = f.spec;

    auto* constants = app.add_subcommand("constants", "Print L_s, 1/L_s and the restricted constants");
    auto* stationary = app.add_subcommand("stationary", "Enumerate and classify stationary points");
    auto* run = app.add_subcommand("run", "Run IHT from a starting point and write the trajectory");
    auto* escape = app.add_subcommand("escape", "Perturb unstable points and track where IHT goes");
    auto* check = app.add_subcommand("check", "Run numerical self-checks on an instance");
    for (auto* sub : {constants, stationary, run, escape, check}) AddCommon(sub, f);

    run->add_option("--x0", s.x0, "zero, stationary:<id>, inline list, or .json/.csv file");
    run->add_option("--max-iters", s.max_iters, "Iteration cap");
    run->add_option("--conv-tol", s.conv_tol, "Stop when ||x^{k+1} - x^k|| <= tol");
    escape->add_option("--runs", s.runs, "Runs per unstable point");
    escape->add_option("--steps", s.steps, "IHT steps per run");
    escape->add_option("--sigma", s.sigma, "Perturbation standard deviation");
    escape->add_option("--basin-tol", s.basin_tol, "Attribution distance to a stable point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kUsage;
    }

    CLI::App* active = app.get_subcommands().front();
    return cli::guarded(
        [&] {
            if (f.kernels == "scalar") kernels::select_backend(kernels::Backend::scalar);
            if (f.kernels == "avx2") kernels::select_backend(kernels::Backend::avx2);
            if (!f.config.empty()) cli::apply_config(s, read_text_file(f.config), ExplicitFlags(active));
            const std::string name = active->get_name();
            if (name == "constants") return cli::cmd_constants(s, std::cout);
            if (name == "stationary") return cli::cmd_stationary(s, std::cout);
            if (name == "run") return cli::cmd_run(s, std::cout);
            if (name == "escape") return cli::cmd_escape(s, std::cout);
            return cli::cmd_check(s, std::cout);
        },
        std::cerr);
}
