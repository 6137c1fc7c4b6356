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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>

#include "sparse_iht/core_types.hpp"
#include "sparse_iht/objective.hpp"

namespace sparse_iht::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3, kIo = 4 };

/// Parameters shared by every subcommand.
struct RunSpec {
    std::string instance = "paper4x4";
    std::size_t s = 2;
    std::string gamma = "auto";  // number or "auto" (= 1/L_s)
    std::uint64_t seed = 0;
    std::size_t runs = 1000;
    std::size_t steps = 400;
    double sigma = 0.5;
    double basin_tol = 1e-4;
    std::size_t max_iters = 1000;
    double conv_tol = 1e-10;
    std::string x0 = "zero";
    unsigned threads = 1;
    std::filesystem::path out = "out";
    bool overwrite = false;
    std::string format = "table";  // csv | json | table
};

/// Fills every field not named in `explicit_flags` from a JSON config
/// document ({"version": 1, ...}). Throws ConfigError on unknown keys or a
/// missing/unsupported version.
void apply_config(RunSpec& spec, const std::string& json_text, const std::set<std::string>& explicit_flags);

/// Gamma from the run settings: a positive number, or 1/L_s for "auto".
double resolve_gamma(const RunSpec& spec, const QuadraticInstance& q, const SparsityBudget& budget);

/// Starting point from "zero", "stationary:<id>", an inline comma list, or a
/// file (.json array or single-row CSV).
DenseVector resolve_x0(const RunSpec& spec, const QuadraticInstance& q, const SparsityBudget& budget,
                       double gamma);

int cmd_constants(const RunSpec& spec, std::ostream& out);
int cmd_stationary(const RunSpec& spec, std::ostream& out);
int cmd_run(const RunSpec& spec, std::ostream& out);
int cmd_escape(const RunSpec& spec, std::ostream& out);
int cmd_check(const RunSpec& spec, std::ostream& out);

/// Runs `fn`, mapping library exceptions to exit codes and printing the
/// message to `err`.
int guarded(const std::function<int()>& fn, std::ostream& err);

}  // namespace sparse_iht::cli
