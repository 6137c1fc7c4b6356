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

// Monte-Carlo escape study: IHT started from Gaussian perturbations of the
// nonzero coordinates of every HT-unstable stationary point, with each final
// iterate attributed to the nearest HT-stable point.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sparse_iht/core_types.hpp"
#include "sparse_iht/objective.hpp"
#include "sparse_iht/stationary.hpp"

namespace sparse_iht {

struct EscapeExperimentConfig {
    double sigma = 0.5;
    std::size_t runs_per_point = 1000;
    std::size_t steps = 400;
    std::uint64_t master_seed = 0;
    double gamma = 0.0;
    double basin_tol = 1e-4;
    // 0 uses std::thread::hardware_concurrency().
    unsigned threads = 1;

    /// Radius of the ball around the source used for escape_step: sigma / 10.
    double escape_radius() const { return sigma / 10.0; }
};

struct EscapeRunRecord {
    std::size_t run_id = 0;  // 1-based, ordered by (source id, run index)
    std::size_t source_id = 0;
    std::size_t run_index = 0;
    DenseVector start = DenseVector::zeros(1);
    DenseVector final_point = DenseVector::zeros(1);
    double final_f = 0.0;
    std::optional<std::size_t> dest_id;
    // Step after the last iterate inside the escape ball; 0 when the run never
    // was inside; empty when the final iterate is still inside.
    std::optional<std::size_t> escape_step;
    bool feasible = true;
    bool descent = true;
    bool certificate_ok = true;
};

struct EscapeCount {
    std::size_t source_id = 0;
    std::optional<std::size_t> dest_id;
    std::size_t count = 0;
};

struct EscapeReport {
    EscapeExperimentConfig config;
    double escape_radius = 0.0;
    double lipschitz = 0.0;
    bool gamma_within_bound = true;
    std::vector<std::size_t> unstable_ids;
    std::vector<std::size_t> stable_ids;
    std::vector<EscapeRunRecord> runs;
    // Sorted by (source, dest) with "unattributed" first.
    std::vector<EscapeCount> counts;
    double fraction_escaped = 0.0;
    std::size_t unattributed = 0;
    // Runs whose final iterate lies within basin_tol of an unstable point.
    std::size_t ended_near_unstable = 0;
    bool all_feasible = true;
    bool all_descent = true;
};

/// Throws ConfigError when `points` has no stable or no unstable point, or
/// the config is invalid.
EscapeReport run_escape_experiment(const QuadraticInstance& q, const std::vector<StationaryPoint>& points,
                                   const EscapeExperimentConfig& cfg, const SparsityBudget& budget);

/// Summary JSON: config, metadata, destination histogram, aggregate flags.
std::string escape_report_json(const EscapeReport& report);

/// run_id, source_id, run_index, escape_step, dest_id, final_f, x_1..x_n.
std::string escape_runs_csv(const EscapeReport& report);

/// Writes plane_x{i}_x{j}.csv for every coordinate pair i < j. Each file holds
/// one "final" row per run and one "stationary" marker row per point.
/// Existing files are an IoError unless `overwrite`.
std::vector<std::filesystem::path> emit_plane_projections(const EscapeReport& report,
                                                          const std::vector<StationaryPoint>& points,
                                                          const std::filesystem::path& out_dir,
                                                          bool overwrite = false);

struct PlaneMarker {
    std::size_t id = 0;
    bool stable = false;
    double first = 0.0;
    double second = 0.0;
};

/// Stationary marker rows of one plane file.
std::vector<PlaneMarker> read_plane_markers(const std::filesystem::path& path);

}  // namespace sparse_iht
