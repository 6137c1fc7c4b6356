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

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "format.hpp"
#include "sparse_iht/errors.hpp"
#include "sparse_iht/escape_lab.hpp"
#include "sparse_iht/instance_io.hpp"

namespace sparse_iht {
namespace {

using nlohmann::json;

json OptionalIndex(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

void WriteFile(const std::filesystem::path& path, const std::string& text, bool overwrite) {
    if (!overwrite && std::filesystem::exists(path)) {
        throw IoError("refusing to overwrite '" + path.string() + "' (pass --overwrite)");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

std::string escape_report_json(const EscapeReport& report) {
    const auto& c = report.config;
    json counts = json::array();
    for (const auto& e : report.counts) {
        counts.push_back(json{{"source_id", e.source_id}, {"dest_id", OptionalIndex(e.dest_id)}, {"count", e.count}});
    }
    json doc{
        {"config",
         {{"sigma", c.sigma},
          {"runs_per_point", c.runs_per_point},
          {"steps", c.steps},
          {"master_seed", c.master_seed},
          {"gamma", c.gamma},
          {"basin_tol", c.basin_tol}}},
        {"metadata",
         {{"escape_radius", report.escape_radius},
          {"lipschitz", report.lipschitz},
          {"gamma_within_bound", report.gamma_within_bound},
          {"rng", "splitmix64(master_seed, point_id, run_index) -> mt19937_64, Box-Muller normals"}}},
        {"unstable_ids", report.unstable_ids},
        {"stable_ids", report.stable_ids},
        {"total_runs", report.runs.size()},
        {"fraction_escaped", report.fraction_escaped},
        {"unattributed", report.unattributed},
        {"ended_near_unstable", report.ended_near_unstable},
        {"all_feasible", report.all_feasible},
        {"all_descent", report.all_descent},
        {"counts", counts},
    };
    return doc.dump(2) + "\n";
}

std::string escape_runs_csv(const EscapeReport& report) {
    const std::size_t n = report.runs.empty() ? 0 : report.runs.front().final_point.size();
    std::string out = "run_id,source_id,run_index,escape_step,dest_id,final_f";
    for (std::size_t i = 0; i < n; ++i) out += ",x_" + std::to_string(i + 1);
    out += "\n";
    for (const auto& r : report.runs) {
        out += std::to_string(r.run_id) + "," + std::to_string(r.source_id) + "," + std::to_string(r.run_index) + ",";
        out += r.escape_step ? std::to_string(*r.escape_step) : std::string();
        out += ",";
        out += r.dest_id ? std::to_string(*r.dest_id) : std::string("unattributed");
        out += "," + detail::format_g17(r.final_f);
        for (std::size_t i = 0; i < n; ++i) out += "," + detail::format_g17(r.final_point[i]);
        out += "\n";
    }
    return out;
}

std::vector<std::filesystem::path> emit_plane_projections(const EscapeReport& report,
                                                          const std::vector<StationaryPoint>& points,
                                                          const std::filesystem::path& out_dir, bool overwrite) {
    if (points.empty()) throw DomainError("plane projections need at least one stationary point");
    const std::size_t n = points.front().point.size();
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string xi = "x" + std::to_string(i + 1);
            const std::string xj = "x" + std::to_string(j + 1);
            std::string text = "kind,id,tag," + xi + "," + xj + "\n";
            for (const auto& p : points) {
                text += "stationary," + std::to_string(p.id) + "," +
                        (is_stable(p.classification) ? "stable" : "unstable") + "," +
                        detail::format_g17(p.point[i]) + "," + detail::format_g17(p.point[j]) + "\n";
            }
            for (const auto& r : report.runs) {
                text += "final," + std::to_string(r.run_id) + "," +
                        (r.dest_id ? std::to_string(*r.dest_id) : std::string("unattributed")) + "," +
                        detail::format_g17(r.final_point[i]) + "," + detail::format_g17(r.final_point[j]) + "\n";
            }
            const auto path = out_dir / ("plane_" + xi + "_" + xj + ".csv");
            WriteFile(path, text, overwrite);
            written.push_back(path);
        }
    }
    return written;
}

std::vector<PlaneMarker> read_plane_markers(const std::filesystem::path& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    std::getline(in, line);  // header
    std::vector<PlaneMarker> out;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 5) throw IoError(path.string() + ": malformed row '" + line + "'");
        if (cells[0] != "stationary") continue;
        try {
            out.push_back(PlaneMarker{std::stoul(cells[1]), cells[2] == "stable", std::stod(cells[3]),
                                      std::stod(cells[4])});
        } catch (const std::exception&) {
            throw IoError(path.string() + ": malformed row '" + line + "'");
        }
    }
    return out;
}

}  // namespace sparse_iht
