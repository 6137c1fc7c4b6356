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

#include "format.hpp"
#include "sparse_iht/iht_engine.hpp"

namespace sparse_iht {

std::string trajectory_to_csv(const Trajectory& traj) {
    const std::size_t n = traj.final_point.size();
    std::string out = "step";
    for (std::size_t i = 0; i < n; ++i) out += ",x_" + std::to_string(i + 1);
    out += ",f,eq5_slack,eq6_slack,eq7_slack,support\n";
    for (std::size_t r = 0; r < traj.iterates.size(); ++r) {
        const std::size_t step = traj.recorded_steps[r];
        const DenseVector& x = traj.iterates[r];
        out += std::to_string(step);
        for (std::size_t i = 0; i < n; ++i) out += "," + detail::format_g17(x[i]);
        out += "," + detail::format_g17(traj.f_values[step]);
        if (step == 0) {
            out += ",,,";
        } else {
            const StepCertificate& c = traj.certificates[step - 1];
            out += "," + detail::format_g17(c.eq5_slack) + "," + detail::format_g17(c.eq6_slack) + "," +
                   detail::format_g17(c.eq7_slack);
        }
        out += "," + support_of(x).to_one_based(';') + "\n";
    }
    return out;
}

std::string trajectory_to_json(const Trajectory& traj) {
    using nlohmann::json;
    json rows = json::array();
    for (std::size_t r = 0; r < traj.iterates.size(); ++r) {
        const std::size_t step = traj.recorded_steps[r];
        json row{{"step", step},
                 {"x", traj.iterates[r].vector()},
                 {"f", traj.f_values[step]},
                 {"support", support_of(traj.iterates[r]).to_one_based(';')}};
        if (step == 0) {
            row["eq5_slack"] = nullptr;
            row["eq6_slack"] = nullptr;
            row["eq7_slack"] = nullptr;
        } else {
            const StepCertificate& c = traj.certificates[step - 1];
            row["eq5_slack"] = c.eq5_slack;
            row["eq6_slack"] = c.eq6_slack;
            row["eq7_slack"] = c.eq7_slack;
        }
        rows.push_back(std::move(row));
    }
    json doc{{"termination", std::string(termination_name(traj.termination))},
             {"steps_taken", traj.steps_taken},
             {"tie_events", traj.tie_events},
             {"gamma", traj.gamma},
             {"lipschitz", traj.lipschitz},
             {"s", traj.sparsity},
             {"final_point", traj.final_point.vector()},
             {"final_f", traj.f_values.back()},
             {"rows", std::move(rows)}};
    doc["converged_at"] = traj.converged_at ? json(*traj.converged_at) : json(nullptr);
    return doc.dump(2) + "\n";
}

}  // namespace sparse_iht
