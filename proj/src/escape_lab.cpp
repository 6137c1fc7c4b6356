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

#include "sparse_iht/escape_lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/iht_engine.hpp"
#include "sparse_iht/random.hpp"

namespace sparse_iht {
namespace {

struct Task {
    const StationaryPoint* source;
    std::size_t run_index;
};

void Validate(const EscapeExperimentConfig& cfg) {
    if (!(cfg.sigma >= 0.0) || !std::isfinite(cfg.sigma)) throw ConfigError("sigma must be nonnegative");
    if (cfg.runs_per_point == 0) throw ConfigError("runs_per_point must be positive");
    if (cfg.steps == 0) throw ConfigError("steps must be positive");
    if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma)) throw ConfigError("gamma must be positive");
    if (!(cfg.basin_tol > 0.0)) throw ConfigError("basin_tol must be positive");
}

EscapeRunRecord RunOne(const QuadraticObjective& obj, const Task& task, const EscapeExperimentConfig& cfg,
                       const SparsityBudget& budget, const RestrictedConstants& constants,
                       const std::vector<const StationaryPoint*>& stable) {
    const DenseVector& source = task.source->point;
    RandomStream rng(cfg.master_seed, task.source->id, task.run_index);
    std::vector<double> start = source.vector();
    for (std::size_t i = 0; i < start.size(); ++i) {
        if (source[i] != 0.0) start[i] += cfg.sigma * rng.normal();
    }

    EscapeRunRecord rec;
    rec.source_id = task.source->id;
    rec.run_index = task.run_index;
    rec.start = DenseVector(std::move(start));

    IHTConfig ic;
    ic.gamma = cfg.gamma;
    ic.max_iters = cfg.steps;
    ic.conv_tol = 0.0;
    ic.record_every = 1;
    ic.enforce_gamma_bound = false;
    const Trajectory t = run_iht(obj, rec.start, ic, budget, constants);

    rec.final_point = t.final_point;
    rec.final_f = t.f_values.back();
    rec.certificate_ok = t.termination != Termination::certificate_violation;

    const double radius = cfg.escape_radius();
    std::optional<std::size_t> last_inside;
    for (std::size_t r = 0; r < t.iterates.size(); ++r) {
        if (l0_norm(t.iterates[r]) > budget.s()) rec.feasible = false;
        if (distance(t.iterates[r], source) <= radius) last_inside = t.recorded_steps[r];
    }
    if (!last_inside) {
        rec.escape_step = 0;
    } else if (*last_inside < t.steps_taken) {
        rec.escape_step = *last_inside + 1;
    }
    for (std::size_t k = 1; k < t.f_values.size(); ++k) {
        if (t.f_values[k] > t.f_values[k - 1] + 1e-12) rec.descent = false;
    }

    double best = cfg.basin_tol;
    for (const StationaryPoint* p : stable) {
        const double d = distance(rec.final_point, p->point);
        if (d <= best) {
            best = d;
            rec.dest_id = p->id;
        }
    }
    return rec;
}

}  // namespace

EscapeReport run_escape_experiment(const QuadraticInstance& q, const std::vector<StationaryPoint>& points,
                                   const EscapeExperimentConfig& cfg, const SparsityBudget& budget) {
    Validate(cfg);
    if (budget.n() != q.n()) throw DomainError("escape experiment: budget dimension differs from instance");

    std::vector<const StationaryPoint*> stable;
    std::vector<const StationaryPoint*> unstable;
    for (const auto& p : points) {
        if (is_stable(p.classification)) stable.push_back(&p);
        if (p.classification == Stability::unstable) unstable.push_back(&p);
    }
    if (stable.empty()) throw ConfigError("escape experiment: no HT-stable stationary point to attribute runs to");
    if (unstable.empty()) throw ConfigError("escape experiment: no HT-unstable stationary point to perturb");
    auto by_id = [](const StationaryPoint* a, const StationaryPoint* b) { return a->id < b->id; };
    std::sort(stable.begin(), stable.end(), by_id);
    std::sort(unstable.begin(), unstable.end(), by_id);

    const QuadraticObjective obj(q);
    const RestrictedConstants constants = rss_constant(q, budget);

    EscapeReport report;
    report.config = cfg;
    report.escape_radius = cfg.escape_radius();
    report.lipschitz = constants.lipschitz;
    report.gamma_within_bound = cfg.gamma <= 1.0 / constants.lipschitz + kGammaBoundSlack;
    for (auto* p : stable) report.stable_ids.push_back(p->id);
    for (auto* p : unstable) report.unstable_ids.push_back(p->id);

    std::vector<Task> tasks;
    tasks.reserve(unstable.size() * cfg.runs_per_point);
    for (const StationaryPoint* u : unstable) {
        for (std::size_t r = 0; r < cfg.runs_per_point; ++r) tasks.push_back({u, r});
    }
    report.runs.resize(tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            report.runs[i] = RunOne(obj, tasks[i], cfg, budget, constants, stable);
            report.runs[i].run_id = i + 1;
        }
    };
    const unsigned workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hist;  // dest 0 = unattributed
    std::size_t escaped = 0;
    for (const auto& r : report.runs) {
        ++hist[{r.source_id, r.dest_id.value_or(0)}];
        if (r.escape_step) ++escaped;
        if (!r.dest_id) ++report.unattributed;
        report.all_feasible = report.all_feasible && r.feasible;
        report.all_descent = report.all_descent && r.descent && r.certificate_ok;
        for (const StationaryPoint* u : unstable) {
            if (distance(r.final_point, u->point) <= cfg.basin_tol) {
                ++report.ended_near_unstable;
                break;
            }
        }
    }
    for (const auto& [key, count] : hist) {
        EscapeCount c{key.first, std::nullopt, count};
        if (key.second != 0) c.dest_id = key.second;
        report.counts.push_back(c);
    }
    report.fraction_escaped = static_cast<double>(escaped) / static_cast<double>(report.runs.size());
    return report;
}

}  // namespace sparse_iht
