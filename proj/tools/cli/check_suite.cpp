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

#include "check_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "sparse_iht/iht_engine.hpp"
#include "sparse_iht/kernels.hpp"
#include "sparse_iht/random.hpp"
#include "sparse_iht/stationary.hpp"

namespace sparse_iht::cli {
namespace {

constexpr std::size_t kEnumerationMaxDim = 16;
constexpr std::size_t kCompletenessMaxDim = 10;

std::string Sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// Random point with at most s nonzeros at uniformly chosen positions.
DenseVector RandomSparse(RandomStream& rng, std::size_t n, std::size_t s, double scale) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < s; ++i) {
        std::swap(idx[i], idx[rng.integer(i, n - 1)]);
    }
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < s; ++i) v[idx[i]] = scale * rng.normal();
    return DenseVector(std::move(v));
}

CheckItem GradientCheck(const QuadraticObjective& obj, const SparsityBudget& budget, RandomStream& rng) {
    const std::size_t n = budget.n();
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const DenseVector x = RandomSparse(rng, n, budget.s(), 1.0);
        const DenseVector g = obj.gradient(x);
        std::vector<double> fd(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double h = 1e-5 * std::max(1.0, std::abs(x[i]));
            std::vector<double> up = x.vector();
            std::vector<double> dn = x.vector();
            up[i] += h;
            dn[i] -= h;
            fd[i] = (obj.value(DenseVector(up)) - obj.value(DenseVector(dn))) / (2.0 * h);
        }
        const double diff = std::sqrt(kernels::squared_distance(g.values(), fd));
        const double scale = std::max(1.0, norm2(g));
        worst = std::max(worst, diff / scale);
    }
    return {"gradient matches central differences", worst < 1e-6, "max rel err " + Sci(worst)};
}

CheckItem RestrictedConstantsCheck(const QuadraticObjective& obj, const SparsityBudget& budget,
                                   const RestrictedConstants& c, RandomStream& rng) {
    const std::size_t n = budget.n();
    double worst_upper = std::numeric_limits<double>::infinity();
    double worst_lower = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 10000; ++trial) {
        const DenseVector x = RandomSparse(rng, n, budget.s(), 1.0);
        const DenseVector z = RandomSparse(rng, n, budget.s(), 1.0);
        const double fx = obj.value(x);
        const double fz = obj.value(z);
        const DenseVector d = z - x;
        const double lin = fx + kernels::dot(obj.gradient(x).values(), d.values());
        const double dd = kernels::squared_norm(d.values());
        const double scale = std::max(1.0, std::abs(fz));
        worst_upper = std::min(worst_upper, (lin + 0.5 * c.lipschitz * dd - fz) / scale);
        if (c.convexity) worst_lower = std::min(worst_lower, (fz - lin - 0.5 * *c.convexity * dd) / scale);
    }
    const bool ok = worst_upper > -1e-10 && worst_lower > -1e-10;
    std::string detail = "worst upper slack " + Sci(worst_upper);
    detail += c.convexity ? ", worst lower slack " + Sci(worst_lower) : ", lower bound not computed";
    return {"restricted smoothness/convexity on 10000 sparse pairs", ok, detail};
}

CheckItem DescentCheck(const QuadraticObjective& obj, const SparsityBudget& budget, const RestrictedConstants& c,
                       double gamma, RandomStream& rng) {
    const bool within = gamma <= c.max_stepsize() + kGammaBoundSlack;
    IHTConfig cfg;
    cfg.gamma = within ? gamma : c.max_stepsize();
    cfg.max_iters = 500;
    cfg.enforce_gamma_bound = true;
    double worst = 0.0;
    std::size_t violations = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const DenseVector x0 = RandomSparse(rng, budget.n(), budget.s(), 2.0);
        const Trajectory t = run_iht(obj, x0, cfg, budget, c);
        if (t.termination == Termination::certificate_violation) ++violations;
        for (const auto& cert : t.certificates) worst = std::min(worst, cert.min_slack());
    }
    std::string detail = "min slack " + Sci(worst) + " at gamma " + Sci(cfg.gamma);
    if (!within) detail += " (requested gamma exceeds 1/L_s)";
    return {"descent certificates from 10 random starts", violations == 0, detail};
}

}  // namespace

std::vector<CheckItem> run_check_suite(const QuadraticInstance& q, const SparsityBudget& budget, double gamma,
                                       std::uint64_t seed) {
    const QuadraticObjective obj(q);
    const RestrictedConstants c = rss_constant(q, budget);
    RandomStream rng(seed, 0x636865636bULL, 0);
    std::vector<CheckItem> items;
    items.push_back(GradientCheck(obj, budget, rng));
    items.push_back(RestrictedConstantsCheck(obj, budget, c, rng));
    items.push_back(DescentCheck(obj, budget, c, gamma, rng));

    if (budget.n() > kEnumerationMaxDim) {
        items.push_back({"stationary enumeration", true, "skipped: n > " + std::to_string(kEnumerationMaxDim)});
        return items;
    }
    const auto points = enumerate_stationary(q, budget, gamma);

    std::size_t mismatches = 0;
    for (const auto& p : points) {
        if (check_fixed_point(obj, p, gamma, budget).member != is_stable(p.classification)) ++mismatches;
    }
    items.push_back({"HT-stable iff fixed point of the HT map", mismatches == 0,
                     std::to_string(points.size()) + " points, " + std::to_string(mismatches) + " mismatches"});

    const Corollary4Report cor = check_corollary4(points);
    items.push_back({"every unstable point has a stable point with lower f", cor.holds,
                     std::to_string(cor.pairs.size()) + " unstable points"});

    std::size_t bad_strict = 0;
    for (const auto& p : points) {
        if (p.classification == Stability::strictly_stable && l0_norm(p.point) != budget.s()) ++bad_strict;
    }
    items.push_back({"strictly stable points have exactly s nonzeros", bad_strict == 0,
                     std::to_string(bad_strict) + " violations"});

    if (budget.n() > kCompletenessMaxDim) {
        items.push_back({"enumeration completeness", true, "skipped: n > " + std::to_string(kCompletenessMaxDim)});
        return items;
    }
    IHTConfig cfg;
    cfg.gamma = gamma;
    cfg.max_iters = 200000;
    cfg.conv_tol = 1e-13;
    cfg.record_every = 1000000;
    cfg.enforce_gamma_bound = false;
    std::size_t missing = 0;
    std::size_t converged = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const DenseVector x0 = RandomSparse(rng, budget.n(), budget.s(), 2.0);
        const Trajectory t = run_iht(obj, x0, cfg, budget, c);
        if (t.termination != Termination::converged) continue;
        ++converged;
        const bool found = std::any_of(points.begin(), points.end(), [&](const StationaryPoint& p) {
            return distance(p.point, t.final_point) <= 1e-6 * std::max(1.0, norm2(p.point));
        });
        if (!found) ++missing;
    }
    items.push_back({"IHT limits from 20 random starts are enumerated", missing == 0 && converged > 0,
                     std::to_string(converged) + " converged, " + std::to_string(missing) + " not in the list"});
    return items;
}

}  // namespace sparse_iht::cli
