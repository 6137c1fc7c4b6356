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

#include "sparse_iht/stationary.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/ht_op.hpp"
#include "sparse_iht/kernels.hpp"

namespace sparse_iht {
namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kMergeTol = 1e-10;
constexpr std::size_t kParallelThreshold = 2048;

struct Candidate {
    std::vector<std::size_t> support;
    std::vector<double> x;
    bool degenerate = false;
};

// Solves the normal equations restricted to `support`; minimum-norm solution
// when the restricted Gram matrix is singular beyond kConditionLimit.
Candidate SolveRestricted(const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs,
                          const std::vector<std::size_t>& support, std::size_t n) {
    Candidate c;
    c.support = support;
    c.x.assign(n, 0.0);
    const auto k = static_cast<Eigen::Index>(support.size());
    if (k == 0) return c;
    Eigen::MatrixXd g(k, k);
    Eigen::VectorXd b(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const auto si = static_cast<Eigen::Index>(support[static_cast<std::size_t>(i)]);
        b(i) = rhs(si);
        for (Eigen::Index j = 0; j < k; ++j) {
            g(i, j) = gram(si, static_cast<Eigen::Index>(support[static_cast<std::size_t>(j)]));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const double lmax = lambda.maxCoeff();
    const double lmin = lambda.minCoeff();
    Eigen::VectorXd sol;
    if (lmax <= 0.0 || lmin <= lmax / kConditionLimit) {
        c.degenerate = true;
        const Eigen::MatrixXd& v = eig.eigenvectors();
        Eigen::VectorXd coeff = v.transpose() * b;
        for (Eigen::Index i = 0; i < k; ++i) {
            coeff(i) = lambda(i) > lmax / kConditionLimit && lmax > 0.0 ? coeff(i) / lambda(i) : 0.0;
        }
        sol = v * coeff;
    } else {
        sol = g.ldlt().solve(b);
    }
    for (Eigen::Index i = 0; i < k; ++i) c.x[support[static_cast<std::size_t>(i)]] = sol(i);
    return c;
}

double MaxAbsOn(const DenseVector& v, const SupportSet& s) {
    double m = 0.0;
    for (std::size_t i : s.indices()) m = std::max(m, std::fabs(v[i]));
    return m;
}

std::vector<std::size_t> ThresholdedSupport(const std::vector<double>& x) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::fabs(x[i]) > kMergeTol) s.push_back(i);
    }
    return s;
}

}  // namespace

std::string_view stability_key(Stability s) {
    switch (s) {
        case Stability::strictly_stable:
            return "strictly_stable";
        case Stability::stable_boundary:
            return "stable_boundary";
        case Stability::unstable:
            return "unstable";
        case Stability::not_stationary:
            return "not_stationary";
    }
    return "unknown";
}

std::string_view stability_label(Stability s) {
    switch (s) {
        case Stability::strictly_stable:
            return "strictly HT-stable";
        case Stability::stable_boundary:
            return "HT-stable";
        case Stability::unstable:
            return "HT-unstable";
        case Stability::not_stationary:
            return "not stationary";
    }
    return "unknown";
}

Stability parse_stability_key(std::string_view key) {
    for (Stability s : {Stability::strictly_stable, Stability::stable_boundary, Stability::unstable,
                        Stability::not_stationary}) {
        if (key == stability_key(s)) return s;
    }
    throw DomainError("unknown stability '" + std::string(key) + "'");
}

StationaryPoint classify(const Objective& obj, const DenseVector& x, double gamma, const SparsityBudget& budget) {
    if (!(gamma > 0.0)) throw ConfigError("classify: gamma must be positive");
    if (x.size() != budget.n()) throw DomainError("classify: dimension differs from sparsity budget");
    const std::size_t nnz = l0_norm(x);
    if (nnz > budget.s()) {
        throw DomainError("classify: point has " + std::to_string(nnz) + " nonzeros, budget is " +
                          std::to_string(budget.s()));
    }
    const DenseVector grad = gradient(obj, x);
    SupportSet support = support_of(x);

    StationaryPoint p{0, x, support, grad, eval(obj, x), Stability::not_stationary, 0.0, 0.0, false};
    // With fewer than s nonzeros every top-s set contains a zero coordinate.
    if (nnz == budget.s()) {
        p.min_abs_on_top = std::fabs(x[support.indices().front()]);
        for (std::size_t i : support.indices()) p.min_abs_on_top = std::min(p.min_abs_on_top, std::fabs(x[i]));
    }
    p.gamma_max_grad_off = gamma * MaxAbsOn(grad, support.complement());

    if (MaxAbsOn(grad, support) > obj.stationarity_tolerance()) return p;
    if (nnz < budget.s()) {
        // Stable only when the whole gradient vanishes, judged with the same
        // tolerance as the on-support test.
        const bool vanishes = MaxAbsOn(grad, support.complement()) <= obj.stationarity_tolerance();
        p.classification = vanishes ? Stability::stable_boundary : Stability::unstable;
        return p;
    }
    if (p.min_abs_on_top > p.gamma_max_grad_off + kStabilityMargin) {
        p.classification = Stability::strictly_stable;
    } else if (p.min_abs_on_top < p.gamma_max_grad_off - kStabilityMargin) {
        p.classification = Stability::unstable;
    } else {
        p.classification = Stability::stable_boundary;
    }
    return p;
}

std::vector<StationaryPoint> enumerate_stationary(const QuadraticInstance& q, const SparsityBudget& budget,
                                                  double gamma, unsigned threads) {
    if (budget.n() != q.n()) throw DomainError("enumerate_stationary: budget dimension differs from instance");
    std::size_t total = 0;
    for (std::size_t k = 0; k <= budget.s(); ++k) {
        const std::size_t c = binomial(q.n(), k);
        total = c > kMaxEnumeratedSupports ? c : total + c;
        if (total > kMaxEnumeratedSupports) {
            throw ConfigError("exhaustive enumeration refused: " + std::to_string(binomial(q.n(), budget.s())) +
                              " supports of size " + std::to_string(budget.s()) + " (limit " +
                              std::to_string(kMaxEnumeratedSupports) + ")");
        }
    }

    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> a(q.A.data(), static_cast<Eigen::Index>(q.m()), static_cast<Eigen::Index>(q.n()));
    const Eigen::Map<const Eigen::VectorXd> y(q.y.values().data(), static_cast<Eigen::Index>(q.m()));
    const Eigen::MatrixXd gram = a.transpose() * a;
    const Eigen::VectorXd rhs = a.transpose() * y;

    // Supports of size s first, then smaller ones; lexicographic within a size.
    std::vector<std::vector<std::size_t>> supports;
    supports.reserve(total);
    for (std::size_t k = budget.s() + 1; k-- > 0;) {
        for_each_combination(q.n(), k, [&](const std::vector<std::size_t>& c) {
            supports.push_back(c);
            return true;
        });
    }

    std::vector<Candidate> solved(supports.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) solved[i] = SolveRestricted(gram, rhs, supports[i], q.n());
    };
    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    if (supports.size() < kParallelThreshold) workers = 1;
    if (workers == 1) {
        work(0, supports.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (supports.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t b = std::min(supports.size(), w * chunk);
            const std::size_t e = std::min(supports.size(), b + chunk);
            pool.emplace_back(work, b, e);
        }
        for (auto& t : pool) t.join();
    }

    const QuadraticObjective obj(q);
    std::vector<StationaryPoint> points;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < solved.size(); ++i) {
        Candidate& c = solved[i];
        const DenseVector x(c.x);
        if (c.support.size() < budget.s()) {
            if (kernels::max_abs(gradient(obj, x).values()) > obj.stationarity_tolerance()) continue;
        }
        auto& bucket = buckets[ThresholdedSupport(c.x)];
        const bool duplicate = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t j) {
            const auto& other = points[j].point;
            for (std::size_t t = 0; t < x.size(); ++t) {
                if (std::fabs(other[t] - x[t]) > kMergeTol) return false;
            }
            return true;
        });
        if (duplicate) continue;
        StationaryPoint p = classify(obj, x, gamma, budget);
        p.degenerate = c.degenerate;
        p.id = points.size() + 1;
        bucket.push_back(points.size());
        points.push_back(std::move(p));
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const StationaryPoint& l, const StationaryPoint& r) { return l.f_value < r.f_value; });
    return points;
}

Corollary4Report check_corollary4(const std::vector<StationaryPoint>& points) {
    const StationaryPoint* best = nullptr;
    for (const auto& p : points) {
        if (is_stable(p.classification) && (best == nullptr || p.f_value < best->f_value)) best = &p;
    }
    Corollary4Report report;
    for (const auto& p : points) {
        if (p.classification != Stability::unstable) continue;
        Corollary4Pair pair{p.id, std::nullopt};
        if (best != nullptr && best->f_value < p.f_value) pair.witness_id = best->id;
        if (!pair.witness_id) report.holds = false;
        report.pairs.push_back(pair);
    }
    return report;
}

FixedPointCheck check_fixed_point(const Objective& obj, const StationaryPoint& p, double gamma,
                                  const SparsityBudget& budget) {
    const DenseVector grad = gradient(obj, p.point);
    const DenseVector step = gradient_step(p.point, grad, gamma);
    const IndexSetFamily family = top_s_index_sets(step, budget);
    const double tol = gamma * obj.stationarity_tolerance() +
                       1e-12 * std::max(1.0, kernels::max_abs(p.point.values()));

    FixedPointCheck out;
    out.family_size = family.sets.size();
    out.family_truncated = family.truncated;
    for (const SupportSet& s : family.sets) {
        bool equal = true;
        for (std::size_t i = 0; i < step.size() && equal; ++i) {
            const double kept = s.contains(i) ? step[i] : 0.0;
            equal = std::fabs(kept - p.point[i]) <= tol;
        }
        if (equal) {
            out.member = true;
            break;
        }
    }
    return out;
}

}  // namespace sparse_iht
