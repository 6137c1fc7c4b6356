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

#include "sparse_iht/objective.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/kernels.hpp"

namespace sparse_iht {
namespace {

using RowMajorMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

void RequireDimension(const Objective& obj, const DenseVector& x) {
    if (x.size() != obj.dimension()) {
        throw DomainError("objective expects dimension " + std::to_string(obj.dimension()) + ", got " +
                          std::to_string(x.size()));
    }
}

Eigen::MatrixXd Gram(const DenseMatrix& a) {
    RowMajorMap map(a.data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    return map.transpose() * map;
}

}  // namespace

QuadraticInstance::QuadraticInstance(DenseMatrix a, DenseVector target)
    : A(std::move(a)), y(std::move(target)) {
    if (A.rows() != y.size()) {
        throw DomainError("quadratic instance: A has " + std::to_string(A.rows()) + " rows but y has " +
                          std::to_string(y.size()) + " entries");
    }
}

QuadraticObjective::QuadraticObjective(QuadraticInstance instance)
    : instance_(std::move(instance)), tolerance_(1e-9) {
    std::vector<double> aty(instance_.n());
    kernels::active().gemv_t(instance_.A.data(), instance_.m(), instance_.n(), instance_.y.values().data(),
                             aty.data());
    tolerance_ = 1e-9 * std::max(1.0, kernels::max_abs(aty));
}

std::vector<double> QuadraticObjective::residual(const DenseVector& x) const {
    const auto& k = kernels::active();
    std::vector<double> r(instance_.m());
    k.gemv(instance_.A.data(), instance_.m(), instance_.n(), x.values().data(), r.data());
    k.axpy(-1.0, instance_.y.values().data(), r.data(), r.size());
    return r;
}

double QuadraticObjective::value(const DenseVector& x) const {
    const std::vector<double> r = residual(x);
    return kernels::squared_norm(r) / static_cast<double>(instance_.m());
}

DenseVector QuadraticObjective::gradient(const DenseVector& x) const {
    const auto& k = kernels::active();
    std::vector<double> r = residual(x);
    const double scale = 2.0 / static_cast<double>(instance_.m());
    for (double& v : r) v *= scale;
    std::vector<double> g(instance_.n());
    k.gemv_t(instance_.A.data(), instance_.m(), instance_.n(), r.data(), g.data());
    return DenseVector(std::move(g));
}

CallbackObjective::CallbackObjective(std::size_t dimension, ValueFn value, GradientFn gradient,
                                     double stationarity_tolerance)
    : dimension_(dimension),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      tolerance_(stationarity_tolerance) {
    if (dimension_ == 0) throw DomainError("objective dimension must be positive");
    if (!value_ || !gradient_) throw ConfigError("objective callbacks must be set");
}

double eval(const Objective& obj, const DenseVector& x) {
    RequireDimension(obj, x);
    const double v = obj.value(x);
    if (!std::isfinite(v)) throw DomainError("objective value is not finite");
    return v;
}

DenseVector gradient(const Objective& obj, const DenseVector& x) {
    RequireDimension(obj, x);
    DenseVector g = obj.gradient(x);
    if (g.size() != obj.dimension()) {
        throw DomainError("gradient has length " + std::to_string(g.size()) + ", expected " +
                          std::to_string(obj.dimension()));
    }
    return g;
}

DenseVector restricted_gradient(const DenseVector& grad, const SupportSet& s) { return restrict_to(grad, s); }

double dense_lambda_max(const DenseMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Gram(a), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
    return solver.eigenvalues().maxCoeff();
}

double power_iteration_lambda_max(const DenseMatrix& a, double rel_tol, std::size_t max_iters) {
    const auto& k = kernels::active();
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(m);
    std::vector<double> w(n);

    // Applies A^T A to v, returns the Rayleigh quotient v^T A^T A v.
    auto apply = [&] {
        k.gemv(a.data(), m, n, v.data(), av.data());
        k.gemv_t(a.data(), m, n, av.data(), w.data());
        return k.dot(av.data(), av.data(), m);
    };

    double lambda = apply();
    // The all-ones start can be orthogonal to the row space; fall back to
    // unit vectors in index order.
    for (std::size_t e = 0; lambda == 0.0 && e < n; ++e) {
        std::fill(v.begin(), v.end(), 0.0);
        v[e] = 1.0;
        lambda = apply();
    }
    if (lambda == 0.0) throw DomainError("power iteration: matrix is zero");

    for (std::size_t it = 0; it < max_iters; ++it) {
        const double nw = std::sqrt(k.dot(w.data(), w.data(), n));
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
        const double next = apply();
        if (std::fabs(next - lambda) <= rel_tol * next) return next;
        lambda = next;
    }
    throw NumericalError("power iteration did not converge after " + std::to_string(max_iters) +
                         " iterations");
}

RestrictedConstants rss_constant(const QuadraticInstance& q, const SparsityBudget& budget) {
    if (budget.n() != q.n()) throw DomainError("rss_constant: budget dimension differs from instance");
    if (kernels::max_abs(std::span<const double>(q.A.data(), q.m() * q.n())) == 0.0) {
        throw DomainError("rss_constant: A is zero");
    }
    const double scale = 2.0 / static_cast<double>(q.m());

    RestrictedConstants c;
    c.s_effective = budget.s();
    c.support_size = std::min(2 * budget.s(), q.n());
    const double lambda_max = q.n() <= kDenseEigenMaxDim ? dense_lambda_max(q.A) : power_iteration_lambda_max(q.A);
    c.lipschitz = scale * lambda_max;

    if (q.n() <= kExhaustiveConstantsMaxDim) {
        const Eigen::MatrixXd gram = Gram(q.A);
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for_each_combination(q.n(), c.support_size, [&](const std::vector<std::size_t>& t) {
            const auto idx = static_cast<Eigen::Index>(t.size());
            Eigen::MatrixXd sub(idx, idx);
            for (Eigen::Index i = 0; i < idx; ++i) {
                for (Eigen::Index j = 0; j < idx; ++j) {
                    sub(i, j) = gram(static_cast<Eigen::Index>(t[static_cast<std::size_t>(i)]),
                                     static_cast<Eigen::Index>(t[static_cast<std::size_t>(j)]));
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub, Eigen::EigenvaluesOnly);
            lo = std::min(lo, solver.eigenvalues().minCoeff());
            hi = std::max(hi, solver.eigenvalues().maxCoeff());
            return true;
        });
        // Round-off can push a singular restricted Gram slightly negative.
        c.convexity = scale * std::max(lo, 0.0);
        c.restricted_lipschitz = scale * hi;
    }
    return c;
}

}  // namespace sparse_iht
