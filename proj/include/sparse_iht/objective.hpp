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

#include <cstddef>
#include <functional>
#include <optional>

#include "sparse_iht/core_types.hpp"

namespace sparse_iht {

/// A C^1 objective f: R^n -> R. Implementations must be pure: repeated calls
/// with the same argument return the same result and nothing observable is
/// mutated, so one instance can be shared across threads.
class Objective {
public:
    virtual ~Objective() = default;

    virtual std::size_t dimension() const = 0;
    virtual double value(const DenseVector& x) const = 0;
    virtual DenseVector gradient(const DenseVector& x) const = 0;

    /// Absolute threshold under which a gradient entry counts as zero.
    virtual double stationarity_tolerance() const { return 1e-9; }
};

/// Data of the least-squares objective f(x) = (1/m)||Ax - y||^2.
struct QuadraticInstance {
    DenseMatrix A;
    DenseVector y;

    QuadraticInstance(DenseMatrix a, DenseVector target);

    std::size_t m() const noexcept { return A.rows(); }
    std::size_t n() const noexcept { return A.cols(); }
};

class QuadraticObjective final : public Objective {
public:
    explicit QuadraticObjective(QuadraticInstance instance);

    const QuadraticInstance& instance() const noexcept { return instance_; }

    std::size_t dimension() const override { return instance_.n(); }
    double value(const DenseVector& x) const override;
    /// (2/m) A^T (Ax - y)
    DenseVector gradient(const DenseVector& x) const override;
    /// 1e-9 * max(1, ||A^T y||_inf)
    double stationarity_tolerance() const override { return tolerance_; }

    /// Residual Ax - y.
    std::vector<double> residual(const DenseVector& x) const;

private:
    QuadraticInstance instance_;
    double tolerance_;
};

/// Objective built from user callbacks.
class CallbackObjective final : public Objective {
public:
    using ValueFn = std::function<double(const DenseVector&)>;
    using GradientFn = std::function<DenseVector(const DenseVector&)>;

    CallbackObjective(std::size_t dimension, ValueFn value, GradientFn gradient,
                      double stationarity_tolerance = 1e-9);

    std::size_t dimension() const override { return dimension_; }
    double value(const DenseVector& x) const override { return value_(x); }
    DenseVector gradient(const DenseVector& x) const override { return gradient_(x); }
    double stationarity_tolerance() const override { return tolerance_; }

private:
    std::size_t dimension_;
    ValueFn value_;
    GradientFn gradient_;
    double tolerance_;
};

/// f(x) with dimension and finiteness checks.
double eval(const Objective& obj, const DenseVector& x);

/// grad f(x) with dimension and finiteness checks.
DenseVector gradient(const Objective& obj, const DenseVector& x);

/// grad on S, zero off S.
DenseVector restricted_gradient(const DenseVector& grad, const SupportSet& s);

/// Restricted smoothness / convexity moduli of a quadratic instance.
struct RestrictedConstants {
    // (2/m) lambda_max(A^T A): a valid RSS modulus for every sparsity level.
    double lipschitz = 0.0;
    // (2/m) min over |T| = min(2s, n) of lambda_min(A_T^T A_T); n <= 12 only.
    std::optional<double> convexity;
    // (2/m) max over the same supports of lambda_max(A_T^T A_T); n <= 12 only.
    std::optional<double> restricted_lipschitz;
    std::size_t s_effective = 0;
    // Support size the exhaustive values range over.
    std::size_t support_size = 0;

    double max_stepsize() const { return 1.0 / lipschitz; }
};

inline constexpr std::size_t kExhaustiveConstantsMaxDim = 12;
inline constexpr std::size_t kDenseEigenMaxDim = 64;

RestrictedConstants rss_constant(const QuadraticInstance& q, const SparsityBudget& budget);

/// Largest eigenvalue of A^T A by power iteration from the normalised
/// all-ones vector. Throws NumericalError after max_iters.
double power_iteration_lambda_max(const DenseMatrix& a, double rel_tol = 1e-10,
                                  std::size_t max_iters = 100000);

/// Largest eigenvalue of A^T A via a dense symmetric eigensolver.
double dense_lambda_max(const DenseMatrix& a);

}  // namespace sparse_iht
