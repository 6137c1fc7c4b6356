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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "sparse_iht/core_types.hpp"
#include "sparse_iht/objective.hpp"
#include "sparse_iht/random.hpp"

namespace sparse_iht::testing {

inline DenseMatrix GaussianMatrix(RandomStream& rng, std::size_t m, std::size_t n) {
    std::vector<double> v(m * n);
    for (double& e : v) e = rng.normal();
    return DenseMatrix(m, n, std::move(v));
}

inline DenseVector GaussianVector(RandomStream& rng, std::size_t n, double scale = 1.0) {
    std::vector<double> v(n);
    for (double& e : v) e = scale * rng.normal();
    return DenseVector(std::move(v));
}

inline QuadraticInstance RandomInstance(RandomStream& rng, std::size_t m, std::size_t n) {
    return QuadraticInstance(GaussianMatrix(rng, m, n), GaussianVector(rng, m));
}

// At most s nonzeros at uniformly chosen positions.
inline DenseVector RandomSparse(RandomStream& rng, std::size_t n, std::size_t s, double scale = 1.0) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < s; ++i) std::swap(idx[i], idx[rng.integer(i, n - 1)]);
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < s; ++i) v[idx[i]] = scale * rng.normal();
    return DenseVector(std::move(v));
}

// Cyclic Jacobi eigenvalues of a symmetric n x n matrix (row-major).
inline std::vector<double> JacobiEigenvalues(std::vector<double> a, std::size_t n) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

// Gram matrix A_T^T A_T of the columns in `cols`.
inline std::vector<double> Gram(const DenseMatrix& a, const std::vector<std::size_t>& cols) {
    const std::size_t k = cols.size();
    std::vector<double> g(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t r = 0; r < a.rows(); ++r) g[i * k + j] += a(r, cols[i]) * a(r, cols[j]);
    return g;
}

// Every top-s index set by definition: min over S of |x| >= max over the rest.
// Subsets come from bitmasks so the oracle shares no code with the library.
inline std::vector<SupportSet> BruteForceTopS(const DenseVector& x, std::size_t s) {
    const std::size_t n = x.size();
    std::vector<SupportSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != s) continue;
        double lo = INFINITY;
        double hi = 0.0;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                idx.push_back(i);
                lo = std::min(lo, std::abs(x[i]));
            } else {
                hi = std::max(hi, std::abs(x[i]));
            }
        }
        if (lo >= hi) out.emplace_back(idx, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest ||x - P_S x|| over all |S| = s.
inline double BruteForceProjectionDistance(const DenseVector& x, std::size_t s) {
    const std::size_t n = x.size();
    double best = INFINITY;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != s) continue;
        double d = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (!(mask & (1u << j))) d += x[j] * x[j];
        best = std::min(best, std::sqrt(d));
    }
    return best;
}

}  // namespace sparse_iht::testing
