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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/kernels.hpp"
#include "support/test_util.hpp"

namespace sparse_iht {
namespace {

using kernels::Backend;

std::vector<double> Draw(RandomStream& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& e : v) e = rng.normal();
    return v;
}

double AbsDot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] * b[i]);
    return s;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
protected:
    void SetUp() override {
        if (!kernels::backend_available(Backend::avx2)) GTEST_SKIP() << "AVX2 not available";
    }
    const kernels::KernelTable& ref = kernels::table(Backend::scalar);
    const kernels::KernelTable& simd() { return kernels::table(Backend::avx2); }
};

TEST_P(KernelEquivalence, Reductions) {
    const std::size_t n = GetParam();
    RandomStream rng(11, n, 0);
    const auto a = Draw(rng, n);
    const auto b = Draw(rng, n);
    const double tol = 1e-13 * std::max(1.0, AbsDot(a, b));
    EXPECT_NEAR(ref.dot(a.data(), b.data(), n), simd().dot(a.data(), b.data(), n), tol);
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) sq += (a[i] - b[i]) * (a[i] - b[i]);
    EXPECT_NEAR(ref.squared_distance(a.data(), b.data(), n), simd().squared_distance(a.data(), b.data(), n),
                1e-13 * std::max(1.0, sq));
    EXPECT_EQ(ref.max_abs(a.data(), n), simd().max_abs(a.data(), n));
}

TEST_P(KernelEquivalence, Updates) {
    const std::size_t n = GetParam();
    RandomStream rng(12, n, 0);
    const auto x = Draw(rng, n);
    const auto y = Draw(rng, n);
    auto y1 = y;
    auto y2 = y;
    ref.axpy(-0.37, x.data(), y1.data(), n);
    simd().axpy(-0.37, x.data(), y2.data(), n);
    std::vector<double> o1(n), o2(n);
    ref.add_scaled(x.data(), 1.7, y.data(), o1.data(), n);
    simd().add_scaled(x.data(), 1.7, y.data(), o2.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(y1[i], y2[i], 1e-14 * (1.0 + std::abs(y1[i])));
        EXPECT_NEAR(o1[i], o2[i], 1e-14 * (1.0 + std::abs(o1[i])));
    }
}

TEST_P(KernelEquivalence, MatrixVector) {
    const std::size_t n = GetParam();
    const std::size_t rows = n / 2 + 3;
    RandomStream rng(13, n, 0);
    const auto a = Draw(rng, rows * n);
    const auto x = Draw(rng, n);
    const auto r = Draw(rng, rows);
    std::vector<double> o1(rows), o2(rows), t1(n), t2(n);
    ref.gemv(a.data(), rows, n, x.data(), o1.data());
    simd().gemv(a.data(), rows, n, x.data(), o2.data());
    ref.gemv_t(a.data(), rows, n, r.data(), t1.data());
    simd().gemv_t(a.data(), rows, n, r.data(), t2.data());
    for (std::size_t i = 0; i < rows; ++i) EXPECT_NEAR(o1[i], o2[i], 1e-13 * (1.0 + n));
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(t1[j], t2[j], 1e-13 * (1.0 + rows));
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquivalence,
                         ::testing::Values(0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 1001));

TEST(Kernels, ScalarValuesAreExact) {
    const auto& k = kernels::table(Backend::scalar);
    const double a[] = {1.0, -2.0, 3.0};
    const double b[] = {4.0, 5.0, -6.0};
    EXPECT_EQ(k.dot(a, b, 3), -24.0);
    EXPECT_EQ(k.squared_distance(a, b, 3), 9.0 + 49.0 + 81.0);
    EXPECT_EQ(k.max_abs(b, 3), 6.0);
    EXPECT_EQ(k.max_abs(b, 0), 0.0);
    const double m[] = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};  // 2 x 3
    double out[2];
    k.gemv(m, 2, 3, a, out);
    EXPECT_EQ(out[0], 6.0);
    EXPECT_EQ(out[1], 12.0);
    const double r[] = {1.0, -1.0};
    double t[3];
    k.gemv_t(m, 2, 3, r, t);
    EXPECT_EQ(t[0], -3.0);
    EXPECT_EQ(t[1], -3.0);
    EXPECT_EQ(t[2], -3.0);
}

TEST(Kernels, SelectBackendSwitchesActiveTable) {
    const Backend before = kernels::active_backend();
    kernels::select_backend(Backend::scalar);
    EXPECT_EQ(kernels::active_backend(), Backend::scalar);
    EXPECT_EQ(kernels::backend_name(Backend::scalar), "scalar");
    EXPECT_EQ(kernels::backend_name(Backend::avx2), "avx2");
    if (kernels::backend_available(Backend::avx2)) {
        kernels::select_backend(Backend::avx2);
        EXPECT_EQ(kernels::active_backend(), Backend::avx2);
    } else {
        EXPECT_THROW(kernels::select_backend(Backend::avx2), ConfigError);
    }
    kernels::select_backend(before);
}

}  // namespace
}  // namespace sparse_iht
