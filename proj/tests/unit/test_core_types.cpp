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
#include <limits>

#include "sparse_iht/core_types.hpp"
#include "sparse_iht/errors.hpp"
#include "support/test_util.hpp"

namespace sparse_iht {
namespace {

TEST(DenseVector, RejectsEmptyAndNonFinite) {
    EXPECT_THROW(DenseVector(std::vector<double>{}), DomainError);
    EXPECT_THROW((DenseVector{1.0, std::numeric_limits<double>::quiet_NaN()}), DomainError);
    EXPECT_THROW((DenseVector{std::numeric_limits<double>::infinity()}), DomainError);
    EXPECT_EQ(DenseVector::zeros(3), (DenseVector{0.0, 0.0, 0.0}));
}

TEST(DenseMatrix, ShapeChecks) {
    EXPECT_THROW(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), DomainError);
    EXPECT_THROW(DenseMatrix::from_rows({{1.0, 2.0}, {3.0}}), DomainError);
    const DenseMatrix m = DenseMatrix::from_rows({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}});
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(1, 2), 6.0);
    EXPECT_EQ(DenseMatrix::identity(2)(1, 1), 1.0);
}

TEST(SupportSet, ValidationAndOps) {
    EXPECT_THROW(SupportSet({1, 1}, 3), DomainError);
    EXPECT_THROW(SupportSet({2, 1}, 3), DomainError);
    EXPECT_THROW(SupportSet({3}, 3), DomainError);
    const SupportSet a({0, 2}, 4);
    const SupportSet b({1, 2}, 4);
    EXPECT_EQ(a.united(b), SupportSet({0, 1, 2}, 4));
    EXPECT_EQ(a.complement(), SupportSet({1, 3}, 4));
    EXPECT_EQ(a.to_one_based(), "1;3");
    EXPECT_TRUE(a < b);
    EXPECT_TRUE(a.contains(2));
    EXPECT_FALSE(a.contains(1));
}

TEST(SparsityBudget, RequiresOneToNMinusOne) {
    EXPECT_THROW(SparsityBudget(0, 4), ConfigError);
    EXPECT_THROW(SparsityBudget(4, 4), ConfigError);
    EXPECT_NO_THROW(SparsityBudget(3, 4));
}

TEST(Helpers, L0AndRestrict) {
    const DenseVector x{0.0, -0.0, 1e-300, 2.0};
    EXPECT_EQ(l0_norm(x), 2u);
    EXPECT_EQ(support_of(x), SupportSet({2, 3}, 4));
    EXPECT_EQ(restrict_to(x, SupportSet({3}, 4)), (DenseVector{0.0, 0.0, 0.0, 2.0}));
    EXPECT_DOUBLE_EQ(norm2(DenseVector{3.0, 4.0}), 5.0);
    EXPECT_DOUBLE_EQ(distance(DenseVector{1.0, 1.0}, DenseVector{4.0, 5.0}), 5.0);
}

TEST(Helpers, BinomialAndCombinations) {
    EXPECT_EQ(binomial(10, 5), 252u);
    EXPECT_EQ(binomial(4, 0), 1u);
    EXPECT_EQ(binomial(3, 4), 0u);
    std::size_t count = 0;
    std::vector<std::size_t> prev;
    for_each_combination(7, 3, [&](const std::vector<std::size_t>& idx) {
        if (!prev.empty()) EXPECT_LT(prev, idx);
        prev = idx;
        ++count;
        return true;
    });
    EXPECT_EQ(count, 35u);
    count = 0;
    for_each_combination(7, 3, [&](const std::vector<std::size_t>&) { return ++count < 5; });
    EXPECT_EQ(count, 5u);
}

TEST(TopS, CanonicalPrefersLowestIndicesOnTies) {
    EXPECT_EQ(canonical_top_s(std::vector<double>{1.0, -3.0, 1.0}, 2), SupportSet({0, 1}, 3));
    const DenseVector x{2.0, -2.0, 2.0, 1.0};
    const IndexSetFamily fam = top_s_index_sets(x, SparsityBudget(2, 4));
    ASSERT_EQ(fam.sets.size(), 3u);
    EXPECT_EQ(fam.sets.front(), SupportSet({0, 1}, 4));
    EXPECT_FALSE(fam.truncated);
}

TEST(TopS, MatchesBruteForceOracle) {
    RandomStream rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 2 + rng.integer(0, 10);
        const std::size_t s = 1 + rng.integer(0, n - 2);
        std::vector<double> v(n);
        // Small integer magnitudes make ties and zeros common.
        for (double& e : v) e = static_cast<double>(rng.integer(0, 3)) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        if (trial % 2) {
            for (double& e : v) e += 1e-3 * rng.normal();
        }
        const DenseVector x(v);
        const IndexSetFamily fam = top_s_index_sets(x, SparsityBudget(s, n));
        EXPECT_EQ(fam.sets, testing::BruteForceTopS(x, s)) << "trial " << trial;
        EXPECT_EQ(fam.sets.front(), canonical_top_s(x.values(), s));
    }
}

TEST(TopS, TruncatesLargeTieFamilies) {
    const DenseVector x(std::vector<double>(16, 1.0));
    const IndexSetFamily fam = top_s_index_sets(x, SparsityBudget(8, 16));
    EXPECT_TRUE(fam.truncated);
    EXPECT_EQ(fam.sets.size(), kMaxAlternatives);
    EXPECT_EQ(fam.sets.front(), SupportSet({0, 1, 2, 3, 4, 5, 6, 7}, 16));
}

}  // namespace
}  // namespace sparse_iht
