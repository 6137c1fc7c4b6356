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

#include <json.hpp>

#include <chrono>
#include <map>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/instance_io.hpp"
#include "sparse_iht/stationary.hpp"
#include "support/test_util.hpp"

namespace sparse_iht {
namespace {

std::map<std::size_t, StationaryPoint> ById(const std::vector<StationaryPoint>& points) {
    std::map<std::size_t, StationaryPoint> out;
    for (const auto& p : points) out.emplace(p.id, p);
    return out;
}

TEST(Stationary, PaperTable) {
    const auto points = enumerate_stationary(*builtin_fixture("paper4x4"), SparsityBudget(2, 4), 0.06);
    ASSERT_EQ(points.size(), 6u);
    for (std::size_t i = 1; i < points.size(); ++i) EXPECT_LE(points[i - 1].f_value, points[i].f_value);
    const auto byid = ById(points);
    EXPECT_EQ(byid.at(1).support, SupportSet({0, 1}, 4));
    EXPECT_EQ(byid.at(6).support, SupportSet({2, 3}, 4));
    EXPECT_NEAR(byid.at(1).point[0], 1.3474, 5e-5);
    EXPECT_NEAR(byid.at(2).point[2], 0.0177, 5e-5);
    EXPECT_NEAR(byid.at(3).grad[2], -0.0029, 5e-5);
    const Stability expect[] = {Stability::strictly_stable, Stability::unstable, Stability::strictly_stable,
                                Stability::unstable,        Stability::unstable, Stability::unstable};
    for (std::size_t id = 1; id <= 6; ++id) EXPECT_EQ(byid.at(id).classification, expect[id - 1]) << id;
    const std::string table = stationary_table_text(points);
    EXPECT_NE(table.find("strictly HT-stable"), std::string::npos);
    EXPECT_NE(table.find("   1    1.3474    1.0331    0.0000    0.0000"), std::string::npos);
}

TEST(Stationary, IdentityInstanceOnlyTopSupportIsStable) {
    const QuadraticInstance q(DenseMatrix::identity(4), DenseVector{4.0, -3.0, 2.0, 1.0});
    const double gamma = rss_constant(q, SparsityBudget(2, 4)).max_stepsize();
    const auto points = enumerate_stationary(q, SparsityBudget(2, 4), gamma);
    ASSERT_EQ(points.size(), 6u);
    for (const auto& p : points) {
        const bool top = p.support == SupportSet({0, 1}, 4);
        EXPECT_EQ(p.classification, top ? Stability::strictly_stable : Stability::unstable);
    }
}

TEST(Stationary, TiedMagnitudesGiveBoundaryStability) {
    const QuadraticInstance q(DenseMatrix::identity(3), DenseVector{1.0, -3.0, 1.0});
    const SparsityBudget budget(2, 3);
    const QuadraticObjective obj(q);
    const double gamma = rss_constant(q, budget).max_stepsize();
    const auto byid = ById(enumerate_stationary(q, budget, gamma));
    EXPECT_EQ(byid.at(1).classification, Stability::stable_boundary);  // {1,2}
    EXPECT_EQ(byid.at(2).classification, Stability::unstable);         // {1,3}
    EXPECT_EQ(byid.at(3).classification, Stability::stable_boundary);  // {2,3}
    const FixedPointCheck fp = check_fixed_point(obj, byid.at(1), gamma, budget);
    EXPECT_TRUE(fp.member);
    EXPECT_EQ(fp.family_size, 2u);
}

TEST(Stationary, RandomInstancesSelfConsistent) {
    RandomStream rng(17);
    for (int inst = 0; inst < 25; ++inst) {
        const std::size_t n = 3 + rng.integer(0, 5);
        const std::size_t s = 1 + rng.integer(0, n - 2);
        const QuadraticInstance q = testing::RandomInstance(rng, n + 2, n);
        const SparsityBudget budget(s, n);
        const QuadraticObjective obj(q);
        const double gamma = 0.9 * rss_constant(q, budget).max_stepsize();
        const auto points = enumerate_stationary(q, budget, gamma);
        EXPECT_EQ(points.size(), binomial(n, s));
        for (const auto& p : points) {
            for (std::size_t i : p.support.indices()) EXPECT_NEAR(p.grad[i], 0.0, 1e-9);
            const StationaryPoint again = classify(obj, p.point, gamma, budget);
            EXPECT_EQ(again.classification, p.classification);
            EXPECT_EQ(check_fixed_point(obj, p, gamma, budget).member, is_stable(p.classification));
        }
        EXPECT_TRUE(check_corollary4(points).holds);
    }
}

TEST(Stationary, UnderdeterminedInstancesAgreeWithFixedPointCheck) {
    // m < s: interpolating points with fewer than s nonzeros carry a gradient
    // that is zero up to rounding.
    RandomStream rng(19);
    std::size_t sparse_points = 0;
    for (int inst = 0; inst < 40; ++inst) {
        const QuadraticInstance q = testing::RandomInstance(rng, 3, 7);
        const SparsityBudget budget(4, 7);
        const QuadraticObjective obj(q);
        const double gamma = rss_constant(q, budget).max_stepsize();
        for (const auto& p : enumerate_stationary(q, budget, gamma)) {
            EXPECT_EQ(check_fixed_point(obj, p, gamma, budget).member, is_stable(p.classification));
            if (l0_norm(p.point) < 4) {
                ++sparse_points;
                EXPECT_EQ(p.classification, Stability::stable_boundary);
            }
        }
    }
    EXPECT_GT(sparse_points, 0u);
}

TEST(Stationary, StabilityIsMonotoneInGamma) {
    RandomStream rng(18);
    for (int inst = 0; inst < 10; ++inst) {
        const QuadraticInstance q = testing::RandomInstance(rng, 7, 6);
        const SparsityBudget budget(3, 6);
        const double g = rss_constant(q, budget).max_stepsize();
        const auto small = ById(enumerate_stationary(q, budget, 0.2 * g));
        const auto large = ById(enumerate_stationary(q, budget, g));
        for (const auto& [id, p] : large) {
            if (is_stable(p.classification)) EXPECT_TRUE(is_stable(small.at(id).classification));
        }
    }
}

TEST(Stationary, RankDeficientInstanceMarksDegenerate) {
    // Columns 1 and 2 are identical.
    const QuadraticInstance q(DenseMatrix::from_rows({{1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 1.0, 1.0}}),
                              DenseVector{1.0, 2.0, 3.0});
    const auto points = enumerate_stationary(q, SparsityBudget(2, 3), 0.1);
    const auto byid = ById(points);
    EXPECT_TRUE(std::any_of(points.begin(), points.end(), [](const auto& p) { return p.degenerate; }));
    for (const auto& p : points) EXPECT_NE(p.classification, Stability::not_stationary);
}

TEST(Stationary, ClassifyDetectsNonStationaryAndInfeasible) {
    const QuadraticObjective obj(*builtin_fixture("paper4x4"));
    const SparsityBudget budget(2, 4);
    EXPECT_EQ(classify(obj, DenseVector{1.0, 0.0, 0.0, 0.0}, 0.06, budget).classification,
              Stability::not_stationary);
    EXPECT_THROW(classify(obj, DenseVector{1.0, 1.0, 1.0, 0.0}, 0.06, budget), DomainError);
    EXPECT_THROW(classify(obj, DenseVector::zeros(4), 0.0, budget), ConfigError);
}

TEST(Stationary, KeysRoundTrip) {
    for (Stability s : {Stability::strictly_stable, Stability::stable_boundary, Stability::unstable,
                        Stability::not_stationary}) {
        EXPECT_EQ(parse_stability_key(stability_key(s)), s);
    }
    EXPECT_THROW(parse_stability_key("wobbly"), DomainError);
}

TEST(Stationary, RefusesHugeEnumeration) {
    RandomStream rng(3);
    const QuadraticInstance q = testing::RandomInstance(rng, 4, 40);
    EXPECT_THROW(enumerate_stationary(q, SparsityBudget(10, 40), 0.01), ConfigError);
}

TEST(Stationary, JsonCarriesOneBasedSupport) {
    const auto points = enumerate_stationary(*builtin_fixture("paper4x4"), SparsityBudget(2, 4), 0.06);
    const auto doc = nlohmann::json::parse(stationary_to_json(points, 0.06));
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 6u);
    EXPECT_EQ(doc[0].at("id"), 1);
    EXPECT_EQ(doc[0].at("support"), nlohmann::json::array({1, 2}));
    EXPECT_EQ(doc[0].at("classification"), "strictly_stable");
}

}  // namespace
}  // namespace sparse_iht
