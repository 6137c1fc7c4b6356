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

// Basic stationary points of min f(x) s.t. ||x||_0 <= s and their HT
// stability.
//
// A feasible x* with grad f(x*) = 0 on supp(x*) is HT-stable for a stepsize
// gamma when
//
//   min{|x*_i| : i in I_s(x*)}  >=  gamma * max{|grad_j f(x*)| : j not in supp(x*)}
//
// strictly HT-stable when the inequality is strict, and HT-unstable when it
// fails. If ||x*||_0 < s the left side is 0, so stability needs grad f = 0.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparse_iht/core_types.hpp"
#include "sparse_iht/objective.hpp"

namespace sparse_iht {

enum class Stability { strictly_stable, stable_boundary, unstable, not_stationary };

/// "strictly_stable", "stable_boundary", "unstable", "not_stationary".
std::string_view stability_key(Stability s);
/// Human label used in tables, e.g. "strictly HT-stable".
std::string_view stability_label(Stability s);
Stability parse_stability_key(std::string_view key);

inline bool is_stable(Stability s) { return s == Stability::strictly_stable || s == Stability::stable_boundary; }

// Margin separating the strict and boundary cases of the stability test.
inline constexpr double kStabilityMargin = 1e-12;

struct StationaryPoint {
    // 1-based position in support-lexicographic enumeration order; 0 when the
    // point did not come from enumerate_stationary.
    std::size_t id = 0;
    DenseVector point;
    SupportSet support;
    DenseVector grad;
    double f_value = 0.0;
    Stability classification = Stability::not_stationary;
    double min_abs_on_top = 0.0;
    double gamma_max_grad_off = 0.0;
    // Restricted Gram matrix was singular; minimum-norm solution used.
    bool degenerate = false;
};

StationaryPoint classify(const Objective& obj, const DenseVector& x, double gamma, const SparsityBudget& budget);

inline constexpr std::size_t kMaxEnumeratedSupports = 1000000;

/// Every basic stationary point obtained from the restricted normal equations
/// A_J^T A_J x_J = A_J^T y over |J| = s (plus smaller supports whose solution
/// zeroes the full gradient), classified at gamma, merged when equal within
/// 1e-10, and sorted by f ascending. Throws ConfigError when C(n, s) exceeds
/// kMaxEnumeratedSupports.
std::vector<StationaryPoint> enumerate_stationary(const QuadraticInstance& q, const SparsityBudget& budget,
                                                  double gamma, unsigned threads = 0);

struct Corollary4Pair {
    std::size_t unstable_id = 0;
    std::optional<std::size_t> witness_id;
};

struct Corollary4Report {
    std::vector<Corollary4Pair> pairs;
    bool holds = true;
};

/// For every unstable point, the lowest-f stable point if its f is strictly
/// smaller. `holds` is false when some unstable point has no such witness.
Corollary4Report check_corollary4(const std::vector<StationaryPoint>& points);

struct FixedPointCheck {
    bool member = false;
    std::size_t family_size = 0;
    bool family_truncated = false;
};

/// Whether p.point belongs to the output family of H_s(p - gamma grad f(p)).
FixedPointCheck check_fixed_point(const Objective& obj, const StationaryPoint& p, double gamma,
                                  const SparsityBudget& budget);

/// Fixed-width table: No., x_1..x_n, g_1..g_n, HT-stability. Rows in id order,
/// 4 decimals.
std::string stationary_table_text(const std::vector<StationaryPoint>& points);

/// JSON array, one object per point, 1-based supports, full precision values.
std::string stationary_to_json(const std::vector<StationaryPoint>& points, double gamma);

}  // namespace sparse_iht
