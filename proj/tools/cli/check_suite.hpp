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

#include <cstdint>
#include <string>
#include <vector>

#include "sparse_iht/core_types.hpp"
#include "sparse_iht/objective.hpp"

namespace sparse_iht::cli {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Numerical invariants of one instance: gradient vs finite differences,
/// RSS/RSC inequalities on random sparse pairs, descent certificates from
/// random starts, and (when enumeration is feasible) stability/fixed-point
/// equivalence, the unstable-has-lower-stable ordering, and enumeration
/// completeness against IHT limits.
std::vector<CheckItem> run_check_suite(const QuadraticInstance& q, const SparsityBudget& budget, double gamma,
                                       std::uint64_t seed);

}  // namespace sparse_iht::cli
