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

#include <vector>

#include "sparse_iht/core_types.hpp"

namespace sparse_iht {

/// Output of the hard thresholding projection H_s.
struct HTResult {
    DenseVector projected;
    SupportSet chosen;
    // Every minimising index set, canonical first. Capped at kMaxAlternatives.
    std::vector<SupportSet> alternatives;
    bool tie_occurred = false;
    bool alternatives_truncated = false;
};

/// Euclidean projection of x onto {z : ||z||_0 <= s}: keeps the s largest
/// magnitudes, ties resolved towards lower indices.
HTResult hard_threshold(const DenseVector& x, const SparsityBudget& budget);

/// hard_threshold(x - gamma * grad). Throws DomainError on a non-positive
/// stepsize, mismatched sizes, or a non-finite step.
HTResult ht_gradient_map(const DenseVector& x, const DenseVector& grad, double gamma,
                         const SparsityBudget& budget);

/// x - gamma * grad, the point H_s is applied to.
DenseVector gradient_step(const DenseVector& x, const DenseVector& grad, double gamma);

}  // namespace sparse_iht
