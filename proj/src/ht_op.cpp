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

#include "sparse_iht/ht_op.hpp"

#include <cmath>
#include <string>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/kernels.hpp"

namespace sparse_iht {

HTResult hard_threshold(const DenseVector& x, const SparsityBudget& budget) {
    IndexSetFamily family = top_s_index_sets(x, budget);
    SupportSet chosen = family.sets.front();
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i : chosen.indices()) {
        // +0.0 for a kept signed zero.
        out[i] = x[i] == 0.0 ? 0.0 : x[i];
    }
    const bool tie = family.sets.size() > 1;
    return HTResult{DenseVector(std::move(out)), std::move(chosen), std::move(family.sets), tie,
                    family.truncated};
}

DenseVector gradient_step(const DenseVector& x, const DenseVector& grad, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("stepsize must be positive and finite, got " + std::to_string(gamma));
    }
    if (x.size() != grad.size()) {
        throw DomainError("gradient length " + std::to_string(grad.size()) +
                          " differs from iterate length " + std::to_string(x.size()));
    }
    std::vector<double> v(x.size());
    kernels::active().add_scaled(x.values().data(), -gamma, grad.values().data(), v.data(), x.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw DomainError("gradient step overflowed at index " + std::to_string(i));
        }
    }
    return DenseVector(std::move(v));
}

HTResult ht_gradient_map(const DenseVector& x, const DenseVector& grad, double gamma,
                         const SparsityBudget& budget) {
    return hard_threshold(gradient_step(x, grad, gamma), budget);
}

}  // namespace sparse_iht
