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

#include <cmath>

#include "kernels_internal.hpp"

namespace sparse_iht::kernels {
namespace {

double Dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double SquaredDistance(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

double MaxAbs(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i]));
    return m;
}

void Axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void AddScaled(const double* x, double alpha, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

void Gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* out) {
    for (std::size_t r = 0; r < rows; ++r) out[r] = Dot(a + r * cols, x, cols);
}

void GemvT(const double* a, std::size_t rows, std::size_t cols, const double* r, double* out) {
    for (std::size_t c = 0; c < cols; ++c) out[c] = 0.0;
    for (std::size_t i = 0; i < rows; ++i) Axpy(r[i], a + i * cols, out, cols);
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{Backend::scalar, &Dot, &SquaredDistance, &MaxAbs,
                               &Axpy, &AddScaled, &Gemv, &GemvT};
    return t;
}

}  // namespace sparse_iht::kernels
