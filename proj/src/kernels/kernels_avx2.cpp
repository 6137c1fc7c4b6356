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

// Compiled with -mavx2 -mfma. Nothing here may run before dispatch.cpp has
// confirmed CPU support.

#include <immintrin.h>

#include <cmath>

#include "kernels_internal.hpp"

namespace sparse_iht::kernels::detail {
namespace {

inline double HorizontalSum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double Dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double acc = HorizontalSum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc = std::fma(a[i], b[i], acc);
    return acc;
}

double SquaredDistance(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = HorizontalSum(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s = std::fma(d, d, s);
    }
    return s;
}

double MaxAbs(const double* a, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double r = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
    for (; i < n; ++i) r = std::fmax(r, std::fabs(a[i]));
    return r;
}

void Axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

void AddScaled(const double* x, double alpha, const double* y, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) out[i] = std::fma(alpha, y[i], x[i]);
}

void Gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* out) {
    for (std::size_t r = 0; r < rows; ++r) out[r] = Dot(a + r * cols, x, cols);
}

void GemvT(const double* a, std::size_t rows, std::size_t cols, const double* r, double* out) {
    for (std::size_t c = 0; c < cols; ++c) out[c] = 0.0;
    for (std::size_t i = 0; i < rows; ++i) Axpy(r[i], a + i * cols, out, cols);
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{Backend::avx2, &Dot, &SquaredDistance, &MaxAbs,
                               &Axpy, &AddScaled, &Gemv, &GemvT};
    return t;
}

}  // namespace sparse_iht::kernels::detail
