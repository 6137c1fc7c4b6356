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

// Dense arithmetic kernels behind every inner loop of the library.
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The active table is picked once at load time from the
// CPU capabilities and can be overridden with select_backend(). Results of
// the vectorized kernels agree with the scalar ones up to reassociation of
// the floating-point sums; within one process the choice is fixed, so runs
// stay bit-reproducible.

#include <cstddef>
#include <span>
#include <string_view>

namespace sparse_iht::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
    Backend backend;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*squared_distance)(const double* a, const double* b, std::size_t n);
    double (*max_abs)(const double* a, std::size_t n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // out = x + alpha * y
    void (*add_scaled)(const double* x, double alpha, const double* y, double* out, std::size_t n);
    // out = A x, A row-major rows x cols
    void (*gemv)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* out);
    // out = A^T r, A row-major rows x cols
    void (*gemv_t)(const double* a, std::size_t rows, std::size_t cols, const double* r, double* out);
};

const KernelTable& scalar_table();

/// True when the backend was compiled in and the running CPU supports it.
bool backend_available(Backend b);

/// Table for a specific backend; throws ConfigError when unavailable.
const KernelTable& table(Backend b);

/// Table currently used by the library.
const KernelTable& active();

Backend active_backend();

/// Switches the process-wide backend. Not meant to be called while other
/// threads are inside library calls.
void select_backend(Backend b);

std::string_view backend_name(Backend b);

inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size());
}

inline double squared_norm(std::span<const double> a) {
    return active().dot(a.data(), a.data(), a.size());
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    return active().squared_distance(a.data(), b.data(), a.size());
}

inline double max_abs(std::span<const double> a) {
    return active().max_abs(a.data(), a.size());
}

}  // namespace sparse_iht::kernels
