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

#include <atomic>
#include <string>

#include "kernels_internal.hpp"
#include "sparse_iht/errors.hpp"

namespace sparse_iht::kernels {
namespace {

bool CpuHasAvx2() {
#if defined(SPARSE_IHT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* DetectBest() {
#if defined(SPARSE_IHT_HAVE_AVX2)
    if (CpuHasAvx2()) return &detail::avx2_table();
#endif
    return &scalar_table();
}

std::atomic<const KernelTable*>& Current() {
    static std::atomic<const KernelTable*> current{DetectBest()};
    return current;
}

}  // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return CpuHasAvx2();
    }
    return false;
}

const KernelTable& table(Backend b) {
    if (!backend_available(b)) {
        throw ConfigError("kernel backend '" + std::string(backend_name(b)) +
                          "' is not available on this build/CPU");
    }
#if defined(SPARSE_IHT_HAVE_AVX2)
    if (b == Backend::avx2) return detail::avx2_table();
#endif
    return scalar_table();
}

const KernelTable& active() { return *Current().load(std::memory_order_acquire); }

Backend active_backend() { return active().backend; }

void select_backend(Backend b) { Current().store(&table(b), std::memory_order_release); }

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace sparse_iht::kernels
