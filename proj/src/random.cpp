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

#include "sparse_iht/random.hpp"

#include <cmath>
#include <numbers>

namespace sparse_iht {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = master_seed;
    std::uint64_t h = splitmix64(state);
    state = h ^ a;
    h = splitmix64(state);
    state = h ^ b;
    return splitmix64(state);
}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b)
    : engine_(derive_seed(master_seed, a, b)) {}

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
}

std::uint64_t RandomStream::integer(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return lo + engine_();
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return lo + v % span;
}

}  // namespace sparse_iht
