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

// Reproducible random streams.
//
// A stream is keyed by (master_seed, a, b). The key is folded through
// SplitMix64 into a std::mt19937_64 seed; uniforms take the top 53 bits of
// each 64-bit draw and normals come from the Box-Muller transform (cosine
// branch first, sine branch cached for the next call). mt19937_64 output is
// fixed by the standard, so streams do not depend on the standard library.

#include <cstdint>
#include <optional>
#include <random>

namespace sparse_iht {

std::uint64_t splitmix64(std::uint64_t& state);

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b);

class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b);
    explicit RandomStream(std::uint64_t seed);

    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal.
    double normal();
    /// Uniform integer on [lo, hi].
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

}  // namespace sparse_iht
