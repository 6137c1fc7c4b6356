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

#include "sparse_iht/instance_io.hpp"

namespace sparse_iht {
namespace {

// randn(4,4) and randn(4) drawn in single precision; each entry is the exact
// double value of the float32 sample.
QuadraticInstance Paper4x4() {
    return QuadraticInstance(
        DenseMatrix::from_rows({
            {-1.0655142068862915, 0.2248639166355133, -0.0896768793463707, 0.18756841123104095},
            {1.1626909971237183, -1.1228586435317993, -0.08232405036687851, -0.30587902665138245},
            {-0.2010776698589325, 0.5342404842376709, -0.0550861731171608, -1.345855951309204},
            {0.23077934980392456, -0.6404311656951904, -0.7467525005340576, 0.03776923194527626},
        }),
        DenseVector{-1.7861459255218506, -0.35556042194366455, -0.188109889626503, 0.3896152973175049});
}

QuadraticInstance Paper4x4Printed() {
    return QuadraticInstance(DenseMatrix::from_rows({
                                 {-1.0655, 0.2249, -0.0897, 0.1876},
                                 {1.1627, -1.1229, -0.0823, -0.3059},
                                 {-0.2011, 0.5342, -0.0551, -1.3459},
                                 {0.2308, -0.6404, -0.7468, 0.0378},
                             }),
                             DenseVector{-1.7861, -0.3556, -0.1881, 0.3896});
}

}  // namespace

std::optional<QuadraticInstance> builtin_fixture(std::string_view name) {
    if (name == "paper4x4") return Paper4x4();
    if (name == "paper4x4_printed") return Paper4x4Printed();
    return std::nullopt;
}

std::vector<std::string> fixture_names() { return {"paper4x4", "paper4x4_printed"}; }

}  // namespace sparse_iht
