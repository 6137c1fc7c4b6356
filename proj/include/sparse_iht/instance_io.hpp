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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparse_iht/objective.hpp"

namespace sparse_iht {

/// Parses {"A": [[...], ...], "y": [...]}. Throws IoError on malformed input.
QuadraticInstance parse_instance_json(std::string_view text);
QuadraticInstance load_instance_json(const std::filesystem::path& path);

/// Matrix file: one row per line, comma separated. Vector file: one value per
/// line or a single comma-separated row. Blank lines and '#' comments skipped.
QuadraticInstance load_instance_csv(const std::filesystem::path& matrix_path,
                                    const std::filesystem::path& vector_path);

std::string instance_to_json(const QuadraticInstance& q);

/// Instances compiled into the library: "paper4x4" (full-precision values
/// whose 4-decimal rounding is the published matrix) and "paper4x4_printed"
/// (the 4-decimal values themselves).
std::optional<QuadraticInstance> builtin_fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Resolves a fixture name, a .json path, or "matrix.csv,vector.csv".
QuadraticInstance resolve_instance(const std::string& source);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sparse_iht
