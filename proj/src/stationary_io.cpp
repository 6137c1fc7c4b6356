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

#include <json.hpp>

#include <algorithm>
#include <cstdio>

#include "format.hpp"
#include "sparse_iht/stationary.hpp"

namespace sparse_iht {
namespace {

std::string Pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string stationary_table_text(const std::vector<StationaryPoint>& points) {
    std::vector<const StationaryPoint*> rows;
    for (const auto& p : points) rows.push_back(&p);
    std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->id < b->id; });

    const std::size_t n = points.empty() ? 0 : points.front().point.size();
    std::string out = Pad("No.", 4);
    for (std::size_t i = 0; i < n; ++i) out += Pad("x" + std::to_string(i + 1), 10);
    for (std::size_t i = 0; i < n; ++i) out += Pad("g" + std::to_string(i + 1), 10);
    out += "  HT-stability\n";
    for (const auto* p : rows) {
        out += Pad(std::to_string(p->id), 4);
        for (std::size_t i = 0; i < n; ++i) out += Pad(detail::format_fixed4(p->point[i]), 10);
        for (std::size_t i = 0; i < n; ++i) out += Pad(detail::format_fixed4(p->grad[i]), 10);
        out += "  " + std::string(stability_label(p->classification));
        if (p->degenerate) out += " (degenerate)";
        out += "\n";
    }
    return out;
}

std::string stationary_to_json(const std::vector<StationaryPoint>& points, double gamma) {
    using nlohmann::json;
    json arr = json::array();
    for (const auto& p : points) {
        std::vector<std::size_t> support;
        for (std::size_t i : p.support.indices()) support.push_back(i + 1);
        arr.push_back(json{{"id", p.id},
                           {"x", p.point.vector()},
                           {"grad", p.grad.vector()},
                           {"support", support},
                           {"f", p.f_value},
                           {"classification", std::string(stability_key(p.classification))},
                           {"label", std::string(stability_label(p.classification))},
                           {"min_abs_on_top", p.min_abs_on_top},
                           {"gamma_max_grad_off", p.gamma_max_grad_off},
                           {"degenerate", p.degenerate},
                           {"gamma", gamma}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace sparse_iht
