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

#include <fstream>
#include <sstream>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/instance_io.hpp"

namespace sparse_iht {
namespace {

using nlohmann::json;

std::vector<double> ParseCsvRow(const std::string& line, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const auto first = cell.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = cell.find_last_not_of(" \t\r");
        const std::string token = cell.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw IoError(where + ": cannot parse number '" + token + "'");
        }
    }
    return out;
}

std::vector<std::vector<double>> ReadCsv(const std::filesystem::path& path) {
    std::istringstream in(read_text_file(path));
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t\r")] == '#') continue;
        rows.push_back(ParseCsvRow(line, path.string() + ":" + std::to_string(line_no)));
    }
    if (rows.empty()) throw IoError(path.string() + ": no data");
    return rows;
}

template <typename Fn>
auto Wrap(const std::string& where, Fn&& fn) {
    try {
        return fn();
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        throw IoError(where + ": " + e.what());
    } catch (const json::exception& e) {
        throw IoError(where + ": " + e.what());
    }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QuadraticInstance parse_instance_json(std::string_view text) {
    return Wrap("instance JSON", [&] {
        const json doc = json::parse(text);
        if (!doc.is_object() || !doc.contains("A") || !doc.contains("y")) {
            throw IoError("instance JSON: expected an object with keys \"A\" and \"y\"");
        }
        const auto rows = doc.at("A").get<std::vector<std::vector<double>>>();
        const auto y = doc.at("y").get<std::vector<double>>();
        return QuadraticInstance(DenseMatrix::from_rows(rows), DenseVector(y));
    });
}

QuadraticInstance load_instance_json(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    return Wrap(path.string(), [&] { return parse_instance_json(text); });
}

QuadraticInstance load_instance_csv(const std::filesystem::path& matrix_path,
                                    const std::filesystem::path& vector_path) {
    const auto rows = ReadCsv(matrix_path);
    const auto vrows = ReadCsv(vector_path);
    std::vector<double> y;
    if (vrows.size() == 1) {
        y = vrows.front();
    } else {
        for (const auto& r : vrows) {
            if (r.size() != 1) throw IoError(vector_path.string() + ": expected one value per line");
            y.push_back(r.front());
        }
    }
    return Wrap(matrix_path.string(),
                [&] { return QuadraticInstance(DenseMatrix::from_rows(rows), DenseVector(y)); });
}

std::string instance_to_json(const QuadraticInstance& q) {
    json a = json::array();
    for (std::size_t r = 0; r < q.m(); ++r) {
        a.push_back(std::vector<double>(q.A.row(r).begin(), q.A.row(r).end()));
    }
    json doc{{"A", a}, {"y", q.y.vector()}};
    return doc.dump(2) + "\n";
}

QuadraticInstance resolve_instance(const std::string& source) {
    if (auto f = builtin_fixture(source)) return *std::move(f);
    if (const auto comma = source.find(','); comma != std::string::npos) {
        return load_instance_csv(source.substr(0, comma), source.substr(comma + 1));
    }
    if (std::filesystem::path(source).extension() == ".json") return load_instance_json(source);
    throw IoError("unknown instance '" + source + "': not a fixture, a .json file, or 'matrix.csv,vector.csv'");
}

}  // namespace sparse_iht
