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

#include "sparse_iht/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/kernels.hpp"

namespace sparse_iht {
namespace {

void RequireFinite(std::span<const double> v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw DomainError(std::string(what) + ": non-finite entry at index " + std::to_string(i));
        }
    }
}

void RequireSameSize(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) {
        throw DomainError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
    }
}

}  // namespace

DenseVector::DenseVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("DenseVector: length must be positive");
    RequireFinite(entries_, "DenseVector");
}

DenseVector::DenseVector(std::initializer_list<double> entries)
    : DenseVector(std::vector<double>(entries)) {}

DenseVector DenseVector::zeros(std::size_t n) { return DenseVector(std::vector<double>(n, 0.0)); }

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
    if (rows_ == 0 || cols_ == 0) throw DomainError("DenseMatrix: dimensions must be positive");
    if (entries_.size() != rows_ * cols_) {
        throw DomainError("DenseMatrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                          std::to_string(entries_.size()));
    }
    RequireFinite(entries_, "DenseMatrix");
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty()) throw DomainError("DenseMatrix: empty matrix");
    const std::size_t cols = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DomainError("DenseMatrix: ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return DenseMatrix(rows.size(), cols, std::move(flat));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return DenseMatrix(n, n, std::move(e));
}

SupportSet::SupportSet(std::vector<std::size_t> indices, std::size_t dimension)
    : indices_(std::move(indices)), dimension_(dimension) {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] >= dimension_) {
            throw DomainError("SupportSet: index " + std::to_string(indices_[i]) +
                              " out of range for dimension " + std::to_string(dimension_));
        }
        if (i > 0 && indices_[i] <= indices_[i - 1]) {
            throw DomainError("SupportSet: indices must be strictly increasing");
        }
    }
}

SupportSet SupportSet::all(std::size_t dimension) {
    std::vector<std::size_t> idx(dimension);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return SupportSet(std::move(idx), dimension);
}

bool SupportSet::contains(std::size_t i) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

SupportSet SupportSet::complement() const {
    std::vector<std::size_t> out;
    out.reserve(dimension_ - indices_.size());
    for (std::size_t i = 0; i < dimension_; ++i) {
        if (!contains(i)) out.push_back(i);
    }
    return SupportSet(std::move(out), dimension_);
}

SupportSet SupportSet::united(const SupportSet& other) const {
    if (other.dimension_ != dimension_) throw DomainError("SupportSet: dimension mismatch in union");
    std::vector<std::size_t> out;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                   std::back_inserter(out));
    return SupportSet(std::move(out), dimension_);
}

std::string SupportSet::to_one_based(char sep) const {
    std::string s;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i > 0) s += sep;
        s += std::to_string(indices_[i] + 1);
    }
    return s;
}

SparsityBudget::SparsityBudget(std::size_t s, std::size_t n) : s_(s), n_(n) {
    if (s_ < 1 || s_ >= n_) {
        throw ConfigError("sparsity budget requires 1 <= s < n (got s=" + std::to_string(s_) +
                          ", n=" + std::to_string(n_) + ")");
    }
}

std::size_t l0_norm(const DenseVector& x) {
    return static_cast<std::size_t>(
        std::count_if(x.values().begin(), x.values().end(), [](double v) { return v != 0.0; }));
}

SupportSet support_of(const DenseVector& x) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0.0) idx.push_back(i);
    }
    return SupportSet(std::move(idx), x.size());
}

DenseVector restrict_to(const DenseVector& x, const SupportSet& s) {
    if (s.dimension() != x.size()) throw DomainError("restrict_to: dimension mismatch");
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i : s.indices()) out[i] = x[i];
    return DenseVector(std::move(out));
}

namespace {

// Positions sorted by descending magnitude; equal magnitudes by ascending index.
std::vector<std::size_t> MagnitudeOrder(std::span<const double> x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(x[a]) > std::fabs(x[b]);
    });
    return order;
}

}  // namespace

SupportSet canonical_top_s(std::span<const double> x, std::size_t s) {
    if (s > x.size()) throw DomainError("canonical_top_s: s exceeds dimension");
    std::vector<std::size_t> order = MagnitudeOrder(x);
    order.resize(s);
    std::sort(order.begin(), order.end());
    return SupportSet(std::move(order), x.size());
}

IndexSetFamily top_s_index_sets(const DenseVector& x, const SparsityBudget& budget) {
    if (budget.n() != x.size()) {
        throw DomainError("top_s_index_sets: budget dimension " + std::to_string(budget.n()) +
                          " differs from vector length " + std::to_string(x.size()));
    }
    const std::size_t s = budget.s();
    const std::vector<std::size_t> order = MagnitudeOrder(x.values());
    // fabs maps -0.0 to +0.0, so signed zeros compare equal here.
    const double threshold = std::fabs(x[order[s - 1]]);

    std::vector<std::size_t> strict;
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::fabs(x[i]);
        if (a > threshold) {
            strict.push_back(i);
        } else if (a == threshold) {
            tied.push_back(i);
        }
    }
    const std::size_t pick = s - strict.size();

    IndexSetFamily family;
    family.truncated = binomial(tied.size(), pick) > kMaxAlternatives;
    for_each_combination(tied.size(), pick, [&](const std::vector<std::size_t>& c) {
        std::vector<std::size_t> idx = strict;
        for (std::size_t j : c) idx.push_back(tied[j]);
        std::sort(idx.begin(), idx.end());
        family.sets.emplace_back(std::move(idx), x.size());
        return family.sets.size() < kMaxAlternatives;
    });
    std::sort(family.sets.begin(), family.sets.end());
    return family;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t num = n - k + i;
        // r * num / i is exact at each step; guard the multiplication.
        if (r > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
        r = r * num / i;
    }
    return r;
}

DenseVector operator+(const DenseVector& a, const DenseVector& b) {
    RequireSameSize(a, b);
    std::vector<double> out(a.size());
    kernels::active().add_scaled(a.values().data(), 1.0, b.values().data(), out.data(), a.size());
    return DenseVector(std::move(out));
}

DenseVector operator-(const DenseVector& a, const DenseVector& b) {
    RequireSameSize(a, b);
    std::vector<double> out(a.size());
    kernels::active().add_scaled(a.values().data(), -1.0, b.values().data(), out.data(), a.size());
    return DenseVector(std::move(out));
}

DenseVector operator*(double alpha, const DenseVector& a) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i];
    return DenseVector(std::move(out));
}

double norm2(const DenseVector& x) { return std::sqrt(kernels::squared_norm(x.values())); }

double distance(const DenseVector& a, const DenseVector& b) {
    RequireSameSize(a, b);
    return std::sqrt(kernels::squared_distance(a.values(), b.values()));
}

}  // namespace sparse_iht
