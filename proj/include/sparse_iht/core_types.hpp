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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sparse_iht {

/// Fixed-length vector of finite reals. Immutable once built.
class DenseVector {
public:
    explicit DenseVector(std::vector<double> entries);
    DenseVector(std::initializer_list<double> entries);

    static DenseVector zeros(std::size_t n);

    std::size_t size() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const noexcept { return entries_[i]; }
    std::span<const double> values() const noexcept { return entries_; }
    const std::vector<double>& vector() const noexcept { return entries_; }

    friend bool operator==(const DenseVector&, const DenseVector&) = default;

private:
    std::vector<double> entries_;
};

/// Row-major m x n matrix of finite reals.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);
    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const noexcept {
        return std::span<const double>(entries_).subspan(r * cols_, cols_);
    }
    const double* data() const noexcept { return entries_.data(); }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// Strictly increasing 0-based coordinate indices within an ambient dimension.
class SupportSet {
public:
    SupportSet(std::vector<std::size_t> indices, std::size_t dimension);
    static SupportSet all(std::size_t dimension);

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    bool contains(std::size_t i) const noexcept;

    SupportSet complement() const;
    SupportSet united(const SupportSet& other) const;

    /// 1-based indices joined by `sep`, e.g. "1;2".
    std::string to_one_based(char sep = ';') const;

    friend bool operator==(const SupportSet&, const SupportSet&) = default;
    friend auto operator<=>(const SupportSet& a, const SupportSet& b) { return a.indices_ <=> b.indices_; }

private:
    std::vector<std::size_t> indices_;
    std::size_t dimension_;
};

/// Sparsity level s of the constraint set {x : ||x||_0 <= s} in R^n, 1 <= s < n.
class SparsityBudget {
public:
    SparsityBudget(std::size_t s, std::size_t n);

    std::size_t s() const noexcept { return s_; }
    std::size_t n() const noexcept { return n_; }

private:
    std::size_t s_;
    std::size_t n_;
};

/// Every top-s index set of a vector. `sets.front()` is the canonical one.
struct IndexSetFamily {
    std::vector<SupportSet> sets;
    // The enumeration stopped at kMaxAlternatives; more tied sets exist.
    bool truncated = false;
};

inline constexpr std::size_t kMaxAlternatives = 1000;

/// Number of entries that are exactly nonzero.
std::size_t l0_norm(const DenseVector& x);

/// Indices of the exactly-nonzero entries.
SupportSet support_of(const DenseVector& x);

/// Vector equal to x on S and zero elsewhere.
DenseVector restrict_to(const DenseVector& x, const SupportSet& s);

/// All index sets of size s that maximise the sum of |x_i|.
///
/// The canonical set comes first: among ties it takes the lowest indices. The
/// remaining sets follow in lexicographic order of their index sequences. The
/// family holds more than one set iff the s-th and (s+1)-th largest magnitudes
/// coincide.
IndexSetFamily top_s_index_sets(const DenseVector& x, const SparsityBudget& budget);

/// Canonical top-s index set only; no enumeration of ties.
SupportSet canonical_top_s(std::span<const double> x, std::size_t s);

/// Binomial coefficient, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early when visit returns false.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator*(double alpha, const DenseVector& a);

double norm2(const DenseVector& x);
double distance(const DenseVector& a, const DenseVector& b);

}  // namespace sparse_iht
