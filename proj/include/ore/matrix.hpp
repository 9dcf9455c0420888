#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ore/error.hpp"
#include "ore/rational.hpp"

namespace ore {

using RatVector = std::vector<Rat>;

/// Dense row-major matrix of rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
    static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
        RatMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw PreconditionError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    RatVector multiply(std::span<const Rat> v) const {
        if (v.size() != cols_) throw PreconditionError("matrix-vector dimension mismatch");
        RatVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // increasing column indices
};

/// Gauss-Jordan elimination. The pivot for each column is the first row
/// (from the top of the unreduced block) with a nonzero entry.
inline RrefResult rref(RatMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, lead_row);

        const Rat scale = m(lead_row, col).inverse();
        support.clear();
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (m(lead_row, c).is_zero()) continue;
            if (!scale.is_one()) m(lead_row, c) *= scale;
            support.push_back(c);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            const Rat factor = m(r, col);
            for (std::size_t c : support) m(r, c) -= factor * m(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}, one vector per free column, in increasing order
/// of the free column. Each vector has a 1 at its free column.
inline std::vector<RatVector> nullspace_basis(const RatMatrix& m) {
    auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis) {
        for (const auto& entry : m.multiply(v))
            if (!entry.is_zero()) throw InternalError("nullspace vector failed verification");
    }
    return basis;
}

/// Coefficients c with sum_i c_i basis[i] == v, or nullopt when v is not in
/// the span. Coefficients of non-pivot basis vectors are zero.
inline std::optional<RatVector> in_span(std::span<const Rat> v, const std::vector<RatVector>& basis) {
    for (const auto& b : basis)
        if (b.size() != v.size()) throw PreconditionError("in_span: vector length mismatch");
    RatMatrix aug(v.size(), basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) aug(i, j) = basis[j][i];
    for (std::size_t i = 0; i < v.size(); ++i) aug(i, basis.size()) = v[i];

    auto [reduced, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
    RatVector coeffs(basis.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = reduced(r, basis.size());
    return coeffs;
}

/// Sparse rational vector: sorted (index, nonzero value) pairs.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Rat>;

    SparseVector() = default;
    explicit SparseVector(std::map<std::size_t, Rat> entries) {
        for (auto& [i, v] : entries)
            if (!v.is_zero()) entries_.emplace_back(i, std::move(v));
    }

    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t leading_index() const { return entries_.front().first; }
    const Rat& leading_value() const { return entries_.front().second; }

    /// *this - factor * other
    SparseVector minus_scaled(const Rat& factor, const SparseVector& other) const {
        SparseVector out;
        out.entries_.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                out.entries_.push_back(*a++);
            } else if (a == entries_.end() || b->first < a->first) {
                out.entries_.emplace_back(b->first, -(factor * b->second));
                ++b;
            } else {
                Rat v = a->second - factor * b->second;
                if (!v.is_zero()) out.entries_.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        return out;
    }

    SparseVector scaled(const Rat& factor) const {
        SparseVector out;
        if (factor.is_zero()) return out;
        out.entries_.reserve(entries_.size());
        for (const auto& [i, v] : entries_) out.entries_.emplace_back(i, v * factor);
        return out;
    }

private:
    std::vector<Entry> entries_;
};

/// Incrementally maintained row-echelon basis of a subspace of Q^N for
/// unbounded N. Membership tests reduce against the stored rows.
class LinearSpan {
public:
    /// Reduces v against the span; an empty result means v is in the span.
    SparseVector reduce(SparseVector v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.leading_index());
            if (it == rows_.end()) break;
            v = v.minus_scaled(v.leading_value(), it->second);
        }
        return v;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    /// Adds v; returns false when v was already in the span.
    bool insert(const SparseVector& v) {
        SparseVector r = reduce(v);
        if (r.empty()) return false;
        r = r.scaled(r.leading_value().inverse());
        rows_.emplace(r.leading_index(), std::move(r));
        return true;
    }

    std::size_t dimension() const noexcept { return rows_.size(); }

private:
    std::map<std::size_t, SparseVector> rows_;
};

}  // namespace ore
