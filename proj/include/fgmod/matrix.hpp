#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgmod/integer.hpp"
#include "fgmod/ring.hpp"

namespace fgmod {

/// Dense integer matrix, row-major. Module elements are columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            for (long long x : row) data_.emplace_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix diagonal(const std::vector<Integer>& entries) {
        Matrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    static Matrix column(const std::vector<Integer>& entries) {
        Matrix m(entries.size(), 1);
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> column_vector(std::size_t c) const {
        std::vector<Integer> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Matrix column_slice(std::size_t first, std::size_t count) const {
        Matrix m(rows_, count);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
        return m;
    }

    Matrix row_slice(std::size_t first, std::size_t count) const {
        Matrix m(count, cols_);
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
        return m;
    }

    Matrix select_columns(const std::vector<std::size_t>& which) const {
        Matrix m(rows_, which.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < which.size(); ++c) m(r, c) = (*this)(r, which[c]);
        return m;
    }

    Matrix select_rows(const std::vector<std::size_t>& which) const {
        Matrix m(which.size(), cols_);
        for (std::size_t r = 0; r < which.size(); ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(which[r], c);
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool column_is_zero(std::size_t c) const {
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, c) != 0) return false;
        return true;
    }

    /// Reduces every entry into the ring's canonical representatives.
    Matrix reduced(const RingSpec& ring) const {
        if (ring.is_integers()) return *this;
        Matrix m = *this;
        for (auto& x : m.data_) x = ring.reduce(x);
        return m;
    }

    /// Drops columns that are identically zero.
    Matrix without_zero_columns() const {
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!column_is_zero(c)) keep.push_back(c);
        return select_columns(keep);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + a.shape() + " by " + b.shape());
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Integer& y = b(k, j);
                    if (y != 0) p(i, j) += x * y;
                }
            }
        return p;
    }

    friend Matrix operator*(const Integer& s, const Matrix& a) {
        Matrix m = a;
        for (auto& x : m.data_) x *= s;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            s += r == 0 ? "[" : ",[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) s += ",";
                s += (*this)(r, c).str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// [a | b]
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw Error(ErrorCode::DimensionMismatch, "hconcat of " + a.shape() + " and " + b.shape());
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

/// Block diagonal sum.
inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

/// A matrix over a ring: entries are kept reduced into canonical representatives.
struct MatrixR {
    RingSpec ring = RingSpec::integers();
    Matrix entries;

    MatrixR() = default;
    MatrixR(RingSpec r, const Matrix& m) : ring(std::move(r)), entries(m.reduced(ring)) {}
};

} // namespace fgmod
