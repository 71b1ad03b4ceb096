#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "fgmod/matrix.hpp"

namespace fgmod {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., zeros last.
struct SmithDecomposition {
    Matrix U;
    Matrix D;
    Matrix V;
    Matrix U_inverse;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d(std::min(D.rows(), D.cols()));
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
        return d;
    }
};

namespace detail {

class SmithWork {
public:
    SmithWork(const Matrix& A, bool track) : A_(A), track_(track) {
        if (track_) {
            U_ = Matrix::identity(A.rows());
            Uinv_ = Matrix::identity(A.rows());
            V_ = Matrix::identity(A.cols());
        }
    }

    void run() {
        const std::size_t m = A_.rows(), n = A_.cols();
        std::size_t t = 0;
        while (t < m && t < n) {
            std::size_t pr = 0, pc = 0;
            if (!find_smallest(t, pr, pc)) break;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A_(i, t) == 0) continue;
                const Integer q = A_(i, t) / A_(t, t);
                if (q != 0) add_row(i, t, -q);
                if (A_(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A_(t, j) == 0) continue;
                const Integer q = A_(t, j) / A_(t, t);
                if (q != 0) add_col(j, t, -q);
                if (A_(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // The pivot must divide the rest of the block; otherwise fold an offending row in.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A_(i, j) % A_(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (!divides) continue;

            if (A_(t, t) < 0) negate_row(t);
            ++t;
        }
    }

    Matrix A_, U_, Uinv_, V_;

private:
    bool find_smallest(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < A_.rows(); ++i)
            for (std::size_t j = t; j < A_.cols(); ++j) {
                const Integer& x = A_(i, j);
                if (x == 0) continue;
                Integer ax = abs_value(x);
                if (!found || ax < best) {
                    found = true;
                    best = std::move(ax);
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    // row_t += q * row_s
    void add_row(std::size_t t, std::size_t s, const Integer& q) {
        for (std::size_t j = 0; j < A_.cols(); ++j) A_(t, j) += q * A_(s, j);
        if (!track_) return;
        for (std::size_t j = 0; j < U_.cols(); ++j) U_(t, j) += q * U_(s, j);
        for (std::size_t i = 0; i < Uinv_.rows(); ++i) Uinv_(i, s) -= q * Uinv_(i, t);
    }

    // col_t += q * col_s
    void add_col(std::size_t t, std::size_t s, const Integer& q) {
        for (std::size_t i = 0; i < A_.rows(); ++i) A_(i, t) += q * A_(i, s);
        if (!track_) return;
        for (std::size_t i = 0; i < V_.rows(); ++i) V_(i, t) += q * V_(i, s);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < A_.cols(); ++j) std::swap(A_(a, j), A_(b, j));
        if (!track_) return;
        for (std::size_t j = 0; j < U_.cols(); ++j) std::swap(U_(a, j), U_(b, j));
        for (std::size_t i = 0; i < Uinv_.rows(); ++i) std::swap(Uinv_(i, a), Uinv_(i, b));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < A_.rows(); ++i) std::swap(A_(i, a), A_(i, b));
        if (!track_) return;
        for (std::size_t i = 0; i < V_.rows(); ++i) std::swap(V_(i, a), V_(i, b));
    }

    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < A_.cols(); ++j) A_(r, j) = -A_(r, j);
        if (!track_) return;
        for (std::size_t j = 0; j < U_.cols(); ++j) U_(r, j) = -U_(r, j);
        for (std::size_t i = 0; i < Uinv_.rows(); ++i) Uinv_(i, r) = -Uinv_(i, r);
    }

    bool track_;
};

} // namespace detail

inline SmithDecomposition smith_normal_form(const Matrix& A) {
    detail::SmithWork work(A, true);
    work.run();
    return {std::move(work.U_), std::move(work.A_), std::move(work.V_), std::move(work.Uinv_)};
}

/// Diagonal of the Smith form only.
inline std::vector<Integer> smith_diagonal(const Matrix& A) {
    detail::SmithWork work(A, false);
    work.run();
    std::vector<Integer> d(std::min(A.rows(), A.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = work.A_(i, i);
    return d;
}

/// Lower column echelon form A * V = [E | 0] over Z, with V unimodular. Gives the column
/// lattice of A (membership, solving) and a Z-basis of its kernel.
class ColumnEchelon {
public:
    explicit ColumnEchelon(const Matrix& A, bool track_transform = true)
        : rows_(A.rows()), cols_(A.cols()), track_(track_transform) {
        const std::size_t height = rows_ + (track_ ? cols_ : 0);
        columns_.assign(cols_, std::vector<Integer>(height));
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < rows_; ++r) columns_[c][r] = A(r, c);
            if (track_) columns_[c][rows_ + c] = 1;
        }
        reduce();
    }

    std::size_t rank() const { return pivot_rows_.size(); }
    const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

    /// Columns form a Z-basis of {x : A x = 0}.
    Matrix kernel_basis() const {
        require_tracking();
        Matrix K(cols_, cols_ - rank());
        for (std::size_t k = rank(); k < cols_; ++k)
            for (std::size_t i = 0; i < cols_; ++i) K(i, k - rank()) = columns_[k][rows_ + i];
        return K;
    }

    /// Some x with A x = b, if one exists.
    std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const {
        require_tracking();
        std::vector<Integer> coeff;
        if (!reduce_target(b, &coeff)) return std::nullopt;
        std::vector<Integer> x(cols_);
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            if (coeff[k] == 0) continue;
            for (std::size_t i = 0; i < cols_; ++i) x[i] += coeff[k] * columns_[k][rows_ + i];
        }
        return x;
    }

    /// Whether b lies in the column lattice of A.
    bool contains(const std::vector<Integer>& b) const { return reduce_target(b, nullptr); }

private:
    void require_tracking() const {
        if (!track_) throw Error(ErrorCode::InvalidArgument, "echelon form built without transform");
    }

    void reduce() {
        std::size_t p = 0;
        for (std::size_t r = 0; r < rows_ && p < cols_; ++r) {
            while (true) {
                std::size_t best = cols_;
                for (std::size_t c = p; c < cols_; ++c) {
                    if (columns_[c][r] == 0) continue;
                    if (best == cols_ || abs_value(columns_[c][r]) < abs_value(columns_[best][r])) best = c;
                }
                if (best == cols_) break;
                std::swap(columns_[p], columns_[best]);
                bool clean = true;
                for (std::size_t c = p + 1; c < cols_; ++c) {
                    if (columns_[c][r] == 0) continue;
                    const Integer q = columns_[c][r] / columns_[p][r];
                    axpy(columns_[c], columns_[p], -q);
                    if (columns_[c][r] != 0) clean = false;
                }
                if (clean) {
                    pivot_rows_.push_back(r);
                    ++p;
                    break;
                }
            }
        }
    }

    static void axpy(std::vector<Integer>& y, const std::vector<Integer>& x, const Integer& q) {
        for (std::size_t i = 0; i < y.size(); ++i)
            if (x[i] != 0) y[i] += q * x[i];
    }

    bool reduce_target(const std::vector<Integer>& b, std::vector<Integer>* coeff) const {
        if (b.size() != rows_)
            throw Error(ErrorCode::DimensionMismatch,
                        "vector of length " + std::to_string(b.size()) + " against " + std::to_string(rows_) + " rows");
        std::vector<Integer> rest = b;
        if (coeff) coeff->assign(rank(), 0);
        std::size_t r = 0;
        for (std::size_t k = 0; k < rank(); ++k) {
            const std::size_t pr = pivot_rows_[k];
            for (; r < pr; ++r)
                if (rest[r] != 0) return false;
            const Integer& pivot = columns_[k][pr];
            if (rest[pr] % pivot != 0) return false;
            const Integer q = rest[pr] / pivot;
            for (std::size_t i = pr; i < rows_; ++i)
                if (columns_[k][i] != 0) rest[i] -= q * columns_[k][i];
            if (coeff) (*coeff)[k] = q;
            r = pr + 1;
        }
        for (; r < rows_; ++r)
            if (rest[r] != 0) return false;
        return true;
    }

    std::size_t rows_;
    std::size_t cols_;
    bool track_;
    std::vector<std::vector<Integer>> columns_;
    std::vector<std::size_t> pivot_rows_;
};

/// [A | n I] over Z/n; A itself over Z.
inline Matrix lift_to_integers(const RingSpec& ring, const Matrix& A) {
    if (ring.is_integers()) return A;
    return hconcat(A, ring.modulus() * Matrix::identity(A.rows()));
}

/// Generators of {x : A x = 0} over the ring, as columns.
inline Matrix kernel_generators(const RingSpec& ring, const Matrix& A) {
    if (ring.is_integers()) return ColumnEchelon(A).kernel_basis();
    const Matrix K = ColumnEchelon(lift_to_integers(ring, A)).kernel_basis();
    return K.row_slice(0, A.cols()).reduced(ring).without_zero_columns();
}

/// Some x with A x = b over the ring, if one exists.
inline std::optional<std::vector<Integer>> solve_linear(const RingSpec& ring, const Matrix& A,
                                                         const std::vector<Integer>& b) {
    if (b.size() != A.rows())
        throw Error(ErrorCode::DimensionMismatch, "right-hand side does not match " + A.shape());
    auto y = ColumnEchelon(lift_to_integers(ring, A)).solve(b);
    if (!y) return std::nullopt;
    std::vector<Integer> x(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(A.cols()));
    for (auto& v : x) v = ring.reduce(v);
    return x;
}

} // namespace fgmod
