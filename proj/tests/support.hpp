#pragma once

#include <random>
#include <string>

#include "fgmod/fgmod.hpp"

namespace support {

using fgmod::Integer;
using fgmod::Matrix;

/// Fraction-free Gaussian elimination; exact over Z.
inline Integer determinant(Matrix A) {
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    Integer sign = 1, previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && A(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(A(k, c), A(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / previous;
        previous = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    Matrix A(dim(rng), dim(rng));
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) A(r, c) = entry(rng);
    return A;
}

/// Empty string when the decomposition is sound for A, else a description of the first defect.
inline std::string smith_defect(const Matrix& A, const fgmod::SmithDecomposition& s) {
    if (!(s.U * A * s.V == s.D)) return "U A V != D";
    if (fgmod::abs_value(determinant(s.U)) != 1) return "U not unimodular";
    if (fgmod::abs_value(determinant(s.V)) != 1) return "V not unimodular";
    if (!(s.U * s.U_inverse == Matrix::identity(A.rows()))) return "U_inverse wrong";
    for (std::size_t r = 0; r < s.D.rows(); ++r)
        for (std::size_t c = 0; c < s.D.cols(); ++c)
            if (r != c && s.D(r, c) != 0) return "D not diagonal";
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) return "negative diagonal entry";
        if (i + 1 < d.size()) {
            if (d[i] == 0 && d[i + 1] != 0) return "zero before nonzero";
            if (d[i] != 0 && d[i + 1] % d[i] != 0) return "divisibility chain broken";
        }
    }
    return "";
}

inline fgmod::Presentation module(const fgmod::RingSpec& ring, const std::string& text) {
    return fgmod::parse_module(ring, text);
}

inline std::string canon(const fgmod::Presentation& P) { return fgmod::format_module(P); }

} // namespace support
