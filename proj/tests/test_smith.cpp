#include <gtest/gtest.h>

#include "support.hpp"

using namespace fgmod;
using support::smith_defect;

namespace {

const RingSpec Z = RingSpec::integers();

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

Matrix act(const Matrix& A, const std::vector<Integer>& x) { return A * Matrix::column(x); }

// Every vector over Z/n of the given length.
std::vector<std::vector<Integer>> all_vectors(long long n, std::size_t len) {
    std::vector<std::vector<Integer>> out{{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::vector<Integer>> next;
        for (const auto& v : out)
            for (long long x = 0; x < n; ++x) {
                auto w = v;
                w.emplace_back(x);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

bool equal_mod(const Matrix& A, const Matrix& B, const RingSpec& R) { return A.reduced(R) == B.reduced(R); }

} // namespace

TEST(Smith, Examples) {
    EXPECT_EQ(smith_normal_form(Matrix::identity(2)).D, Matrix::identity(2));
    EXPECT_TRUE(smith_normal_form(Matrix(2, 3)).D.is_zero());
    EXPECT_EQ(smith_diagonal(Matrix{{2, 4}, {6, 8}}), ints({2, 4}));
}

TEST(Smith, HandlesEmptyAndRectangular) {
    EXPECT_TRUE(smith_diagonal(Matrix(0, 0)).empty());
    EXPECT_TRUE(smith_diagonal(Matrix(3, 0)).empty());
    EXPECT_EQ(smith_diagonal(Matrix{{4, 6, 10}}), ints({2}));
    EXPECT_EQ(smith_diagonal(Matrix{{0}, {0}, {-3}}), ints({3}));
    const Matrix A{{2, 0}, {0, 3}};
    EXPECT_EQ(smith_diagonal(A), ints({1, 6}));
    EXPECT_EQ(smith_defect(A, smith_normal_form(A)), "");
}

TEST(SmithProperty, RandomDecompositionsAreSound) {
    std::mt19937 rng(20261017);
    for (int t = 0; t < 300; ++t) {
        const Matrix A = support::random_matrix(rng, 5, 20);
        EXPECT_EQ(smith_defect(A, smith_normal_form(A)), "") << A.to_string();
    }
}

TEST(SmithProperty, DiagonalAgreesWithDeterminantOnSquareMatrices) {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Matrix A = support::random_matrix(rng, 4, 9);
        const std::size_t n = std::min(A.rows(), A.cols());
        A = A.row_slice(0, n).column_slice(0, n);
        Integer product = 1;
        for (const auto& d : smith_diagonal(A)) product *= d;
        EXPECT_EQ(product, abs_value(support::determinant(A)));
    }
}

TEST(SolveLinear, Examples) {
    EXPECT_EQ(*solve_linear(Z, Matrix::identity(2), ints({3, -4})), ints({3, -4}));
    EXPECT_FALSE(solve_linear(Z, Matrix{{2}}, ints({1})));
    const auto R6 = RingSpec::integers_mod(6);
    const auto x = solve_linear(R6, Matrix{{2}}, ints({4}));
    ASSERT_TRUE(x);
    EXPECT_EQ(R6.reduce(2 * (*x)[0]), 4);
    EXPECT_THROW(solve_linear(Z, Matrix{{1, 2}}, ints({1, 2})), Error);
}

TEST(KernelGenerators, Examples) {
    EXPECT_EQ(kernel_generators(Z, Matrix::identity(3)).cols(), 0u);
    const Matrix K = kernel_generators(Z, Matrix{{0}});
    ASSERT_EQ(K.cols(), 1u);
    EXPECT_EQ(abs_value(K(0, 0)), 1);
    const auto R4 = RingSpec::integers_mod(4);
    const Matrix K4 = kernel_generators(R4, Matrix{{2}});
    ASSERT_GE(K4.cols(), 1u);
    for (std::size_t c = 0; c < K4.cols(); ++c) EXPECT_EQ(R4.reduce(2 * K4(0, c)), 0);
    EXPECT_TRUE(ColumnEchelon(K4).contains(ints({2})) || ColumnEchelon(hconcat(K4, Matrix{{4}})).contains(ints({2})));
}

// Exhaustive oracle over small finite rings: kernels are complete and solvability matches search.
TEST(SmithProperty, KernelAndSolveMatchExhaustiveSearch) {
    std::mt19937 rng(99);
    for (long long n : {2, 3, 4, 6, 8}) {
        const auto R = RingSpec::integers_mod(n);
        for (int t = 0; t < 25; ++t) {
            Matrix A = support::random_matrix(rng, 3, 8).reduced(R);
            const Matrix K = kernel_generators(R, A);
            for (std::size_t c = 0; c < K.cols(); ++c) EXPECT_TRUE(act(A, K.column_vector(c)).reduced(R).is_zero());

            // Span of K over Z/n, by closing under addition.
            std::set<std::vector<Integer>> span{std::vector<Integer>(A.cols(), 0)};
            bool grew = true;
            while (grew) {
                grew = false;
                for (auto v : std::vector(span.begin(), span.end()))
                    for (std::size_t c = 0; c < K.cols(); ++c) {
                        std::vector<Integer> w(v.size());
                        for (std::size_t i = 0; i < v.size(); ++i) w[i] = R.reduce(v[i] + K(i, c));
                        grew = span.insert(w).second || grew;
                    }
            }
            const auto xs = all_vectors(n, A.cols());
            std::set<std::vector<Integer>> images;
            for (const auto& x : xs) {
                const Matrix y = act(A, x).reduced(R);
                images.insert(y.column_vector(0));
                if (y.is_zero()) { EXPECT_TRUE(span.count(x)) << "kernel misses a solution over Z/" << n; }
            }
            for (const auto& b : all_vectors(n, A.rows())) {
                const auto x = solve_linear(R, A, b);
                EXPECT_EQ(bool(x), images.count(b) > 0);
                if (x) { EXPECT_TRUE(equal_mod(act(A, *x), Matrix::column(b), R)); }
            }
        }
    }
}

TEST(ColumnEchelon, MembershipAndUntrackedUse) {
    const Matrix A{{2, 0}, {0, 3}};
    const ColumnEchelon E(A, false);
    EXPECT_EQ(E.rank(), 2u);
    EXPECT_TRUE(E.contains(ints({4, 9})));
    EXPECT_FALSE(E.contains(ints({1, 0})));
    EXPECT_THROW(E.kernel_basis(), Error);
    EXPECT_THROW(E.contains(ints({1})), Error);
    const ColumnEchelon F(Matrix{{1, 2, 3}, {2, 4, 6}});
    EXPECT_EQ(F.rank(), 1u);
    const Matrix K = F.kernel_basis();
    EXPECT_EQ(K.cols(), 2u);
    EXPECT_TRUE((Matrix{{1, 2, 3}, {2, 4, 6}} * K).is_zero());
}
