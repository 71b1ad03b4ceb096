#include <gtest/gtest.h>

#include "support.hpp"

using namespace fgmod;
using support::canon;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec R4 = RingSpec::integers_mod(4);
const RingSpec R6 = RingSpec::integers_mod(6);
const RingSpec R8 = RingSpec::integers_mod(8);

Presentation mod(const std::string& s, const RingSpec& r = Z) { return parse_module(r, s); }

const std::vector<std::string> finite_sample{"0", "Z/2", "Z/3", "Z/4", "Z/2^2", "Z/6", "Z/2 + Z/4", "Z/8", "Z/9"};
const std::vector<std::string> mixed_sample{"0", "Z", "Z/2", "Z/4", "Z + Z/2", "Z/6", "Z^2"};

} // namespace

TEST(Hom, Examples) {
    EXPECT_EQ(canon(hom_module(mod("Z"), mod("Z/2 + Z"))), "Z + Z/2");
    EXPECT_EQ(canon(hom_module(mod("Z/2"), mod("Z/4"))), "Z/2");
    EXPECT_EQ(canon(hom_module(mod("Z/2"), mod("Z/3"))), "0");
    EXPECT_EQ(canon(hom_module(mod("Z/2"), mod("Z"))), "0");
    EXPECT_EQ(canon(hom_module(mod("Z^2"), mod("Z"))), "Z^2");
    EXPECT_THROW(hom_module(mod("Z/2"), mod("Z/2", R6)), Error);
}

TEST(Tensor, Examples) {
    EXPECT_EQ(canon(tensor_module(mod("Z"), mod("Z/4 + Z"))), "Z + Z/4");
    EXPECT_EQ(canon(tensor_module(mod("Z/2"), mod("Z/4"))), "Z/2");
    EXPECT_EQ(canon(tensor_module(mod("Z/2"), mod("Z/3"))), "0");
    EXPECT_THROW(tensor_module(mod("Z/2"), mod("Z/2", R6)), Error);
}

TEST(MatlisDual, Examples) {
    EXPECT_EQ(canon(matlis_dual(mod("Z/4"))), "Z/4");
    EXPECT_EQ(canon(matlis_dual(mod("0"))), "0");
    try {
        matlis_dual(mod("Z + Z/2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FreePartNotSupported);
    }
    // Over Z/6 the dual is Hom(-, Z/6); the count must match enumeration.
    const auto D = matlis_dual(mod("Z/2 + Z/6", R6));
    EXPECT_EQ(canonical_form(D).order(),
              oracle::hom_count_by_assignment(canonical_form(mod("Z/2 + Z/6", R6)), canonical_form(mod("Z/6", R6))));
    EXPECT_EQ(canon(D), "Z/2 + Z/6");
}

TEST(Resolution, Examples) {
    const auto F = free_resolution_prefix(mod("Z^2"), 3);
    for (std::size_t k = 1; k < F.differentials.size(); ++k) EXPECT_TRUE(F.differentials[k].is_zero());

    const auto G = free_resolution_prefix(mod("Z/2"), 2);
    EXPECT_EQ(G.rank(0), 1u);
    EXPECT_EQ(G.rank(1), 1u);
    EXPECT_EQ(G.rank(2), 0u);

    const auto H = free_resolution_prefix(mod("Z/2", R4), 3);
    for (std::size_t k = 0; k < 3; ++k) {
        ASSERT_EQ(H.differentials[k].rows(), 1u);
        ASSERT_EQ(H.differentials[k].cols(), 1u);
        EXPECT_EQ(H.differentials[k](0, 0), 2);
    }
}

TEST(ResolutionProperty, ComplexIsExact) {
    for (const auto& [ring, text] : std::vector<std::pair<RingSpec, std::string>>{
             {Z, "Z/2 + Z/4"}, {Z, "coker[[2,4],[6,8]]"}, {R4, "Z/2"}, {R6, "Z/2 + Z/3"}, {R8, "Z/2 + Z/4"}, {R8, "Z/8"}}) {
        const auto F = free_resolution_prefix(mod(text, ring), 4);
        for (std::size_t k = 0; k + 1 < F.differentials.size(); ++k) {
            const Matrix& d = F.differentials[k];
            const Matrix& next = F.differentials[k + 1];
            EXPECT_TRUE((d * next).reduced(ring).is_zero());
            // Every kernel element of d is in the image of next.
            const Matrix K = kernel_generators(ring, d);
            for (std::size_t c = 0; c < K.cols(); ++c)
                EXPECT_TRUE(solve_linear(ring, next, K.column_vector(c))) << text << " degree " << k;
        }
    }
}

TEST(Ext, Examples) {
    EXPECT_EQ(canon(ext(1, mod("Z/2"), mod("Z/2"))), "Z/2");
    EXPECT_EQ(canon(ext(1, mod("Z^2"), mod("Z/4 + Z"))), "0");
    EXPECT_EQ(canon(ext(1, mod("Z/2"), mod("Z"))), "Z/2");
    for (const auto& m : mixed_sample)
        for (const auto& n : mixed_sample) EXPECT_EQ(canon(ext(2, mod(m), mod(n))), "0");
    // Over Z/4, Z/2 has a periodic resolution, so every Ext^i(Z/2, Z/2) is Z/2.
    for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(canon(ext(i, mod("Z/2", R4), mod("Z/2", R4))), "Z/2");
}

TEST(Tor, Examples) {
    EXPECT_EQ(canon(tor(1, mod("Z/2"), mod("Z/4"))), "Z/2");
    EXPECT_EQ(canon(tor(1, mod("Z"), mod("Z/4 + Z"))), "0");
    EXPECT_EQ(canon(tor(1, mod("Z/2"), mod("Z/3"))), "0");
    for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(canon(tor(i, mod("Z/2", R4), mod("Z/2", R4))), "Z/2");
    EXPECT_EQ(canon(tor(2, mod("Z/2", R6), mod("Z/3", R6))), "0");
}

TEST(FunctorProperty, DegreeZeroIsHomAndTensor) {
    for (const auto& m : mixed_sample)
        for (const auto& n : mixed_sample) {
            EXPECT_TRUE(iso_test(ext(0, mod(m), mod(n)), hom_module(mod(m), mod(n))));
            EXPECT_TRUE(iso_test(tor(0, mod(m), mod(n)), tensor_module(mod(m), mod(n))));
        }
}

TEST(FunctorProperty, CountsMatchEnumeration) {
    for (const auto& m : finite_sample)
        for (const auto& n : finite_sample) {
            const auto M = canonical_form(mod(m)), N = canonical_form(mod(n));
            EXPECT_EQ(canonical_form(hom_module(mod(m), mod(n))).order(), oracle::hom_count_by_assignment(M, N));
            EXPECT_EQ(canonical_form(tensor_module(mod(m), mod(n))).order(), oracle::brute_hom_count(M, N));
        }
}

TEST(FunctorProperty, HomTensorAdjunction) {
    const std::vector<std::string> s{"Z/2", "Z/4", "Z/6", "Z + Z/2", "Z"};
    for (const auto& m : s)
        for (const auto& n : s)
            for (const auto& p : s)
                EXPECT_TRUE(iso_test(hom_module(tensor_module(mod(m), mod(n)), mod(p)),
                                     hom_module(mod(m), hom_module(mod(n), mod(p)))))
                    << m << ", " << n << ", " << p;
}

TEST(FunctorProperty, TorSymmetry) {
    for (const auto& m : mixed_sample)
        for (const auto& n : mixed_sample) EXPECT_TRUE(iso_test(tor(1, mod(m), mod(n)), tor(1, mod(n), mod(m))));
    const std::vector<std::string> s8{"0", "Z/2", "Z/4", "Z/8", "Z/2 + Z/4"};
    for (const auto& m : s8)
        for (const auto& n : s8)
            for (std::size_t i = 0; i <= 3; ++i)
                EXPECT_TRUE(iso_test(tor(i, mod(m, R8), mod(n, R8)), tor(i, mod(n, R8), mod(m, R8))));
}

TEST(FunctorProperty, ExtTorDuality) {
    for (const auto& m : finite_sample)
        for (const auto& n : finite_sample)
            EXPECT_TRUE(iso_test(matlis_dual(tor(1, mod(m), mod(n))), ext(1, mod(m), matlis_dual(mod(n)))));
    const std::vector<std::string> s6{"0", "Z/2", "Z/3", "Z/6", "Z/2 + Z/6"};
    for (const auto& m : s6)
        for (const auto& n : s6)
            for (std::size_t i = 0; i <= 2; ++i)
                EXPECT_TRUE(iso_test(matlis_dual(tor(i, mod(m, R6), mod(n, R6))), ext(i, mod(m, R6), matlis_dual(mod(n, R6)))));
}

TEST(HomSpace, MapsAndCoordinates) {
    const HomSpace H(mod("Z/2"), mod("Z/4"));
    EXPECT_EQ(canon(H.module()), "Z/2");
    ASSERT_EQ(H.module().gens(), 1u);
    const Matrix X = H.map_matrix(0);
    EXPECT_NO_THROW(ModuleMap(mod("Z/2"), mod("Z/4"), X));
    const auto coords = H.coordinates(X);
    ASSERT_EQ(coords.size(), 1u);
    EXPECT_FALSE(is_zero_element(H.module(), coords));
}

TEST(HomSpace, CovariantMapOfInclusionIsInjective) {
    // Hom(Z/4, -) applied to Z/2 -> Z/4 (times 2) stays injective (left exactness).
    const ModuleMap inc(mod("Z/2"), mod("Z/4"), Matrix{{2}});
    const HomSpace A(mod("Z/4"), mod("Z/2")), B(mod("Z/4"), mod("Z/4"));
    EXPECT_TRUE(is_injective(hom_map(A, B, inc)));
    // Contravariant in the first argument: Hom(Z/4, Z/4) -> Hom(Z/2, Z/4) via restriction is surjective here.
    const HomSpace C(mod("Z/4"), mod("Z/4")), D(mod("Z/2"), mod("Z/4"));
    EXPECT_TRUE(is_surjective(hom_map_contravariant(C, D, inc)));
}

TEST(TensorSpace, MapOfProjectionIsSurjective) {
    const ModuleMap proj(mod("Z/4"), mod("Z/2"), Matrix{{1}});
    const TensorSpace A(mod("Z/6"), mod("Z/4")), B(mod("Z/6"), mod("Z/2"));
    EXPECT_TRUE(is_surjective(tensor_map(A, B, proj)));
    EXPECT_EQ(canon(A.module()), "Z/2");
}

TEST(Kron, Shapes) {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix k = kron_identity(a, 2);
    EXPECT_EQ(k.rows(), 4u);
    EXPECT_EQ(k.cols(), 4u);
    const Matrix j = identity_kron(3, a);
    EXPECT_EQ(j.rows(), 6u);
    EXPECT_EQ(j(2, 2), 1);
    EXPECT_EQ(j(3, 3), 4);
}
