#include <gtest/gtest.h>

#include "support.hpp"

using namespace fgmod;
using support::canon;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec R6 = RingSpec::integers_mod(6);
const RingSpec R8 = RingSpec::integers_mod(8);

Presentation mod(const std::string& s, const RingSpec& r = Z) { return parse_module(r, s); }
Ideal id(long long d, const RingSpec& r = Z) { return principal_ideal(r, d); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

// Brute-force predicates on a finite Z-module given by cyclic orders: reduced means d^2 x = 0
// implies d x = 0; coreduced means dM = d^2 M as element sets.
struct Finite {
    std::vector<long long> orders;

    std::vector<std::vector<long long>> elements() const {
        std::vector<std::vector<long long>> out{{}};
        for (long long o : orders) {
            std::vector<std::vector<long long>> next;
            for (const auto& e : out)
                for (long long v = 0; v < o; ++v) {
                    auto w = e;
                    w.push_back(v);
                    next.push_back(std::move(w));
                }
            out = std::move(next);
        }
        return out;
    }

    std::vector<long long> scale(const std::vector<long long>& x, long long r) const {
        std::vector<long long> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = ((r % orders[i]) * x[i] % orders[i] + orders[i]) % orders[i];
        return y;
    }

    bool zero(const std::vector<long long>& x) const {
        return std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
    }

    bool reduced(long long d) const {
        for (const auto& x : elements())
            if (zero(scale(x, d * d)) && !zero(scale(x, d))) return false;
        return true;
    }

    bool coreduced(long long d) const {
        std::set<std::vector<long long>> once, twice;
        for (const auto& x : elements()) {
            once.insert(scale(x, d));
            twice.insert(scale(x, d * d));
        }
        return once == twice;
    }

    std::string text() const {
        std::string s;
        for (long long o : orders) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(o));
        return s.empty() ? "0" : s;
    }
};

} // namespace

TEST(Gamma, Examples) {
    const auto g = gamma(mod("Z/4"), id(2));
    EXPECT_EQ(canon(g.value), "Z/4");
    EXPECT_EQ(g.exponent, 2u);
    EXPECT_EQ(canon(gamma(mod("Z/4"), id(3)).value), "0");
    EXPECT_EQ(canon(gamma(mod("Z + Z/6"), id(0)).value), "Z + Z/6");
    EXPECT_EQ(canon(gamma(mod("Z + Z/12"), id(2)).value), "Z/4");
    EXPECT_EQ(canon(gamma(mod("Z"), id(2)).value), "0");
}

TEST(Lambda, Examples) {
    EXPECT_EQ(canon(lambda(mod("Z/4"), id(2)).value), "Z/4");
    EXPECT_EQ(code_of([] { lambda(mod("Z"), id(2)); }), ErrorCode::NonStabilizing);
    EXPECT_EQ(canon(lambda(mod("Z + Z/6"), id(1)).value), "0");
    EXPECT_EQ(canon(lambda(mod("Z + Z/6"), id(0)).value), "Z + Z/6");
    EXPECT_EQ(canon(lambda(mod("Z/12"), id(2)).value), "Z/4");
    EXPECT_EQ(canon(lambda(mod("Z/6", R6), id(2, R6)).value), "Z/2");
}

TEST(Lambda, KmaxBoundIsEnforced) {
    // Over Z/2^40 the chain for (2) needs 40 steps.
    const auto R = RingSpec::integers_mod(power(Integer(2), 40));
    const auto M = Presentation::free(R, 1);
    EXPECT_EQ(lambda(M, principal_ideal(R, 2), 64).exponent, 40u);
    EXPECT_EQ(code_of([&] { lambda(M, principal_ideal(R, 2), 10); }), ErrorCode::NonStabilizing);
}

TEST(GeneralizedFunctors, Examples) {
    for (const auto& n : {"Z/4", "Z + Z/6", "Z/2"})
        EXPECT_TRUE(iso_test(gamma_gen(mod("Z"), mod(n), id(2)), gamma(mod(n), id(2)).value));
    EXPECT_EQ(canon(gamma_gen(mod("Z/2"), mod("Z/4"), id(2))), "Z/2");
    EXPECT_EQ(canon(gamma_gen(mod("Z/2"), mod("Z/3"), id(2))), "0");
    EXPECT_TRUE(iso_test(lambda_gen(mod("Z"), mod("Z/12"), id(2)), lambda(mod("Z/12"), id(2)).value));
    EXPECT_EQ(canon(lambda_gen(mod("Z/2"), mod("Z/4"), id(2))), "Z/2");
    EXPECT_EQ(code_of([] { lambda_gen(mod("Z"), mod("Z"), id(2)); }), ErrorCode::NonStabilizing);
}

TEST(Predicates, ReferenceVerdicts) {
    EXPECT_FALSE(is_reduced(mod("Z/4"), id(2)));
    EXPECT_FALSE(is_coreduced(mod("Z/4"), id(2)));
    EXPECT_TRUE(is_coreduced(mod("Z/2"), id(2)));
    EXPECT_FALSE(is_coreduced(mod("Z"), id(2)));
    EXPECT_TRUE(is_reduced_wrt(mod("Z/2"), mod("Z/4"), id(2)));
    EXPECT_TRUE(is_coreduced_wrt(mod("Z/2"), mod("Z/4"), id(2)));
}

TEST(Predicates, DerivedExamples) {
    EXPECT_TRUE(is_reduced(mod("Z/2"), id(2)));
    EXPECT_TRUE(is_reduced(mod("Z/6"), id(2)));
    EXPECT_FALSE(is_reduced_wrt(mod("Z/4"), mod("Z/4"), id(2)));
    EXPECT_FALSE(is_coreduced_wrt(mod("Z"), mod("Z"), id(2)));
    EXPECT_TRUE(is_in_B(mod("Z/2"), mod("Z/2"), id(2)));
    EXPECT_FALSE(is_in_B(mod("Z"), mod("Z"), id(2)));
    EXPECT_TRUE(is_in_B(mod("Z/4 + Z"), mod("0"), id(2)));
    EXPECT_TRUE(is_reduced(mod("Z"), id(2)));
}

TEST(Predicates, WithRespectToRingIsPlain) {
    for (const auto& n : {"0", "Z", "Z/2", "Z/4", "Z/6", "Z + Z/8", "Z/2 + Z/4"})
        for (long long d : {0, 1, 2, 3, 4, 6}) {
            EXPECT_EQ(is_reduced_wrt(mod("Z"), mod(n), id(d)), is_reduced(mod(n), id(d)));
            EXPECT_EQ(is_coreduced_wrt(mod("Z"), mod(n), id(d)), is_coreduced(mod(n), id(d)));
        }
}

// Both reduced paths agree, and a Gamma_a(N) = 0 exactly when N is reduced.
TEST(AdicProperty, ReducedPathsAgree) {
    for (const auto& n : {"0", "Z", "Z/2", "Z/4", "Z/8", "Z/6", "Z/12", "Z + Z/4", "Z/2 + Z/4", "Z/3 + Z/9"})
        for (long long d : {0, 1, 2, 3, 4, 6}) EXPECT_EQ(is_reduced(mod(n), id(d)), is_reduced_via_torsion(mod(n), id(d))) << n << " " << d;
}

TEST(AdicProperty, PredicatesMatchBruteForce) {
    const std::vector<Finite> sample{{{}}, {{2}}, {{4}}, {{8}}, {{6}}, {{12}}, {{2, 4}}, {{2, 2}}, {{3, 9}}, {{4, 4}}, {{2, 6}}, {{16}}};
    for (const auto& F : sample)
        for (long long d : {0, 1, 2, 3, 4, 6}) {
            EXPECT_EQ(is_reduced(mod(F.text()), id(d)), F.reduced(d)) << F.text() << " d=" << d;
            EXPECT_EQ(is_coreduced(mod(F.text()), id(d)), F.coreduced(d)) << F.text() << " d=" << d;
        }
}

TEST(AdicProperty, StabilizationIsReproducible) {
    for (const auto& n : {"Z/2", "Z/4", "Z/8", "Z/12", "Z + Z/4", "Z/16"})
        for (long long d : {0, 2, 3, 4}) {
            const auto M = mod(n);
            const auto g = gamma(M, id(d));
            EXPECT_TRUE(iso_test(g.value, kernel_of_map(mult_map(M, power(Integer(d), g.exponent + 1))).module));
            if (canonical_form(M).free_rank > 0 && d > 1) continue;
            const auto l = lambda(M, id(d));
            EXPECT_TRUE(iso_test(l.value, quotient_by_element(M, power(Integer(d), l.exponent + 1))));
        }
}

TEST(AdicProperty, IdempotentIdealMakesEverythingReduced) {
    // (3) in Z/6 is idempotent: 3 * 3 = 3.
    const std::vector<std::string> s{"0", "Z/2", "Z/3", "Z/6", "Z/2 + Z/6", "Z/6 + Z/6", "Z/3 + Z/6"};
    for (const auto& m : s) {
        EXPECT_TRUE(is_reduced(mod(m, R6), id(3, R6)));
        EXPECT_TRUE(is_coreduced(mod(m, R6), id(3, R6)));
        for (const auto& n : s) {
            EXPECT_TRUE(is_reduced_wrt(mod(m, R6), mod(n, R6), id(3, R6)));
            EXPECT_TRUE(is_coreduced_wrt(mod(m, R6), mod(n, R6), id(3, R6)));
        }
    }
}

TEST(AdicProperty, TorsionAndCompletionParts) {
    const auto M = mod("Z/4 + Z/3", Z);
    const auto t = torsion_part(M, id(2));
    EXPECT_TRUE(is_injective(t.submodule.inclusion));
    EXPECT_EQ(canon(t.result.value), "Z/4");
    const auto c = completion_part(M, id(2));
    EXPECT_TRUE(is_surjective(c.quotient.projection));
    EXPECT_EQ(canon(c.result.value), "Z/4");
    EXPECT_EQ(canon(c.quotient.module), "Z/4");
}

TEST(AdicProperty, RingMismatchRejected) {
    EXPECT_EQ(code_of([] { gamma(mod("Z/2"), id(2, R8)); }), ErrorCode::RingMismatch);
    EXPECT_EQ(code_of([] { is_coreduced(mod("Z/2", R8), id(2)); }), ErrorCode::RingMismatch);
}
