#include <gtest/gtest.h>

#include "support.hpp"

using namespace fgmod;
using support::canon;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec R6 = RingSpec::integers_mod(6);

ErrorCode parse_error(const RingSpec& r, const std::string& s) {
    try {
        parse_module(r, s);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(Expression, GrammarExamples) {
    EXPECT_EQ(canon(parse_module(Z, "Z/4 + Z/2^2")), "Z/2 + Z/2 + Z/4");
    EXPECT_EQ(canon(parse_module(Z, "Z^2 + Z/6")), "Z^2 + Z/6");
    EXPECT_EQ(canon(parse_module(Z, "coker[[2,4],[6,8]]")), "Z/2 + Z/4");
    EXPECT_EQ(canon(parse_module(Z, "  Z / 3 +Z/5 ")), "Z/15");
    EXPECT_EQ(canon(parse_module(Z, "0")), "0");
    EXPECT_EQ(canon(parse_module(Z, "Z/1")), "0");
    EXPECT_EQ(canon(parse_module(Z, "coker[[],[]]")), "Z^2");
    EXPECT_EQ(canon(parse_module(Z, "coker[]")), "0");
    EXPECT_EQ(canon(parse_module(Z, "coker[[-3]]")), "Z/3");
    EXPECT_EQ(canon(parse_module(R6, "Z/2 + Z/3")), "Z/6");
    EXPECT_EQ(canon(parse_module(R6, "coker[[0]]")), "Z/6");
}

TEST(Expression, Rejections) {
    EXPECT_EQ(parse_error(R6, "Z"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(R6, "Z/4"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(Z, "Z/"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(Z, "Z/0"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(Z, "Z + "), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(Z, "Q"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(Z, "coker[[1,2],[3]]"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(Z, "Z^65"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error(Z, "Z/2 Z/3"), ErrorCode::ParseError);
}

// Canonical output parses back to an isomorphic module.
TEST(ExpressionProperty, CanonicalOutputRoundTrips) {
    for (const auto& g : verify::default_grids())
        for (const auto& P : verify::enumerate_modules(g)) {
            const std::string text = format_module(P);
            const auto Q = parse_module(g.ring, text);
            EXPECT_TRUE(iso_test(P, Q)) << text;
            EXPECT_EQ(format_module(Q), text);
        }
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Matrix A = support::random_matrix(rng, 3, 9);
        const Presentation P(Z, A.rows(), A);
        EXPECT_TRUE(iso_test(P, parse_module(Z, format_module(P))));
    }
}

TEST(Expression, GrammarTextMentionsEveryAtom) {
    const std::string g = expression_grammar;
    for (const char* atom : {"Z/<m>", "coker", "'0'", "^"}) EXPECT_NE(g.find(atom), std::string::npos);
}
