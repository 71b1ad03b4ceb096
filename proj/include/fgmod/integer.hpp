#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "fgmod/error.hpp"

namespace fgmod {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Nonnegative gcd; gcd(0, 0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs_value(a);
    Integer y = abs_value(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

/// Remainder in [0, |m|) for m != 0.
inline Integer floor_mod(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += abs_value(m);
    return r;
}

/// Quotient rounded toward negative infinity.
inline Integer floor_div(const Integer& x, const Integer& m) {
    Integer q = x / m;
    if ((x % m != 0) && ((x < 0) != (m < 0))) q -= 1;
    return q;
}

struct BezoutResult {
    Integer gcd;
    Integer x;
    Integer y;
};

/// g = a*x + b*y with g = gcd(a, b) >= 0.
inline BezoutResult bezout(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline Integer power(const Integer& base, unsigned exponent) {
    Integer result = 1;
    Integer b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw Error(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw Error(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
    }
    Integer value(std::string(text.substr(start)));
    return text[0] == '-' ? Integer(-value) : value;
}

} // namespace fgmod
