#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fgmod/integer.hpp"

namespace fgmod {

/// The base ring: Z, or Z/n with n >= 2. Both are principal ideal rings.
class RingSpec {
public:
    static RingSpec integers() { return RingSpec(0); }

    static RingSpec integers_mod(const Integer& n) {
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 2, got " + fgmod::to_string(n));
        return RingSpec(n);
    }

    bool is_integers() const { return modulus_ == 0; }

    /// 0 for Z.
    const Integer& modulus() const { return modulus_; }

    /// Canonical representative: identity over Z, residue in [0, n) over Z/n.
    Integer reduce(const Integer& x) const {
        if (is_integers()) return x;
        return floor_mod(x, modulus_);
    }

    bool is_unit(const Integer& x) const {
        if (is_integers()) return x == 1 || x == -1;
        return gcd(x, modulus_) == 1;
    }

    std::string to_string() const { return is_integers() ? "Z" : "Z/" + fgmod::to_string(modulus_); }

    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.modulus_ == b.modulus_; }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

private:
    explicit RingSpec(Integer n) : modulus_(std::move(n)) {}
    Integer modulus_;
};

/// Parses `Z` or `Z/<n>`.
inline RingSpec parse_ring(std::string_view text) {
    if (text == "Z") return RingSpec::integers();
    if (text.size() > 2 && text.substr(0, 2) == "Z/") return RingSpec::integers_mod(parse_integer(text.substr(2)));
    throw Error(ErrorCode::ParseError, "ring must be 'Z' or 'Z/<n>', got '" + std::string(text) + "'");
}

/// A finitely generated ideal together with its principal generator.
struct Ideal {
    RingSpec ring = RingSpec::integers();
    std::vector<Integer> generators;
    Integer canonical;

    bool is_zero() const { return canonical == 0; }
    bool is_unit() const { return canonical == 1; }

    std::string to_string() const { return "(" + fgmod::to_string(canonical) + ")"; }
};

/// Over Z the canonical generator is the nonnegative gcd; over Z/n it is gcd(generators, n)
/// taken in [0, n), so the zero ideal has canonical generator 0 in both rings.
inline Ideal canonicalize_ideal(const RingSpec& ring, const std::vector<Integer>& generators) {
    if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorList, "an ideal needs at least one generator");
    Integer g = 0;
    for (const auto& x : generators) g = gcd(g, x);
    if (!ring.is_integers()) g = ring.reduce(gcd(g, ring.modulus()));
    Ideal ideal;
    ideal.ring = ring;
    ideal.generators.reserve(generators.size());
    for (const auto& x : generators) ideal.generators.push_back(ring.reduce(x));
    ideal.canonical = std::move(g);
    return ideal;
}

inline Ideal principal_ideal(const RingSpec& ring, const Integer& generator) {
    return canonicalize_ideal(ring, {generator});
}

/// a^k; the unit ideal when k = 0.
inline Ideal ideal_power(const Ideal& a, unsigned k) {
    return canonicalize_ideal(a.ring, {power(a.canonical, k)});
}

/// Parses a comma-separated generator list such as `4,6`.
inline Ideal parse_ideal(const RingSpec& ring, std::string_view text) {
    std::vector<Integer> gens;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        gens.push_back(parse_integer(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return canonicalize_ideal(ring, gens);
}

} // namespace fgmod
