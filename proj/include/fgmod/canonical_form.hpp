#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fgmod/ring.hpp"

namespace fgmod {

/// Invariant-factor decomposition Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | ... | d_k,
/// every d_i >= 2. Over Z/n a free summand is recorded as the factor n and free_rank is 0.
struct CanonicalForm {
    RingSpec ring = RingSpec::integers();
    std::vector<Integer> torsion_factors;
    std::size_t free_rank = 0;

    bool is_zero() const { return free_rank == 0 && torsion_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }

    /// Number of elements; requires a finite module.
    Integer order() const {
        if (!is_finite()) throw Error(ErrorCode::InfiniteModule, "order of a module with free part");
        Integer n = 1;
        for (const auto& d : torsion_factors) n *= d;
        return n;
    }

    /// Largest invariant factor; 1 for the zero module. Kills the module when finite.
    Integer exponent() const { return torsion_factors.empty() ? Integer(1) : torsion_factors.back(); }

    /// `Z^r + Z/d1 + Z/d2 ...`, or `0`. The output parses back as a module expression.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
        for (const auto& d : torsion_factors) {
            if (!s.empty()) s += " + ";
            s += "Z/" + fgmod::to_string(d);
        }
        return s;
    }

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.ring == b.ring && a.free_rank == b.free_rank && a.torsion_factors == b.torsion_factors;
    }
    friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }

    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.ring.modulus() != b.ring.modulus()) return a.ring.modulus() < b.ring.modulus();
        if (a.free_rank != b.free_rank) return a.free_rank < b.free_rank;
        return a.torsion_factors < b.torsion_factors;
    }
};

} // namespace fgmod
