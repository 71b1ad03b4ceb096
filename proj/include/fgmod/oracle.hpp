#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "fgmod/canonical_form.hpp"

// Brute-force ground truth for finite modules. Deliberately shares nothing with the functor code:
// plain 64-bit arithmetic, its own gcd, and invariant factors rebuilt from prime powers.
namespace fgmod::oracle {

using Element = std::vector<std::int64_t>;

inline std::int64_t small_gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::vector<std::int64_t> orders_of(const CanonicalForm& C) {
    if (!C.is_finite()) throw Error(ErrorCode::InfiniteModule, "oracle needs a finite module, got " + C.to_string());
    std::vector<std::int64_t> orders;
    for (const auto& d : C.torsion_factors) orders.push_back(static_cast<std::int64_t>(d));
    return orders;
}

/// Every residue tuple of a finite module, in lexicographic order.
inline std::vector<Element> enumerate_elements(const CanonicalForm& C) {
    const auto orders = orders_of(C);
    std::vector<Element> out{Element(orders.size(), 0)};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<Element> next;
        for (const auto& e : out)
            for (std::int64_t v = 0; v < orders[i]; ++v) {
                Element f = e;
                f[i] = v;
                next.push_back(std::move(f));
            }
        out = std::move(next);
    }
    return out;
}

/// prod gcd(d_i, e_j).
inline std::int64_t brute_hom_count(const CanonicalForm& M, const CanonicalForm& N) {
    std::int64_t count = 1;
    for (auto d : orders_of(M))
        for (auto e : orders_of(N)) count *= small_gcd(d, e);
    return count;
}

/// Counts generator assignments x_i in N with d_i x_i = 0, by scanning the elements of N.
inline std::int64_t hom_count_by_assignment(const CanonicalForm& M, const CanonicalForm& N) {
    const auto target = orders_of(N);
    const auto elements = enumerate_elements(N);
    std::int64_t count = 1;
    for (auto d : orders_of(M)) {
        std::int64_t killed = 0;
        for (const auto& x : elements) {
            bool zero = true;
            for (std::size_t j = 0; j < x.size() && zero; ++j) zero = (d % target[j]) * x[j] % target[j] == 0;
            if (zero) ++killed;
        }
        count *= killed;
    }
    return count;
}

/// Invariant factors of a direct sum of cyclic modules of the given orders (orders of 1 vanish).
inline std::vector<std::int64_t> assemble_cyclic(const std::vector<std::int64_t>& orders) {
    std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
    for (auto m : orders) {
        for (std::int64_t p = 2; p * p <= m; ++p) {
            std::int64_t q = 1;
            while (m % p == 0) {
                m /= p;
                q *= p;
            }
            if (q > 1) by_prime[p].push_back(q);
        }
        if (m > 1) by_prime[m].push_back(m);
    }
    std::size_t length = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        length = std::max(length, powers.size());
    }
    std::vector<std::int64_t> factors(length, 1);
    for (const auto& [p, powers] : by_prime)
        for (std::size_t k = 0; k < powers.size(); ++k) factors[length - 1 - k] *= powers[k];
    return factors;
}

inline CanonicalForm make_form(const RingSpec& ring, std::size_t free_rank, const std::vector<std::int64_t>& cyclic) {
    CanonicalForm C;
    C.ring = ring;
    C.free_rank = free_rank;
    for (auto d : assemble_cyclic(cyclic)) C.torsion_factors.emplace_back(d);
    return C;
}

inline std::size_t free_rank_of(const CanonicalForm& C) { return C.free_rank; }

inline std::vector<std::int64_t> torsion_of(const CanonicalForm& C) {
    std::vector<std::int64_t> t;
    for (const auto& d : C.torsion_factors) t.push_back(static_cast<std::int64_t>(d));
    return t;
}

/// Hom(Z^r + T, Z^s + T') = Z^{rs} + T'^r + sum Z/gcd(d, e).
inline CanonicalForm formula_hom(const CanonicalForm& M, const CanonicalForm& N) {
    std::vector<std::int64_t> cyclic;
    for (std::size_t i = 0; i < M.free_rank; ++i)
        for (auto e : torsion_of(N)) cyclic.push_back(e);
    for (auto d : torsion_of(M))
        for (auto e : torsion_of(N)) cyclic.push_back(small_gcd(d, e));
    return make_form(M.ring, M.free_rank * N.free_rank, cyclic);
}

/// (Z^r + T) (x) (Z^s + T') = Z^{rs} + T^s + T'^r + sum Z/gcd(d, e).
inline CanonicalForm formula_tensor(const CanonicalForm& M, const CanonicalForm& N) {
    std::vector<std::int64_t> cyclic;
    for (std::size_t i = 0; i < N.free_rank; ++i)
        for (auto d : torsion_of(M)) cyclic.push_back(d);
    for (std::size_t i = 0; i < M.free_rank; ++i)
        for (auto e : torsion_of(N)) cyclic.push_back(e);
    for (auto d : torsion_of(M))
        for (auto e : torsion_of(N)) cyclic.push_back(small_gcd(d, e));
    return make_form(M.ring, M.free_rank * N.free_rank, cyclic);
}

inline void require_torsion_over_integers(const CanonicalForm& M) {
    if (!M.ring.is_integers() || M.free_rank > 0)
        throw Error(ErrorCode::UnsupportedShape, "gcd formulas need a torsion module over Z, got " + M.to_string());
}

/// Ext^1(Z/a, N) = N / aN, additively in the first argument.
inline CanonicalForm formula_ext1(const CanonicalForm& M, const CanonicalForm& N) {
    require_torsion_over_integers(M);
    std::vector<std::int64_t> cyclic;
    for (auto d : torsion_of(M)) {
        for (std::size_t i = 0; i < N.free_rank; ++i) cyclic.push_back(d);
        for (auto e : torsion_of(N)) cyclic.push_back(small_gcd(d, e));
    }
    return make_form(M.ring, 0, cyclic);
}

/// Tor_1(Z/a, N) = ker(a on N), additively in the first argument.
inline CanonicalForm formula_tor1(const CanonicalForm& M, const CanonicalForm& N) {
    require_torsion_over_integers(M);
    std::vector<std::int64_t> cyclic;
    for (auto d : torsion_of(M))
        for (auto e : torsion_of(N)) cyclic.push_back(small_gcd(d, e));
    return make_form(M.ring, 0, cyclic);
}

} // namespace fgmod::oracle
