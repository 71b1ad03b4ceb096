#pragma once

#include "fgmod/adic.hpp"

namespace fgmod {

/// Ext^i(M/aM, N).
inline Presentation glc_fast(std::size_t i, const Presentation& M, const Presentation& N, const Ideal& a) {
    return ext(i, quotient_by_ideal(M, a), N);
}

/// Ext^i(M/a^k M, N) at the exponent where the system M/a^k M becomes constant, which is then
/// the colimit.
inline Presentation glc_stabilized(std::size_t i, const Presentation& M, const Presentation& N, const Ideal& a,
                                   unsigned kmax = default_kmax) {
    const unsigned k = stabilization_exponent(M, a, kmax);
    return ext(i, quotient_by_element(M, ring_power(M.ring(), a.canonical, k)), N);
}

/// Tor_i(M/aM, N).
inline Presentation glh_fast(std::size_t i, const Presentation& M, const Presentation& N, const Ideal& a) {
    return tor(i, quotient_by_ideal(M, a), N);
}

inline Presentation glh_stabilized(std::size_t i, const Presentation& M, const Presentation& N, const Ideal& a,
                                   unsigned kmax = default_kmax) {
    const unsigned k = stabilization_exponent(M, a, kmax);
    return tor(i, quotient_by_element(M, ring_power(M.ring(), a.canonical, k)), N);
}

/// H^i_a(M, N).
inline Presentation glc(std::size_t i, const Presentation& M, const Presentation& N, const Ideal& a,
                        unsigned kmax = default_kmax) {
    if (is_reduced_wrt(M, N, a)) return glc_fast(i, M, N, a);
    return glc_stabilized(i, M, N, a, kmax);
}

/// H_i^a(M, N).
inline Presentation glh(std::size_t i, const Presentation& M, const Presentation& N, const Ideal& a,
                        unsigned kmax = default_kmax) {
    if (is_coreduced_wrt(M, N, a)) return glh_fast(i, M, N, a);
    return glh_stabilized(i, M, N, a, kmax);
}

/// N = Lambda_a(N); a non-stabilizing chain counts as not complete.
inline bool is_adically_complete(const Presentation& N, const Ideal& a, unsigned kmax = default_kmax) {
    try {
        return iso_test(lambda(N, a, kmax).value, N);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonStabilizing) return false;
        throw;
    }
}

} // namespace fgmod
