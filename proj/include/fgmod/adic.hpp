#pragma once

#include <optional>

#include "fgmod/functors.hpp"

namespace fgmod {

inline constexpr unsigned default_kmax = 64;

/// Value of an a-adic chain at the first exponent where it stops moving.
struct StabilizationResult {
    Presentation value;
    unsigned exponent = 0;
};

/// d^k reduced in the ring.
inline Integer ring_power(const RingSpec& ring, const Integer& d, unsigned k) { return ring.reduce(power(d, k)); }

/// The a-torsion submodule ker(d^k) with its inclusion.
struct TorsionPart {
    StabilizationResult result;
    PresentedSubmodule submodule;
};

inline TorsionPart torsion_part(const Presentation& N, const Ideal& a, unsigned kmax = default_kmax) {
    require_same_ring(N.ring(), a.ring);
    Submodule current = kernel_submodule(mult_map(N, 1));
    for (unsigned k = 0; k <= kmax; ++k) {
        Submodule next = kernel_submodule(mult_map(N, ring_power(N.ring(), a.canonical, k + 1)));
        if (submodule_equal(current, next)) {
            auto sub = present_submodule(current);
            return {{sub.module, k}, std::move(sub)};
        }
        current = std::move(next);
    }
    throw Error(ErrorCode::NonStabilizing, "torsion chain still growing at k = " + std::to_string(kmax));
}

/// Gamma_a(N).
inline StabilizationResult gamma(const Presentation& N, const Ideal& a, unsigned kmax = default_kmax) {
    return torsion_part(N, a, kmax).result;
}

/// Least k with d^k M = d^{k+1} M. Over Z a free summand with d not in {0, 1} never stabilizes.
inline unsigned stabilization_exponent(const Presentation& M, const Ideal& a, unsigned kmax = default_kmax) {
    require_same_ring(M.ring(), a.ring);
    const Integer& d = a.canonical;
    if (M.ring().is_integers() && d != 0 && d != 1 && canonical_form(M).free_rank > 0)
        throw Error(ErrorCode::NonStabilizing, "free part under " + a.to_string() + "-adic filtration");
    Submodule current = multiple_submodule(M, 1);
    for (unsigned k = 0; k <= kmax; ++k) {
        Submodule next = multiple_submodule(M, ring_power(M.ring(), d, k + 1));
        if (submodule_equal(current, next)) return k;
        current = std::move(next);
    }
    throw Error(ErrorCode::NonStabilizing, "a-adic chain still shrinking at k = " + std::to_string(kmax));
}

/// N / a^k N at the stabilization exponent, with the projection from N.
struct CompletionPart {
    StabilizationResult result;
    PresentedQuotient quotient;
};

inline CompletionPart completion_part(const Presentation& N, const Ideal& a, unsigned kmax = default_kmax) {
    const unsigned k = stabilization_exponent(N, a, kmax);
    const Integer dk = ring_power(N.ring(), a.canonical, k);
    auto quotient = cokernel_of_map(mult_map(N, dk));
    return {{quotient.module, k}, std::move(quotient)};
}

/// Lambda_a(N).
inline StabilizationResult lambda(const Presentation& N, const Ideal& a, unsigned kmax = default_kmax) {
    return completion_part(N, a, kmax).result;
}

/// Gamma_a(M, N) = Gamma_a(Hom(M, N)).
inline Presentation gamma_gen(const Presentation& M, const Presentation& N, const Ideal& a,
                              unsigned kmax = default_kmax) {
    return gamma(hom_module(M, N), a, kmax).value;
}

/// Lambda_a(M, N) = Lambda_a(M (x) N).
inline Presentation lambda_gen(const Presentation& M, const Presentation& N, const Ideal& a,
                               unsigned kmax = default_kmax) {
    return lambda(tensor_module(M, N), a, kmax).value;
}

/// ker(d^2) = ker(d).
inline bool is_reduced(const Presentation& N, const Ideal& a) {
    require_same_ring(N.ring(), a.ring);
    const Integer& d = a.canonical;
    return submodule_equal(kernel_submodule(mult_map(N, d)),
                           kernel_submodule(mult_map(N, ring_power(N.ring(), d, 2))));
}

/// a Gamma_a(N) = 0; agrees with is_reduced.
inline bool is_reduced_via_torsion(const Presentation& N, const Ideal& a) {
    return is_killed_by(gamma(N, a).value, a.canonical);
}

/// aN = a^2 N.
inline bool is_coreduced(const Presentation& N, const Ideal& a) {
    require_same_ring(N.ring(), a.ring);
    const Integer& d = a.canonical;
    return submodule_equal(multiple_submodule(N, d), multiple_submodule(N, ring_power(N.ring(), d, 2)));
}

inline bool is_reduced_wrt(const Presentation& M, const Presentation& N, const Ideal& a) {
    return is_reduced(hom_module(M, N), a);
}

inline bool is_coreduced_wrt(const Presentation& M, const Presentation& N, const Ideal& a) {
    return is_coreduced(tensor_module(M, N), a);
}

inline bool is_in_B(const Presentation& M, const Presentation& N, const Ideal& a) {
    return is_reduced_wrt(M, N, a) && is_coreduced_wrt(M, N, a);
}

} // namespace fgmod
