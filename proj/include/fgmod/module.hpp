#pragma once

#include <utility>
#include <vector>

#include "fgmod/canonical_form.hpp"
#include "fgmod/smith.hpp"

namespace fgmod {

/// A finitely presented module: the cokernel of `rels` (gens rows, one column per relation).
/// Over Z/n the relation lattice implicitly contains n * e_i for every generator.
class Presentation {
public:
    Presentation() = default;

    Presentation(RingSpec ring, std::size_t gens, const Matrix& rels)
        : ring_(std::move(ring)), gens_(gens), rels_(rels.reduced(ring_)) {
        if (rels_.rows() != gens_ && !(gens_ == 0 && rels_.cols() == 0))
            throw Error(ErrorCode::DimensionMismatch,
                        "relation matrix " + rels_.shape() + " for " + std::to_string(gens_) + " generators");
        if (rels_.rows() != gens_) rels_ = Matrix(gens_, 0);
    }

    static Presentation zero(const RingSpec& ring) { return Presentation(ring, 0, Matrix(0, 0)); }
    static Presentation free(const RingSpec& ring, std::size_t rank) { return Presentation(ring, rank, Matrix(rank, 0)); }
    static Presentation cyclic(const RingSpec& ring, const Integer& order) {
        return Presentation(ring, 1, Matrix::column({order}));
    }

    /// Diagonal presentation of a canonical form.
    static Presentation from_canonical(const CanonicalForm& form) {
        const std::size_t g = form.free_rank + form.torsion_factors.size();
        Matrix rels(g, form.torsion_factors.size());
        for (std::size_t i = 0; i < form.torsion_factors.size(); ++i) rels(form.free_rank + i, i) = form.torsion_factors[i];
        return Presentation(form.ring, g, rels.reduced(form.ring).without_zero_columns());
    }

    const RingSpec& ring() const { return ring_; }
    std::size_t gens() const { return gens_; }
    const Matrix& rels() const { return rels_; }

    /// Relation lattice over Z: rels, plus n * I over Z/n.
    Matrix lifted_relations() const { return lift_to_integers(ring_, rels_); }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_ && a.rels_ == b.rels_;
    }
    friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }

private:
    RingSpec ring_ = RingSpec::integers();
    std::size_t gens_ = 0;
    Matrix rels_;
};

inline void require_same_ring(const RingSpec& a, const RingSpec& b) {
    if (a != b) throw Error(ErrorCode::RingMismatch, a.to_string() + " vs " + b.to_string());
}

/// A homomorphism given on generators: column j is the image of source generator j.
class ModuleMap {
public:
    struct Trusted {};

    /// Certifies well-definedness: every relation of the source must map into the target's relations.
    ModuleMap(Presentation source, Presentation target, const Matrix& matrix)
        : ModuleMap(std::move(source), std::move(target), matrix, Trusted{}) {
        if (!source_.rels().empty()) {
            const Matrix image = matrix_ * source_.rels();
            ColumnEchelon span(target_.lifted_relations(), false);
            for (std::size_t c = 0; c < image.cols(); ++c)
                if (!span.contains(image.column_vector(c)))
                    throw Error(ErrorCode::NotWellDefined, "relation " + std::to_string(c) + " does not map to zero");
        }
    }

    /// For maps that are well-defined by construction.
    ModuleMap(Presentation source, Presentation target, const Matrix& matrix, Trusted)
        : source_(std::move(source)), target_(std::move(target)), matrix_(matrix.reduced(source_.ring())) {
        require_same_ring(source_.ring(), target_.ring());
        if (matrix_.rows() != target_.gens() || matrix_.cols() != source_.gens())
            throw Error(ErrorCode::DimensionMismatch, "map matrix " + matrix_.shape() + " between " +
                                                          std::to_string(source_.gens()) + " and " +
                                                          std::to_string(target_.gens()) + " generators");
    }

    const Presentation& source() const { return source_; }
    const Presentation& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

private:
    Presentation source_;
    Presentation target_;
    Matrix matrix_;
};

/// A submodule carried as generator columns inside an ambient presentation.
struct Submodule {
    Presentation ambient;
    Matrix generators;
};

/// A presentation together with its inclusion into some ambient module.
struct PresentedSubmodule {
    Presentation module;
    ModuleMap inclusion;
};

/// A presentation together with the projection onto it and a set-theoretic lift of its generators.
struct PresentedQuotient {
    Presentation module;
    ModuleMap projection;
    Matrix section; // source.gens x module.gens, projection * section = identity on the quotient
};

inline CanonicalForm canonical_form(const Presentation& P) {
    CanonicalForm form;
    form.ring = P.ring();
    const auto diagonal = smith_diagonal(P.lifted_relations());
    std::size_t nonzero = 0;
    for (const auto& d : diagonal) {
        if (d == 0) continue;
        ++nonzero;
        if (d != 1) form.torsion_factors.push_back(abs_value(d));
    }
    form.free_rank = P.gens() - nonzero;
    return form;
}

inline bool iso_test(const Presentation& P, const Presentation& Q) {
    require_same_ring(P.ring(), Q.ring());
    return canonical_form(P) == canonical_form(Q);
}

inline bool is_zero_module(const Presentation& P) { return canonical_form(P).is_zero(); }

/// An isomorphic presentation with one generator per nontrivial invariant factor (and per free
/// summand), plus the isomorphisms in both directions.
struct Minimized {
    Presentation module;
    Matrix to_minimal;   // minimal.gens x original.gens
    Matrix from_minimal; // original.gens x minimal.gens
};

inline Minimized minimize(const Presentation& P) {
    const RingSpec& ring = P.ring();
    const auto smith = smith_normal_form(P.lifted_relations());
    const auto diagonal = smith.diagonal();
    std::vector<std::size_t> kept;
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < P.gens(); ++i) {
        Integer d = i < diagonal.size() ? diagonal[i] : Integer(0);
        if (d == 1) continue;
        kept.push_back(i);
        orders.push_back(std::move(d));
    }
    Matrix rels(kept.size(), kept.size());
    for (std::size_t t = 0; t < kept.size(); ++t) rels(t, t) = orders[t];
    rels = rels.reduced(ring).without_zero_columns();
    return {Presentation(ring, kept.size(), rels), smith.U.select_rows(kept).reduced(ring),
            smith.U_inverse.select_columns(kept).reduced(ring)};
}

/// Presents (span G + span H) / span H inside Z^m. H must already contain the ring lift n * I
/// when working over Z/n.
inline Presentation subquotient(const RingSpec& ring, const Matrix& G, const Matrix& H) {
    const Matrix K = ColumnEchelon(hconcat(G, H)).kernel_basis();
    return Presentation(ring, G.cols(), K.row_slice(0, G.cols()).reduced(ring).without_zero_columns());
}

inline PresentedSubmodule present_submodule(const Submodule& S) {
    const RingSpec& ring = S.ambient.ring();
    const Matrix gens = S.generators.reduced(ring).without_zero_columns();
    const auto min = minimize(subquotient(ring, gens, S.ambient.lifted_relations()));
    const Matrix inclusion = gens * min.from_minimal;
    return {min.module, ModuleMap(min.module, S.ambient, inclusion, ModuleMap::Trusted{})};
}

/// Whether v is zero in P.
inline bool is_zero_element(const Presentation& P, const std::vector<Integer>& v) {
    return ColumnEchelon(P.lifted_relations(), false).contains(v);
}

/// Whether v lies in the submodule S.
inline bool contains(const Submodule& S, const std::vector<Integer>& v) {
    return ColumnEchelon(hconcat(S.generators, S.ambient.lifted_relations()), false).contains(v);
}

/// Mutual membership of generators, each solved modulo the ambient relations.
inline bool submodule_equal(const Submodule& a, const Submodule& b) {
    if (a.ambient != b.ambient) throw Error(ErrorCode::AmbientMismatch, "submodules live in different modules");
    const Matrix lifted = a.ambient.lifted_relations();
    const auto covers = [&](const Matrix& span, const Matrix& gens) {
        ColumnEchelon lattice(hconcat(span, lifted), false);
        for (std::size_t c = 0; c < gens.cols(); ++c)
            if (!lattice.contains(gens.column_vector(c))) return false;
        return true;
    };
    return covers(a.generators, b.generators) && covers(b.generators, a.generators);
}

inline Presentation direct_sum(const std::vector<Presentation>& parts, const RingSpec& ring_if_empty = RingSpec::integers()) {
    if (parts.empty()) return Presentation::zero(ring_if_empty);
    const RingSpec ring = parts.front().ring();
    std::size_t gens = 0;
    Matrix rels(0, 0);
    for (const auto& p : parts) {
        require_same_ring(ring, p.ring());
        gens += p.gens();
        rels = block_diagonal(rels, p.rels());
    }
    return Presentation(ring, gens, rels);
}

/// M / rM.
inline Presentation quotient_by_element(const Presentation& M, const Integer& r) {
    const Integer d = M.ring().reduce(r);
    if (d == 0) return M;
    return Presentation(M.ring(), M.gens(), hconcat(M.rels(), d * Matrix::identity(M.gens())));
}

/// M / aM.
inline Presentation quotient_by_ideal(const Presentation& M, const Ideal& a) {
    require_same_ring(M.ring(), a.ring);
    return quotient_by_element(M, a.canonical);
}

/// The endomorphism x -> r x.
inline ModuleMap mult_map(const Presentation& M, const Integer& r) {
    return ModuleMap(M, M, r * Matrix::identity(M.gens()), ModuleMap::Trusted{});
}

/// rM as a submodule of M.
inline Submodule multiple_submodule(const Presentation& M, const Integer& r) {
    return {M, M.ring().reduce(r) * Matrix::identity(M.gens())};
}

/// aM with its inclusion into M.
inline PresentedSubmodule ideal_multiple(const Presentation& M, const Ideal& a) {
    require_same_ring(M.ring(), a.ring);
    return present_submodule(multiple_submodule(M, a.canonical));
}

/// Generators of the preimage lattice {x : f(x) = 0}, as columns over the source generators.
inline Matrix kernel_lattice(const ModuleMap& f) {
    const std::size_t g = f.source().gens();
    const Matrix K = ColumnEchelon(hconcat(f.matrix(), f.target().lifted_relations())).kernel_basis();
    return K.row_slice(0, g).reduced(f.source().ring()).without_zero_columns();
}

inline Submodule kernel_submodule(const ModuleMap& f) { return {f.source(), kernel_lattice(f)}; }

/// {x in source : f(x) = 0 in target}, with its inclusion into the source.
inline PresentedSubmodule kernel_of_map(const ModuleMap& f) { return present_submodule(kernel_submodule(f)); }

inline Submodule image_submodule(const ModuleMap& f) { return {f.target(), f.matrix()}; }

inline PresentedQuotient cokernel_of_map(const ModuleMap& f) {
    const Presentation& T = f.target();
    const auto min = minimize(Presentation(T.ring(), T.gens(), hconcat(T.rels(), f.matrix())));
    return {min.module, ModuleMap(T, min.module, min.to_minimal, ModuleMap::Trusted{}), min.from_minimal};
}

/// N / S.
inline PresentedQuotient quotient_by_submodule(const Submodule& S) {
    return cokernel_of_map(ModuleMap(present_submodule(S).inclusion));
}

/// The map X/S -> Y/T induced by f: X -> Y, given f(S) lies in T.
inline ModuleMap induced_on_quotients(const ModuleMap& f, const PresentedQuotient& from, const PresentedQuotient& to) {
    return ModuleMap(from.module, to.module, to.projection.matrix() * f.matrix() * from.section, ModuleMap::Trusted{});
}

/// Factors f: A -> Y through an injective inclusion S -> Y whose image contains f(A).
inline ModuleMap factor_through(const ModuleMap& f, const ModuleMap& inclusion) {
    const Matrix lattice = hconcat(inclusion.matrix(), f.target().lifted_relations());
    ColumnEchelon echelon(lattice);
    Matrix m(inclusion.source().gens(), f.source().gens());
    for (std::size_t c = 0; c < f.matrix().cols(); ++c) {
        const auto x = echelon.solve(f.matrix().column_vector(c));
        if (!x) throw Error(ErrorCode::NotWellDefined, "map does not land in the submodule");
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = (*x)[r];
    }
    return ModuleMap(f.source(), inclusion.source(), m, ModuleMap::Trusted{});
}

/// g o f.
inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (f.target() != g.source()) throw Error(ErrorCode::AmbientMismatch, "maps do not compose");
    return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix(), ModuleMap::Trusted{});
}

inline bool is_zero_map(const ModuleMap& f) {
    ColumnEchelon span(f.target().lifted_relations(), false);
    for (std::size_t c = 0; c < f.matrix().cols(); ++c)
        if (!span.contains(f.matrix().column_vector(c))) return false;
    return true;
}

inline bool is_injective(const ModuleMap& f) { return is_zero_module(kernel_of_map(f).module); }
inline bool is_surjective(const ModuleMap& f) { return is_zero_module(cokernel_of_map(f).module); }

/// Whether r kills every element of M.
inline bool is_killed_by(const Presentation& M, const Integer& r) { return is_zero_map(mult_map(M, r)); }

} // namespace fgmod
