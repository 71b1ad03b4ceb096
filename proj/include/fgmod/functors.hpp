#pragma once

#include <vector>

#include "fgmod/module.hpp"

namespace fgmod {

/// a (x) I_k: each entry of a becomes a k x k scalar block.
inline Matrix kron_identity(const Matrix& a, std::size_t k) {
    Matrix m(a.rows() * k, a.cols() * k);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c) == 0) continue;
            for (std::size_t t = 0; t < k; ++t) m(r * k + t, c * k + t) = a(r, c);
        }
    return m;
}

/// I_k (x) a: k copies of a down the diagonal.
inline Matrix identity_kron(std::size_t k, const Matrix& a) {
    Matrix m(k * a.rows(), k * a.cols());
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) m(t * a.rows() + r, t * a.cols() + c) = a(r, c);
    return m;
}

/// Hom(M, N) with each generator realized as a target.gens x source.gens matrix, flattened
/// row-major (entry (j, i) at j * source.gens + i).
class HomSpace {
public:
    HomSpace(const Presentation& M, const Presentation& N) : source_(M), target_(N) {
        require_same_ring(M.ring(), N.ring());
        const RingSpec& ring = M.ring();
        const std::size_t g = M.gens(), h = N.gens();
        const Matrix& A = M.rels();
        const Matrix B = N.lifted_relations();
        const std::size_t r = A.cols(), s = B.cols();

        // X A = B Z, unknowns (vec X, vec Z).
        Matrix system(h * r, h * g + s * r);
        for (std::size_t j = 0; j < h; ++j)
            for (std::size_t c = 0; c < r; ++c) {
                const std::size_t row = j * r + c;
                for (std::size_t i = 0; i < g; ++i) system(row, j * g + i) = A(i, c);
                for (std::size_t l = 0; l < s; ++l) system(row, h * g + l * r + c) = -B(j, l);
            }
        const Matrix solutions = ColumnEchelon(system).kernel_basis();
        generators_ = solutions.row_slice(0, h * g).reduced(ring).without_zero_columns();

        // Maps landing in the relations are zero.
        null_ = Matrix(h * g, g * s);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t l = 0; l < s; ++l)
                for (std::size_t j = 0; j < h; ++j) null_(j * g + i, i * s + l) = B(j, l);

        auto min = minimize(subquotient(ring, generators_, null_));
        module_ = std::move(min.module);
        to_minimal_ = std::move(min.to_minimal);
        basis_ = (generators_ * min.from_minimal).reduced(ring);
        lattice_ = ColumnEchelon(hconcat(generators_, null_));
    }

    const Presentation& module() const { return module_; }
    const Presentation& source() const { return source_; }
    const Presentation& target() const { return target_; }

    /// Column t is the flattened matrix of the homomorphism named by generator t.
    const Matrix& basis() const { return basis_; }

    Matrix map_matrix(std::size_t t) const {
        Matrix X(target_.gens(), source_.gens());
        for (std::size_t j = 0; j < X.rows(); ++j)
            for (std::size_t i = 0; i < X.cols(); ++i) X(j, i) = basis_(j * source_.gens() + i, t);
        return X;
    }

    /// Coordinates of a well-defined homomorphism X in the generators of module().
    std::vector<Integer> coordinates(const Matrix& X) const {
        std::vector<Integer> flat(X.rows() * X.cols());
        for (std::size_t j = 0; j < X.rows(); ++j)
            for (std::size_t i = 0; i < X.cols(); ++i) flat[j * X.cols() + i] = X(j, i);
        const auto y = lattice_.solve(flat);
        if (!y) throw Error(ErrorCode::NotWellDefined, "matrix is not a homomorphism");
        std::vector<Integer> coeff(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(generators_.cols()));
        std::vector<Integer> out(module_.gens());
        for (std::size_t t = 0; t < out.size(); ++t) {
            for (std::size_t k = 0; k < coeff.size(); ++k) out[t] += to_minimal_(t, k) * coeff[k];
            out[t] = module_.ring().reduce(out[t]);
        }
        return out;
    }

private:
    Presentation source_;
    Presentation target_;
    Presentation module_;
    Matrix generators_;
    Matrix null_;
    Matrix to_minimal_;
    Matrix basis_;
    ColumnEchelon lattice_{Matrix(0, 0)};
};

inline Presentation hom_module(const Presentation& M, const Presentation& N) { return HomSpace(M, N).module(); }

/// Hom(M, f): X -> f X.
inline ModuleMap hom_map(const HomSpace& from, const HomSpace& to, const ModuleMap& f) {
    Matrix m(to.module().gens(), from.module().gens());
    for (std::size_t t = 0; t < from.module().gens(); ++t) {
        const auto y = to.coordinates(f.matrix() * from.map_matrix(t));
        for (std::size_t r = 0; r < y.size(); ++r) m(r, t) = y[r];
    }
    return ModuleMap(from.module(), to.module(), m, ModuleMap::Trusted{});
}

/// Hom(f, N): X -> X f, for f: M' -> M.
inline ModuleMap hom_map_contravariant(const HomSpace& from, const HomSpace& to, const ModuleMap& f) {
    Matrix m(to.module().gens(), from.module().gens());
    for (std::size_t t = 0; t < from.module().gens(); ++t) {
        const auto y = to.coordinates(from.map_matrix(t) * f.matrix());
        for (std::size_t r = 0; r < y.size(); ++r) m(r, t) = y[r];
    }
    return ModuleMap(from.module(), to.module(), m, ModuleMap::Trusted{});
}

/// M (x) N with generators indexed i * N.gens + j, together with its minimal form.
class TensorSpace {
public:
    TensorSpace(const Presentation& M, const Presentation& N) : left_(M), right_(N) {
        require_same_ring(M.ring(), N.ring());
        const std::size_t g = M.gens(), h = N.gens();
        raw_ = Presentation(M.ring(), g * h,
                            hconcat(kron_identity(M.rels(), h), identity_kron(g, N.rels())).without_zero_columns());
        auto min = minimize(raw_);
        module_ = std::move(min.module);
        to_minimal_ = std::move(min.to_minimal);
        from_minimal_ = std::move(min.from_minimal);
    }

    const Presentation& module() const { return module_; }
    const Presentation& raw() const { return raw_; }
    const Presentation& left() const { return left_; }
    const Presentation& right() const { return right_; }
    const Matrix& to_minimal() const { return to_minimal_; }
    const Matrix& from_minimal() const { return from_minimal_; }

private:
    Presentation left_, right_, raw_, module_;
    Matrix to_minimal_, from_minimal_;
};

inline Presentation tensor_module(const Presentation& M, const Presentation& N) { return TensorSpace(M, N).module(); }

/// M (x) f.
inline ModuleMap tensor_map(const TensorSpace& from, const TensorSpace& to, const ModuleMap& f) {
    const Matrix raw = identity_kron(from.left().gens(), f.matrix());
    return ModuleMap(from.module(), to.module(), to.to_minimal() * raw * from.from_minimal(), ModuleMap::Trusted{});
}

/// Over Z the dual against Q/Z of a torsion module is abstractly the module itself; over Z/n it is
/// Hom(N, Z/n).
inline Presentation matlis_dual(const Presentation& N) {
    if (N.ring().is_integers()) {
        const CanonicalForm form = canonical_form(N);
        if (form.free_rank > 0) throw Error(ErrorCode::FreePartNotSupported, "dual of " + form.to_string());
        return Presentation::from_canonical(form);
    }
    return hom_module(N, Presentation::free(N.ring(), 1));
}

/// F_L -> ... -> F_1 -> F_0 -> target. differentials[k] is the matrix of F_{k+1} -> F_k.
struct FreeResolutionPrefix {
    Presentation target;
    std::size_t length = 0;
    std::vector<Matrix> differentials;

    std::size_t rank(std::size_t k) const {
        if (k == 0) return target.gens();
        return differentials[k - 1].cols();
    }
};

inline FreeResolutionPrefix free_resolution_prefix(const Presentation& M, std::size_t length) {
    FreeResolutionPrefix res{M, length, {}};
    if (length == 0) return res;
    res.differentials.push_back(M.rels().without_zero_columns());
    while (res.differentials.size() < length)
        res.differentials.push_back(kernel_generators(M.ring(), res.differentials.back()));
    return res;
}

/// N^k.
inline Presentation power_of(const Presentation& N, std::size_t k) {
    return Presentation(N.ring(), k * N.gens(), identity_kron(k, N.rels()));
}

/// ker(beta) / im(alpha) for alpha: A -> B, beta: B -> C with beta alpha = 0.
inline Presentation homology(const ModuleMap& alpha, const ModuleMap& beta) {
    const Presentation& B = beta.source();
    const Matrix kernel = kernel_lattice(beta);
    return minimize(subquotient(B.ring(), kernel, hconcat(alpha.matrix(), B.lifted_relations()))).module;
}

/// Ext^i(M, N) as the cohomology of Hom(F, N).
inline Presentation ext(std::size_t i, const Presentation& M, const Presentation& N) {
    require_same_ring(M.ring(), N.ring());
    const auto res = free_resolution_prefix(minimize(M).module, i + 1);
    const std::size_t h = N.gens();
    const auto cochain = [&](std::size_t k) { return power_of(N, res.rank(k)); };
    // Hom(F_k, N) -> Hom(F_{k+1}, N) is precomposition with d_{k+1}.
    const auto coboundary = [&](std::size_t k) {
        return ModuleMap(cochain(k), cochain(k + 1), kron_identity(res.differentials[k].transpose(), h),
                         ModuleMap::Trusted{});
    };
    const ModuleMap beta = coboundary(i);
    if (i == 0) {
        const Presentation C0 = cochain(0);
        return homology(ModuleMap(Presentation::zero(M.ring()), C0, Matrix(C0.gens(), 0), ModuleMap::Trusted{}), beta);
    }
    return homology(coboundary(i - 1), beta);
}

/// Tor_i(M, N) as the homology of F (x) N.
inline Presentation tor(std::size_t i, const Presentation& M, const Presentation& N) {
    require_same_ring(M.ring(), N.ring());
    const auto res = free_resolution_prefix(minimize(M).module, i + 1);
    const std::size_t h = N.gens();
    const auto chain = [&](std::size_t k) { return power_of(N, res.rank(k)); };
    const auto boundary = [&](std::size_t k) { // F_k (x) N -> F_{k-1} (x) N
        return ModuleMap(chain(k), chain(k - 1), kron_identity(res.differentials[k - 1], h), ModuleMap::Trusted{});
    };
    const ModuleMap alpha = boundary(i + 1);
    if (i == 0) {
        const Presentation C0 = chain(0);
        return homology(alpha, ModuleMap(C0, Presentation::zero(M.ring()), Matrix(0, C0.gens()), ModuleMap::Trusted{}));
    }
    return homology(alpha, boundary(i));
}

} // namespace fgmod
