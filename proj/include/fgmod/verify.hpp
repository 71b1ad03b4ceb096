#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "fgmod/cohomology.hpp"

namespace fgmod::verify {

/// Bounds for the module/ideal enumeration over one ring.
struct GridSpec {
    std::string label;
    RingSpec ring = RingSpec::integers();
    Integer max_torsion_order = 16;
    std::size_t max_free_rank = 0;
    std::vector<Integer> ideal_generators;
    std::optional<std::vector<CanonicalForm>> module_whitelist;
    std::size_t max_degree = 1;
    unsigned kmax = default_kmax;
};

inline GridSpec default_integer_grid() {
    GridSpec g;
    g.label = "Z";
    g.ring = RingSpec::integers();
    g.max_torsion_order = 16;
    g.max_free_rank = 1;
    g.ideal_generators = {0, 2, 3, 4, 6};
    g.max_degree = 1;
    return g;
}

/// Every principal ideal of Z/n, one generator per divisor of n.
inline GridSpec default_modular_grid(unsigned n) {
    GridSpec g;
    g.ring = RingSpec::integers_mod(n);
    g.label = g.ring.to_string();
    g.max_torsion_order = 16;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) g.ideal_generators.emplace_back(d);
    g.max_degree = 3;
    return g;
}

inline std::vector<GridSpec> default_grids() {
    return {default_integer_grid(), default_modular_grid(6), default_modular_grid(8)};
}

namespace detail {

inline void extend_chains(const GridSpec& g, std::vector<Integer>& chain, const Integer& order,
                          std::vector<std::vector<Integer>>& out) {
    out.push_back(chain);
    const Integer start = chain.empty() ? Integer(2) : chain.back();
    for (Integer d = start; order * d <= g.max_torsion_order; d += 1) {
        if (!chain.empty() && d % chain.back() != 0) continue;
        if (!g.ring.is_integers() && g.ring.modulus() % d != 0) continue;
        chain.push_back(d);
        extend_chains(g, chain, order * d, out);
        chain.pop_back();
    }
}

inline Integer torsion_order(const CanonicalForm& C) {
    Integer n = 1;
    for (const auto& d : C.torsion_factors) n *= d;
    return n;
}

} // namespace detail

/// One canonical form per isomorphism class within the bounds, ordered by torsion order, free
/// rank, number of factors, then factors lexicographically.
inline std::vector<CanonicalForm> enumerate_forms(const GridSpec& g) {
    std::vector<CanonicalForm> forms;
    if (g.module_whitelist) {
        forms = *g.module_whitelist;
    } else {
        std::vector<std::vector<Integer>> chains;
        std::vector<Integer> chain;
        detail::extend_chains(g, chain, 1, chains);
        const std::size_t max_rank = g.ring.is_integers() ? g.max_free_rank : 0;
        for (std::size_t r = 0; r <= max_rank; ++r)
            for (const auto& c : chains) forms.push_back(CanonicalForm{g.ring, c, r});
    }
    std::stable_sort(forms.begin(), forms.end(), [](const CanonicalForm& a, const CanonicalForm& b) {
        return std::make_tuple(detail::torsion_order(a), a.free_rank, a.torsion_factors.size(), a.torsion_factors) <
               std::make_tuple(detail::torsion_order(b), b.free_rank, b.torsion_factors.size(), b.torsion_factors);
    });
    return forms;
}

inline std::vector<Presentation> enumerate_modules(const GridSpec& g) {
    std::vector<Presentation> out;
    for (const auto& f : enumerate_forms(g)) out.push_back(Presentation::from_canonical(f));
    return out;
}

/// Distinct canonical generators of the grid's ideals, first occurrence order.
inline std::vector<Integer> grid_ideals(const GridSpec& g) {
    std::vector<Integer> out;
    for (const auto& x : g.ideal_generators) {
        const Integer d = principal_ideal(g.ring, x).canonical;
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    return out;
}

/// 0 -> sub -> mid -> quo -> 0 with explicit maps; mid is a grid module.
struct ShortExact {
    int sub = 0, mid = 0, quo = 0;
    ModuleMap inclusion;
    ModuleMap projection;
};

/// Memoizing evaluator over isomorphism classes. Every cached value is produced by the library
/// function on the canonical presentation of its arguments; results are interned as ids.
class Engine {
public:
    Engine(RingSpec ring, unsigned kmax = default_kmax) : ring_(std::move(ring)), kmax_(kmax) {}

    const RingSpec& ring() const { return ring_; }
    unsigned kmax() const { return kmax_; }

    int intern(const CanonicalForm& form) {
        std::lock_guard lock(intern_mutex_);
        auto it = ids_.find(form);
        if (it != ids_.end()) return it->second;
        const int id = static_cast<int>(entries_.size());
        entries_.push_back(std::make_unique<Entry>(Entry{form, Presentation::from_canonical(form)}));
        ids_.emplace(form, id);
        return id;
    }

    int intern(const Presentation& P) { return intern(canonical_form(P)); }

    const CanonicalForm& form(int id) const { return entry(id).form; }
    const Presentation& module(int id) const { return entry(id).module; }
    std::string name(int id) const { return form(id).to_string(); }
    bool is_zero(int id) const { return form(id).is_zero(); }
    bool is_finite(int id) const { return form(id).is_finite(); }
    Ideal ideal(const Integer& d) const { return principal_ideal(ring_, d); }
    Integer power_of(const Integer& d, unsigned k) const { return ring_power(ring_, d, k); }

    int free_module() { return intern(Presentation::free(ring_, 1)); }

    int hom(int m, int n) {
        return memo(Op::Hom, 0, m, n, 0, [&] { return intern(hom_module(module(m), module(n))); });
    }
    int tensor(int m, int n) {
        return memo(Op::Tensor, 0, m, n, 0, [&] { return intern(tensor_module(module(m), module(n))); });
    }
    int sum(int m, int n) {
        return memo(Op::Sum, 0, m, n, 0, [&] { return intern(direct_sum({module(m), module(n)})); });
    }
    int quotient(int m, const Integer& d) {
        return memo(Op::Quotient, 0, m, -1, d, [&] { return intern(quotient_by_element(module(m), d)); });
    }
    int gamma(int m, const Integer& d) {
        return memo(Op::Gamma, 0, m, -1, d, [&] { return intern(fgmod::gamma(module(m), ideal(d), kmax_).value); });
    }
    std::optional<int> lambda(int m, const Integer& d) {
        return optional_memo(Op::Lambda, 0, m, -1, d, [&] { return intern(fgmod::lambda(module(m), ideal(d), kmax_).value); });
    }
    std::optional<unsigned> stabilization(int m, const Integer& d) {
        auto k = optional_memo(Op::Stabilization, 0, m, -1, d, [&] {
            return static_cast<int>(stabilization_exponent(module(m), ideal(d), kmax_));
        });
        if (!k) return std::nullopt;
        return static_cast<unsigned>(*k);
    }
    int gamma_gen(int m, int n, const Integer& d) { return gamma(hom(m, n), d); }
    std::optional<int> lambda_gen(int m, int n, const Integer& d) { return lambda(tensor(m, n), d); }

    bool reduced(int m, const Integer& d) {
        return memo(Op::Reduced, 0, m, -1, d, [&] { return int(is_reduced(module(m), ideal(d))); }) != 0;
    }
    bool reduced_via_torsion(int m, const Integer& d) {
        return memo(Op::ReducedTorsion, 0, m, -1, d, [&] { return int(is_reduced_via_torsion(module(m), ideal(d))); }) != 0;
    }
    bool coreduced(int m, const Integer& d) {
        return memo(Op::Coreduced, 0, m, -1, d, [&] { return int(is_coreduced(module(m), ideal(d))); }) != 0;
    }
    bool killed(int m, const Integer& d) {
        return memo(Op::Killed, 0, m, -1, d, [&] { return int(is_killed_by(module(m), d)); }) != 0;
    }
    bool reduced_wrt(int m, int n, const Integer& d) { return reduced(hom(m, n), d); }
    bool coreduced_wrt(int m, int n, const Integer& d) { return coreduced(tensor(m, n), d); }
    bool in_B(int m, int n, const Integer& d) { return reduced_wrt(m, n, d) && coreduced_wrt(m, n, d); }
    bool complete(int m, const Integer& d) {
        auto l = lambda(m, d);
        return l && *l == m;
    }

    int ext(std::size_t i, int m, int n) {
        return memo(Op::Ext, int(i), m, n, 0, [&] { return intern(fgmod::ext(i, module(m), module(n))); });
    }
    int tor(std::size_t i, int m, int n) {
        return memo(Op::Tor, int(i), m, n, 0, [&] { return intern(fgmod::tor(i, module(m), module(n))); });
    }
    std::optional<int> dual(int m) {
        if (ring_.is_integers() && !is_finite(m)) return std::nullopt;
        return memo(Op::Dual, 0, m, -1, 0, [&] { return intern(matlis_dual(module(m))); });
    }

    int glc_fast(std::size_t i, int m, int n, const Integer& d) { return ext(i, quotient(m, d), n); }
    int glh_fast(std::size_t i, int m, int n, const Integer& d) { return tor(i, quotient(m, d), n); }
    std::optional<int> glc_stable(std::size_t i, int m, int n, const Integer& d) {
        auto k = stabilization(m, d);
        if (!k) return std::nullopt;
        return ext(i, quotient(m, power_of(d, *k)), n);
    }
    std::optional<int> glh_stable(std::size_t i, int m, int n, const Integer& d) {
        auto k = stabilization(m, d);
        if (!k) return std::nullopt;
        return tor(i, quotient(m, power_of(d, *k)), n);
    }
    std::optional<int> glc(std::size_t i, int m, int n, const Integer& d) {
        if (reduced_wrt(m, n, d)) return glc_fast(i, m, n, d);
        return glc_stable(i, m, n, d);
    }
    std::optional<int> glh(std::size_t i, int m, int n, const Integer& d) {
        if (coreduced_wrt(m, n, d)) return glh_fast(i, m, n, d);
        return glh_stable(i, m, n, d);
    }

    /// Projective over the ring: free over Z; over Z/n every factor d has gcd(d, n/d) = 1.
    bool projective(int m) const {
        const auto& f = form(m);
        if (ring_.is_integers()) return f.torsion_factors.empty();
        for (const auto& d : f.torsion_factors)
            if (gcd(d, ring_.modulus() / d) != 1) return false;
        return true;
    }

    /// Every short exact sequence with middle term m, one per submodule; finite m only.
    const std::vector<ShortExact>& sequences(int m) {
        {
            std::lock_guard lock(sequence_mutex_);
            auto it = sequences_.find(m);
            if (it != sequences_.end()) return *it->second;
        }
        auto built = std::make_unique<std::vector<ShortExact>>(build_sequences(m));
        std::lock_guard lock(sequence_mutex_);
        auto [it, inserted] = sequences_.emplace(m, std::move(built));
        return *it->second;
    }

private:
    enum class Op { Hom, Tensor, Sum, Quotient, Gamma, Lambda, Stabilization, Reduced, ReducedTorsion, Coreduced, Killed, Ext, Tor, Dual };

    struct Entry {
        CanonicalForm form;
        Presentation module;
    };

    using Key = std::tuple<int, int, int, int, Integer>;

    const Entry& entry(int id) const {
        std::lock_guard lock(intern_mutex_);
        return *entries_.at(static_cast<std::size_t>(id));
    }

    template <class F>
    int memo(Op op, int i, int a, int b, const Integer& d, F&& compute) {
        const Key key{int(op), i, a, b, d};
        {
            std::lock_guard lock(cache_mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        const int value = compute();
        std::lock_guard lock(cache_mutex_);
        cache_.emplace(key, value);
        return value;
    }

    // NonStabilizing becomes an empty result, cached as -1.
    template <class F>
    std::optional<int> optional_memo(Op op, int i, int a, int b, const Integer& d, F&& compute) {
        const int v = memo(op, i, a, b, d, [&] {
            try {
                return compute();
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NonStabilizing) throw;
                return -1;
            }
        });
        if (v < 0) return std::nullopt;
        return v;
    }

    std::vector<ShortExact> build_sequences(int m) {
        const CanonicalForm f = form(m);
        if (!f.is_finite()) throw Error(ErrorCode::InfiniteModule, "submodules of " + f.to_string());
        std::vector<std::int64_t> orders;
        for (const auto& d : f.torsion_factors) orders.push_back(static_cast<std::int64_t>(d));

        // Elements as mixed-radix tuples; submodules as bitsets closed under addition.
        std::vector<std::vector<std::int64_t>> elements{{}};
        for (auto d : orders) {
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& e : elements)
                for (std::int64_t v = 0; v < d; ++v) {
                    auto x = e;
                    x.push_back(v);
                    next.push_back(std::move(x));
                }
            elements = std::move(next);
        }
        const std::size_t size = elements.size();
        const auto index_of = [&](const std::vector<std::int64_t>& x) {
            std::size_t idx = 0;
            for (std::size_t j = 0; j < orders.size(); ++j) idx = idx * static_cast<std::size_t>(orders[j]) + static_cast<std::size_t>(x[j]);
            return idx;
        };
        const auto add = [&](std::size_t a, std::size_t b) {
            std::vector<std::int64_t> x(orders.size());
            for (std::size_t j = 0; j < orders.size(); ++j) x[j] = (elements[a][j] + elements[b][j]) % orders[j];
            return index_of(x);
        };
        const auto close = [&](std::vector<bool> s) {
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t a = 0; a < size; ++a)
                    if (s[a])
                        for (std::size_t b = 0; b < size; ++b)
                            if (s[b] && !s[add(a, b)]) {
                                s[add(a, b)] = true;
                                grew = true;
                            }
            }
            return s;
        };

        std::vector<bool> zero(size, false);
        zero[0] = true;
        std::set<std::vector<bool>> seen{zero};
        std::vector<std::pair<std::vector<bool>, std::vector<std::size_t>>> subs{{zero, {}}};
        for (std::size_t k = 0; k < subs.size(); ++k)
            for (std::size_t x = 0; x < size; ++x) {
                if (subs[k].first[x]) continue;
                std::vector<bool> s = subs[k].first;
                s[x] = true;
                s = close(std::move(s));
                if (!seen.insert(s).second) continue;
                auto gens = subs[k].second;
                gens.push_back(x);
                subs.emplace_back(std::move(s), std::move(gens));
            }

        const Presentation& P = module(m);
        std::vector<ShortExact> out;
        for (const auto& [mask, gens] : subs) {
            Matrix columns(P.gens(), gens.size());
            for (std::size_t c = 0; c < gens.size(); ++c)
                for (std::size_t r = 0; r < P.gens(); ++r) columns(r, c) = elements[gens[c]][r];
            auto sub = present_submodule(Submodule{P, columns});
            auto quo = cokernel_of_map(sub.inclusion);
            out.push_back({intern(sub.module), m, intern(quo.module), sub.inclusion, quo.projection});
        }
        return out;
    }

    RingSpec ring_;
    unsigned kmax_;
    mutable std::mutex intern_mutex_;
    std::map<CanonicalForm, int> ids_;
    std::vector<std::unique_ptr<Entry>> entries_;
    std::mutex cache_mutex_;
    std::map<Key, int> cache_;
    std::mutex sequence_mutex_;
    std::map<int, std::unique_ptr<std::vector<ShortExact>>> sequences_;
};

enum class Verdict { pass, fail, partial };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::partial: return "partial";
    }
    return "?";
}

struct Counterexample {
    std::string M, N, a, detail;
};

struct Skipped {
    std::string M, N, a, reason;
    std::size_t free_rank = 0;
    Integer d;
};

struct ClaimReport {
    std::string claim_id;
    std::string anchor;
    std::string grid;
    bool expected_fail = false;
    std::size_t instances_checked = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<Skipped> skipped;

    Verdict verdict() const {
        if (!counterexamples.empty()) return Verdict::fail;
        if (!skipped.empty()) return Verdict::partial;
        return Verdict::pass;
    }

    bool has_counterexample(const std::string& M, const std::string& N, const std::string& a,
                            const std::string& detail_fragment = "") const {
        return std::any_of(counterexamples.begin(), counterexamples.end(), [&](const Counterexample& c) {
            return c.M == M && c.N == N && c.a == a && c.detail.find(detail_fragment) != std::string::npos;
        });
    }
};

/// What a claim sees while it runs.
class Context {
public:
    Context(Engine& engine, const GridSpec& grid, ClaimReport& report) : e(engine), grid_(grid), report_(report) {
        for (const auto& f : enumerate_forms(grid)) modules.push_back(e.intern(f));
        ideals = grid_ideals(grid);
    }

    Engine& e;
    std::vector<int> modules;
    std::vector<Integer> ideals;

    const GridSpec& grid() const { return grid_; }
    std::size_t max_degree() const { return grid_.max_degree; }

    std::string ideal_name(const Integer& d) const { return "(" + fgmod::to_string(d) + ")"; }

    void check(bool ok, int m, int n, const Integer& d, const std::string& detail = "") {
        ++report_.instances_checked;
        if (!ok) report_.counterexamples.push_back({e.name(m), n < 0 ? "-" : e.name(n), ideal_name(d), detail});
    }

    void skip(int m, int n, const Integer& d, int subject, const std::string& reason) {
        report_.skipped.push_back({e.name(m), n < 0 ? "-" : e.name(n), ideal_name(d), reason,
                                   e.form(subject).free_rank, d});
    }

    std::vector<int> finite_modules() const {
        std::vector<int> out;
        for (int m : modules)
            if (e.is_finite(m)) out.push_back(m);
        return out;
    }

private:
    const GridSpec& grid_;
    ClaimReport& report_;
};

struct Claim {
    std::string id;
    std::string anchor;
    bool expected_fail = false;
    std::function<bool(const GridSpec&)> applies;
    std::function<void(Context&)> run;
};

namespace detail {

inline bool any_grid(const GridSpec&) { return true; }
inline bool modular_grid(const GridSpec& g) { return !g.ring.is_integers(); }

/// Z/n with n squarefree.
inline bool regular_grid(const GridSpec& g) {
    if (g.ring.is_integers()) return false;
    Integer n = g.ring.modulus();
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

inline std::string flags(std::initializer_list<bool> values) {
    std::string s;
    for (bool v : values) s += v ? 'T' : 'F';
    return s;
}

inline bool all_equal(std::initializer_list<bool> values) {
    return std::all_of(values.begin(), values.end(), [&](bool v) { return v == *values.begin(); });
}

/// Gamma_a(M, -) on 0 -> S -> N -> Q -> 0: injective on the left and exact in the middle.
inline bool gamma_left_exact(const Presentation& M, const ShortExact& s, const Ideal& a, unsigned kmax) {
    const HomSpace HS(M, s.inclusion.source()), HN(M, s.inclusion.target()), HQ(M, s.projection.target());
    const ModuleMap f1 = hom_map(HS, HN, s.inclusion);
    const ModuleMap f2 = hom_map(HN, HQ, s.projection);
    const auto tS = torsion_part(HS.module(), a, kmax);
    const auto tN = torsion_part(HN.module(), a, kmax);
    const auto tQ = torsion_part(HQ.module(), a, kmax);
    const ModuleMap g1 = factor_through(compose(f1, tS.submodule.inclusion), tN.submodule.inclusion);
    const ModuleMap g2 = factor_through(compose(f2, tN.submodule.inclusion), tQ.submodule.inclusion);
    return is_injective(g1) && submodule_equal(image_submodule(g1), kernel_submodule(g2));
}

/// Lambda_a(M, -) on 0 -> S -> N -> Q -> 0: surjective on the right and exact in the middle.
inline bool lambda_right_exact(const Presentation& M, const ShortExact& s, const Ideal& a, unsigned kmax) {
    const TensorSpace TS(M, s.inclusion.source()), TN(M, s.inclusion.target()), TQ(M, s.projection.target());
    const ModuleMap h1 = tensor_map(TS, TN, s.inclusion);
    const ModuleMap h2 = tensor_map(TN, TQ, s.projection);
    const auto cS = completion_part(TS.module(), a, kmax);
    const auto cN = completion_part(TN.module(), a, kmax);
    const auto cQ = completion_part(TQ.module(), a, kmax);
    const ModuleMap k1 = induced_on_quotients(h1, cS.quotient, cN.quotient);
    const ModuleMap k2 = induced_on_quotients(h2, cN.quotient, cQ.quotient);
    return is_surjective(k2) && submodule_equal(image_submodule(k1), kernel_submodule(k2));
}

inline std::string sequence_name(Engine& e, const ShortExact& s) {
    return "0 -> " + e.name(s.sub) + " -> " + e.name(s.mid) + " -> " + e.name(s.quo) + " -> 0";
}

/// Sequences with distinct (sub, quo) types for each finite middle term.
inline std::vector<const ShortExact*> sequence_types(Engine& e, int mid) {
    std::vector<const ShortExact*> out;
    std::set<std::pair<int, int>> seen;
    for (const auto& s : e.sequences(mid))
        if (seen.insert({s.sub, s.quo}).second) out.push_back(&s);
    return out;
}

inline std::vector<Claim> build_registry() {
    std::vector<Claim> claims;
    const auto add = [&](std::string id, std::string anchor, std::function<bool(const GridSpec&)> applies,
                         std::function<void(Context&)> run, bool expected_fail = false) {
        claims.push_back({std::move(id), std::move(anchor), expected_fail, std::move(applies), std::move(run)});
    };

    add("equiv-reduced-wrt", "a Gamma_a(M,N) = 0", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    const int g = e.gamma_gen(m, n, d);
                    const int hom1 = e.hom(e.quotient(m, d), n);
                    const bool i1 = e.reduced_wrt(m, n, d);
                    const bool i2 = hom1 == e.hom(e.quotient(m, e.power_of(d, 2)), n);
                    const bool i3 = g == hom1;
                    const bool i4 = e.killed(g, d);
                    const bool i5 = e.reduced(g, d);
                    const bool both_paths = e.reduced(n, d) == e.reduced_via_torsion(n, d);
                    c.check(all_equal({i1, i2, i3, i4, i5}) && both_paths, m, n, d,
                            "items " + flags({i1, i2, i3, i4, i5}) + (both_paths ? "" : ", reduced paths disagree"));
                }
    });

    add("equiv-coreduced-wrt", "a Lambda_a(M,N) = 0", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    const int t1 = e.tensor(e.quotient(m, d), n);
                    const bool i1 = e.coreduced_wrt(m, n, d);
                    const bool i2 = t1 == e.tensor(e.quotient(m, e.power_of(d, 2)), n);
                    const auto l = e.lambda_gen(m, n, d);
                    if (!l) {
                        c.check(i1 == i2, m, n, d, "items " + flags({i1, i2}));
                        c.skip(m, n, d, e.tensor(m, n), "NonStabilizing: items 3-5 need Lambda_a(M,N)");
                        continue;
                    }
                    const bool i3 = *l == t1;
                    const bool i4 = e.killed(*l, d);
                    const bool i5 = e.coreduced(*l, d);
                    c.check(all_equal({i1, i2, i3, i4, i5}), m, n, d, "items " + flags({i1, i2, i3, i4, i5}));
                }
    });

    add("gamma-compose", "Gamma_a(M,N) = Gamma_a(Hom_R(M,N))", any_grid, [](Context& c) {
        auto& e = c.e;
        const unsigned kmax = e.kmax();
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    // Colimit of Hom(M/a^k M, N): injective transitions, constant once two terms agree.
                    int colimit = e.hom(e.quotient(m, d), n);
                    if (d != 0 && d != 1) {
                        for (unsigned k = 1;; ++k) {
                            if (k > kmax) throw Error(ErrorCode::NonStabilizing, "Hom(M/a^k M, N) still growing");
                            const int next = e.hom(e.quotient(m, e.power_of(d, k + 1)), n);
                            if (e.form(next).order() == e.form(colimit).order()) break;
                            colimit = next;
                        }
                    }
                    const int g = e.gamma_gen(m, n, d);
                    c.check(colimit == g, m, n, d, "colimit " + e.name(colimit) + " vs " + e.name(g));

                    // Limit of M/a^k M (x) N: surjective transitions, same stopping rule.
                    const int t = e.tensor(m, n);
                    if (e.ring().is_integers() && d != 0 && d != 1 && !e.is_finite(t)) {
                        c.skip(m, n, d, t, "NonStabilizing: lim M/a^k M (x) N leaves f.g. modules");
                        continue;
                    }
                    int limit = e.tensor(e.quotient(m, d), n);
                    if (d == 0) limit = t;
                    else if (d != 1) {
                        for (unsigned k = 1;; ++k) {
                            if (k > kmax) throw Error(ErrorCode::NonStabilizing, "M/a^k M (x) N still growing");
                            const int next = e.tensor(e.quotient(m, e.power_of(d, k + 1)), n);
                            if (e.form(next).order() == e.form(limit).order()) break;
                            limit = next;
                        }
                    }
                    const auto l = e.lambda_gen(m, n, d);
                    c.check(l && *l == limit, m, n, d, "limit " + e.name(limit) + " vs " + (l ? e.name(*l) : "undefined"));
                }
    });

    add("gamma-hom-commute", "Gamma_a(M,N) = Hom_R(M,Gamma_a(N))", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    const int lhs = e.gamma_gen(m, n, d), rhs = e.hom(m, e.gamma(n, d));
                    c.check(lhs == rhs, m, n, d, e.name(lhs) + " vs " + e.name(rhs));
                }
    });

    add("gamma-reflect", "N in R^M_a if and only if Gamma_a(N) in R^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    const bool lhs = e.reduced_wrt(m, n, d), rhs = e.reduced_wrt(m, e.gamma(n, d), d);
                    c.check(lhs == rhs, m, n, d, flags({lhs, rhs}));
                }
    });

    add("reduced-implies-wrt", "R_a is contained in R^K_a", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int k : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules)
                    if (e.reduced(n, d)) c.check(e.reduced_wrt(k, n, d), k, n, d);
    });

    add("coreduced-M-absorbs", "R^M_a = R-Mod for coreduced M", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                if (e.coreduced(m, d))
                    for (int n : c.modules) c.check(e.reduced_wrt(m, n, d), m, n, d);
    });

    add("tensor-coreduced", "If either M or N is a-coreduced, then so is M (x)_R N", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules)
                    if (e.coreduced(m, d) || e.coreduced(n, d)) c.check(e.coreduced(e.tensor(m, n), d), m, n, d);
    });

    add("hom-into-reduced", "X in C^M_a implies Hom_R(X,Y) in R^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int x : c.modules) {
                    if (!e.coreduced_wrt(m, x, d)) continue;
                    for (int y : c.modules)
                        c.check(e.reduced_wrt(m, e.hom(x, y), d), m, x, d, "Y = " + e.name(y));
                }
    });

    add("tensor-stays", "X in C^M_a implies X (x)_R Y in C^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int x : c.modules) {
                    if (!e.coreduced_wrt(m, x, d)) continue;
                    for (int y : c.modules)
                        c.check(e.coreduced_wrt(m, e.tensor(x, y), d), m, x, d, "Y = " + e.name(y));
                }
    });

    add("closure-products", "R^M_a is closed under finite products", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (std::size_t i = 0; i < c.modules.size(); ++i) {
                    const int n1 = c.modules[i];
                    if (!e.reduced_wrt(m, n1, d)) continue;
                    for (std::size_t j = i; j < c.modules.size(); ++j) {
                        const int n2 = c.modules[j];
                        if (!e.reduced_wrt(m, n2, d)) continue;
                        c.check(e.reduced_wrt(m, e.sum(n1, n2), d), m, n1, d, "with " + e.name(n2));
                    }
                }
    });

    add("closure-sums", "C^M_a is closed under finite direct sums", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (std::size_t i = 0; i < c.modules.size(); ++i) {
                    const int n1 = c.modules[i];
                    if (!e.coreduced_wrt(m, n1, d)) continue;
                    for (std::size_t j = i; j < c.modules.size(); ++j) {
                        const int n2 = c.modules[j];
                        if (!e.coreduced_wrt(m, n2, d)) continue;
                        c.check(e.coreduced_wrt(m, e.sum(n1, n2), d), m, n1, d, "with " + e.name(n2));
                    }
                }
    });

    add("closure-sub", "R^M_a is closed under submodules", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.reduced_wrt(m, n, d)) continue;
                    for (const auto* s : sequence_types(e, n))
                        c.check(e.reduced_wrt(m, s->sub, d), m, n, d, sequence_name(e, *s));
                }
    });

    add("closure-quot", "C^M_a is closed under quotients", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.coreduced_wrt(m, n, d)) continue;
                    for (const auto* s : sequence_types(e, n))
                        c.check(e.coreduced_wrt(m, s->quo, d), m, n, d, sequence_name(e, *s));
                }
    });

    add("extension-closure-R", "R^M_a is not closed under extension", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules())
                    for (const auto* s : sequence_types(e, n))
                        if (e.reduced_wrt(m, s->sub, d) && e.reduced_wrt(m, s->quo, d))
                            c.check(e.reduced_wrt(m, n, d), m, n, d, sequence_name(e, *s));
    }, true);

    add("extension-closure-C", "C^M_a is not closed under extension", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules())
                    for (const auto* s : sequence_types(e, n))
                        if (e.coreduced_wrt(m, s->sub, d) && e.coreduced_wrt(m, s->quo, d))
                            c.check(e.coreduced_wrt(m, n, d), m, n, d, sequence_name(e, *s));
    }, true);

    add("dual-cor-iff-red", "X in C^M_a if and only if X^v in R^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int x : c.finite_modules()) {
                    const bool lhs = e.coreduced_wrt(m, x, d), rhs = e.reduced_wrt(m, *e.dual(x), d);
                    c.check(lhs == rhs, m, x, d, flags({lhs, rhs}));
                }
    });

    add("dual-red-then-cor", "X^v in C^M_a provided a is finitely generated", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int x : c.finite_modules())
                    if (e.reduced_wrt(m, x, d)) c.check(e.coreduced_wrt(m, *e.dual(x), d), m, x, d);
    });

    add("gamma-dual", "Gamma_a(M,N)^v = Lambda_a(M,N^v)", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.reduced_wrt(m, n, d)) continue;
                    const auto lhs = e.dual(e.gamma_gen(m, n, d));
                    const auto rhs = e.lambda_gen(m, *e.dual(n), d);
                    c.check(lhs && rhs && *lhs == *rhs, m, n, d,
                            (lhs ? e.name(*lhs) : "undefined") + " vs " + (rhs ? e.name(*rhs) : "undefined"));
                }
    });

    add("lambda-dual", "Lambda_a(M,N)^v = Gamma_a(M,N^v)", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.coreduced_wrt(m, n, d)) continue;
                    const auto l = e.lambda_gen(m, n, d);
                    const auto lhs = l ? e.dual(*l) : std::nullopt;
                    const int rhs = e.gamma_gen(m, *e.dual(n), d);
                    c.check(lhs && *lhs == rhs, m, n, d, (lhs ? e.name(*lhs) : "undefined") + " vs " + e.name(rhs));
                }
    });

    add("reflexive", "Gamma_a(M,N) and Lambda_a(M,N) are also reflexive", any_grid, [](Context& c) {
        auto& e = c.e;
        const auto reflexive = [&](int x) {
            const auto once = e.dual(x);
            if (!once) return false;
            const auto twice = e.dual(*once);
            return twice && *twice == x;
        };
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.in_B(m, n, d) || !reflexive(n)) continue;
                    const int g = e.gamma_gen(m, n, d);
                    const auto l = e.lambda_gen(m, n, d);
                    c.check(reflexive(g) && l && reflexive(*l), m, n, d);
                }
    });

    add("gm-adjunction", "Hom_R(Lambda_a(M,P),N) = Hom_R(P,Gamma_a(M,N))", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    if (!e.reduced_wrt(m, n, d)) continue;
                    const int g = e.gamma_gen(m, n, d);
                    for (int p : c.modules) {
                        if (!e.coreduced_wrt(m, p, d)) continue;
                        const auto l = e.lambda_gen(m, p, d);
                        if (!l) {
                            c.skip(m, n, d, e.tensor(m, p), "NonStabilizing: Lambda_a(M,P) for P = " + e.name(p));
                            continue;
                        }
                        const int lhs = e.hom(*l, n), rhs = e.hom(p, g);
                        c.check(lhs == rhs, m, n, d, "P = " + e.name(p) + ": " + e.name(lhs) + " vs " + e.name(rhs));
                    }
                }
    });

    add("gamma-left-exact", "Gamma_a(M,-): R^M_a -> C^M_a is left exact", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.reduced_wrt(m, n, d)) continue;
                    for (const auto& s : e.sequences(n)) {
                        if (!e.reduced_wrt(m, s.sub, d) || !e.reduced_wrt(m, s.quo, d)) continue;
                        c.check(gamma_left_exact(e.module(m), s, e.ideal(d), e.kmax()), m, n, d, sequence_name(e, s));
                    }
                }
    });

    add("lambda-right-exact", "Lambda_a(M,-): C^M_a -> R^M_a is right exact", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.coreduced_wrt(m, n, d)) continue;
                    for (const auto& s : e.sequences(n)) {
                        if (!e.coreduced_wrt(m, s.sub, d) || !e.coreduced_wrt(m, s.quo, d)) continue;
                        c.check(lambda_right_exact(e.module(m), s, e.ideal(d), e.kmax()), m, n, d, sequence_name(e, s));
                    }
                }
    });

    add("both-classes", "M/aM (x)_R N, Hom_R(M/aM,N) in B^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    const int q = e.quotient(m, d);
                    const int h = e.hom(q, n), t = e.tensor(q, n);
                    const bool hb = e.in_B(m, h, d), tb = e.in_B(m, t, d);
                    c.check(hb && tb, m, n, d, "Hom " + flags({hb}) + ", tensor " + flags({tb}));
                }
    });

    add("glc-fastpath", "H^i_a(M,N) = Ext^i_R(M/aM,N)", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    if (!e.reduced_wrt(m, n, d)) continue;
                    if (!e.stabilization(m, d)) {
                        c.skip(m, n, d, m, "NonStabilizing: a^k M never stabilizes");
                        continue;
                    }
                    for (std::size_t i = 0; i <= c.max_degree(); ++i) {
                        const int fast = e.glc_fast(i, m, n, d);
                        const int slow = *e.glc_stable(i, m, n, d);
                        c.check(fast == slow, m, n, d,
                                "i=" + std::to_string(i) + ": Ext^i(M/aM,N) = " + e.name(fast) + ", colimit = " + e.name(slow));
                    }
                }
    });

    add("glc-proj-vanish", "M/aM is a projective R-module", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals) {
                if (!e.projective(e.quotient(m, d))) continue;
                for (int n : c.modules) {
                    if (!e.reduced_wrt(m, n, d)) continue;
                    for (std::size_t i = 1; i <= c.max_degree(); ++i) {
                        const auto h = e.glc(i, m, n, d);
                        c.check(h && e.is_zero(*h), m, n, d, "i=" + std::to_string(i) + ": " + (h ? e.name(*h) : "undefined"));
                    }
                }
            }
    });

    add("glh-fastpath", "H^a_i(M,N) = Tor^R_i(M/aM,N)", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    if (!e.coreduced_wrt(m, n, d)) continue;
                    if (!e.stabilization(m, d)) {
                        c.skip(m, n, d, m, "NonStabilizing: a^k M never stabilizes");
                        continue;
                    }
                    for (std::size_t i = 0; i <= c.max_degree(); ++i) {
                        const int fast = e.glh_fast(i, m, n, d);
                        const int slow = *e.glh_stable(i, m, n, d);
                        c.check(fast == slow, m, n, d,
                                "i=" + std::to_string(i) + ": Tor_i(M/aM,N) = " + e.name(fast) + ", limit = " + e.name(slow));
                    }
                }
    });

    add("glh-flat-vanish", "H^a_i(M,N) = 0 for all i > 0", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules) {
                    if (!e.projective(e.quotient(m, d)) && !e.projective(n)) continue;
                    if (!e.coreduced_wrt(m, n, d)) continue;
                    for (std::size_t i = 1; i <= c.max_degree(); ++i) {
                        const auto h = e.glh(i, m, n, d);
                        c.check(h && e.is_zero(*h), m, n, d, "i=" + std::to_string(i) + ": " + (h ? e.name(*h) : "undefined"));
                    }
                }
    });

    add("glh-symmetry", "H^a_i(M,N) = H^a_i(N,M)", modular_grid, [](Context& c) {
        auto& e = c.e;
        for (const auto& d : c.ideals) {
            std::vector<int> eligible;
            for (int m : c.modules)
                if (e.coreduced(m, d) && e.complete(m, d)) eligible.push_back(m);
            for (int m : eligible)
                for (int n : eligible)
                    for (std::size_t i = 0; i <= c.max_degree(); ++i) {
                        const auto lhs = e.glh(i, m, n, d), rhs = e.glh(i, n, m, d);
                        c.check(lhs && rhs && *lhs == *rhs, m, n, d,
                                "i=" + std::to_string(i) + ": " + (lhs ? e.name(*lhs) : "undefined") + " vs " +
                                    (rhs ? e.name(*rhs) : "undefined"));
                    }
        }
    });

    add("finiteness", "is Noetherian for all i >= 0", any_grid, [](Context& c) {
        auto& e = c.e;
        const auto bounded = [&](std::optional<int> h, int n) {
            return h && e.is_finite(*h) && e.form(n).exponent() % e.form(*h).exponent() == 0;
        };
        for (int m : c.finite_modules())
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules())
                    for (std::size_t i = 0; i <= c.max_degree(); ++i) {
                        if (e.reduced_wrt(m, n, d))
                            c.check(bounded(e.glc(i, m, n, d), n), m, n, d, "H^" + std::to_string(i));
                        if (e.coreduced_wrt(m, n, d))
                            c.check(bounded(e.glh(i, m, n, d), n), m, n, d, "H_" + std::to_string(i));
                    }
    });

    add("glh-glc-dual", "H^a_i(M,N)^v = H^i_a(M,N^v)", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.coreduced_wrt(m, n, d)) continue;
                    for (std::size_t i = 0; i <= c.max_degree(); ++i) {
                        const auto h = e.glh(i, m, n, d);
                        const auto lhs = h ? e.dual(*h) : std::nullopt;
                        const auto rhs = e.glc(i, m, *e.dual(n), d);
                        c.check(lhs && rhs && *lhs == *rhs, m, n, d,
                                "i=" + std::to_string(i) + ": " + (lhs ? e.name(*lhs) : "undefined") + " vs " +
                                    (rhs ? e.name(*rhs) : "undefined"));
                    }
                }
    });

    add("glc-glh-dual", "H^a_i(M,N^v) = H^i_a(M,N)^v", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.finite_modules()) {
                    if (!e.reduced_wrt(m, n, d)) continue;
                    for (std::size_t i = 0; i <= c.max_degree(); ++i) {
                        const auto lhs = e.glh(i, m, *e.dual(n), d);
                        const auto h = e.glc(i, m, n, d);
                        const auto rhs = h ? e.dual(*h) : std::nullopt;
                        c.check(lhs && rhs && *lhs == *rhs, m, n, d,
                                "i=" + std::to_string(i) + ": " + (lhs ? e.name(*lhs) : "undefined") + " vs " +
                                    (rhs ? e.name(*rhs) : "undefined"));
                    }
                }
    });

    add("b-class-membership", "H^p_a(M,N), H^a_p(M,N) in B^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals) {
                if (!e.coreduced(m, d)) continue;
                for (int n : c.modules)
                    for (std::size_t p = 0; p <= c.max_degree(); ++p) {
                        const auto h1 = e.glc(p, m, n, d), h2 = e.glh(p, m, n, d);
                        c.check(h1 && h2 && e.in_B(m, *h1, d) && e.in_B(m, *h2, d), m, n, d, "p=" + std::to_string(p));
                    }
            }
    });

    add("inherit-reduced", "H^q_a(M,N) in R^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        const int R = e.free_module();
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules)
                    for (std::size_t q = 0; q <= c.max_degree(); ++q) {
                        const auto base = e.glc(q, R, n, d);
                        if (!base) {
                            c.skip(m, n, d, R, "NonStabilizing: H^q_a(N)");
                            continue;
                        }
                        if (!e.reduced_wrt(m, *base, d)) continue;
                        const auto h = e.glc(q, m, n, d);
                        if (!h) {
                            c.skip(m, n, d, m, "NonStabilizing: H^q_a(M,N)");
                            continue;
                        }
                        c.check(e.reduced_wrt(m, *h, d), m, n, d, "q=" + std::to_string(q) + ": " + e.name(*h));
                    }
    });

    add("inherit-coreduced", "H_q^a(M,N) in C^M_a", any_grid, [](Context& c) {
        auto& e = c.e;
        const int R = e.free_module();
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules)
                    for (std::size_t q = 0; q <= c.max_degree(); ++q) {
                        const auto base = e.glh(q, R, n, d);
                        if (!base) {
                            c.skip(m, n, d, R, "NonStabilizing: H_q^a(N)");
                            continue;
                        }
                        if (!e.coreduced_wrt(m, *base, d)) continue;
                        const auto h = e.glh(q, m, n, d);
                        if (!h) {
                            c.skip(m, n, d, m, "NonStabilizing: H_q^a(M,N)");
                            continue;
                        }
                        c.check(e.coreduced_wrt(m, *h, d), m, n, d, "q=" + std::to_string(q) + ": " + e.name(*h));
                    }
    });

    add("vnr-homology-vanish", "Lambda_a(M,Lambda_a(M,N)), p = q = 0; 0 otherwise", regular_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules)
                    for (std::size_t q = 0; q <= c.max_degree(); ++q) {
                        const auto inner = e.glh(q, m, n, d);
                        for (std::size_t p = 0; p <= c.max_degree(); ++p) {
                            const auto outer = inner ? e.glh(p, m, *inner, d) : std::nullopt;
                            const std::string where = "p=" + std::to_string(p) + ",q=" + std::to_string(q) + ": " +
                                                      (outer ? e.name(*outer) : "undefined");
                            if (p == 0 && q == 0) {
                                const auto once = e.lambda_gen(m, n, d);
                                const auto twice = once ? e.lambda_gen(m, *once, d) : std::nullopt;
                                c.check(outer && twice && *outer == *twice, m, n, d, where);
                            } else {
                                c.check(outer && e.is_zero(*outer), m, n, d, where);
                            }
                        }
                    }
    });

    add("vnr-cohomology-vanish", "Gamma_a(M,Gamma_a(M,N)), p = q = 0; 0 otherwise", regular_grid, [](Context& c) {
        auto& e = c.e;
        for (int m : c.modules)
            for (const auto& d : c.ideals)
                for (int n : c.modules)
                    for (std::size_t q = 0; q <= c.max_degree(); ++q) {
                        const auto inner = e.glc(q, m, n, d);
                        for (std::size_t p = 0; p <= c.max_degree(); ++p) {
                            const auto outer = inner ? e.glc(p, m, *inner, d) : std::nullopt;
                            const std::string where = "p=" + std::to_string(p) + ",q=" + std::to_string(q) + ": " +
                                                      (outer ? e.name(*outer) : "undefined");
                            if (p == 0 && q == 0) {
                                const int twice = e.gamma_gen(m, e.gamma_gen(m, n, d), d);
                                c.check(outer && *outer == twice, m, n, d, where);
                            } else {
                                c.check(outer && e.is_zero(*outer), m, n, d, where);
                            }
                        }
                    }
    });

    std::sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return claims;
}

} // namespace detail

inline const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> registry = detail::build_registry();
    return registry;
}

inline const Claim& find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c;
    throw Error(ErrorCode::UnknownClaim, "no claim named '" + id + "'");
}

/// Evaluates one claim over one grid. The engine must be over the grid's ring.
inline ClaimReport check_claim(const std::string& id, const GridSpec& grid, Engine& engine) {
    const Claim& claim = find_claim(id);
    if (engine.ring() != grid.ring) throw Error(ErrorCode::RingMismatch, "engine and grid disagree on the ring");
    ClaimReport report{claim.id, claim.anchor, grid.label, claim.expected_fail, 0, {}, {}};
    Context ctx(engine, grid, report);
    claim.run(ctx);
    return report;
}

inline ClaimReport check_claim(const std::string& id, const GridSpec& grid) {
    Engine engine(grid.ring, grid.kmax);
    return check_claim(id, grid, engine);
}

struct SuiteSummary {
    std::vector<ClaimReport> reports;
    /// Expected-pass claims that failed somewhere, and expected-fail claims that failed nowhere.
    std::vector<std::string> unexpected;

    bool ok() const { return unexpected.empty(); }
};

/// Runs the claims over every grid they apply to. Reports come out ordered by claim id, then grid.
inline SuiteSummary run_suite(const std::vector<GridSpec>& grids, const std::vector<std::string>& claim_ids,
                              unsigned jobs = 1) {
    std::vector<std::string> ids = claim_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const auto& id : ids) find_claim(id);

    std::vector<std::unique_ptr<Engine>> engines;
    for (const auto& g : grids) engines.push_back(std::make_unique<Engine>(g.ring, g.kmax));

    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t c = 0; c < ids.size(); ++c)
        for (std::size_t g = 0; g < grids.size(); ++g)
            if (find_claim(ids[c]).applies(grids[g])) tasks.emplace_back(c, g);

    std::vector<std::optional<ClaimReport>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t t; (t = next++) < tasks.size();) {
            try {
                results[t] = check_claim(ids[tasks[t].first], grids[tasks[t].second], *engines[tasks[t].second]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(jobs, 1u); ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    SuiteSummary summary;
    std::vector<bool> failed(ids.size(), false);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        failed[tasks[t].first] = failed[tasks[t].first] || results[t]->verdict() == Verdict::fail;
        summary.reports.push_back(std::move(*results[t]));
    }
    for (std::size_t c = 0; c < ids.size(); ++c)
        if (failed[c] != find_claim(ids[c]).expected_fail) summary.unexpected.push_back(ids[c]);
    return summary;
}

inline std::vector<std::string> all_claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : claim_registry()) ids.push_back(c.id);
    return ids;
}

} // namespace fgmod::verify
