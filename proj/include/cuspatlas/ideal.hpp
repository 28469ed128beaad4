// Groebner bases and ideal operations: normal forms, elimination,
// saturation, intersection, zero-dimensionality and membership tests.
#ifndef CUSPATLAS_IDEAL_HPP
#define CUSPATLAS_IDEAL_HPP

#include "cuspatlas/polynomial.hpp"

#include <deque>
#include <set>

namespace cuspatlas {

// Hitting a configured cap is an explicit, distinct error; never a silent
// truncation.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GBLimits {
    long max_reductions = 2000000;  // pair reductions before giving up
    int max_degree = 120;           // cap on the total degree of any element
};

struct PolySystem {
    std::vector<Polynomial> gens;
    SpacePtr space;

    PolySystem() = default;
    PolySystem(std::vector<Polynomial> g, SpacePtr s) : gens(std::move(g)), space(std::move(s)) {
        for (auto& p : gens)
            if (!p.space()->same(*space))
                throw std::invalid_argument("PolySystem: generator in wrong space");
    }
    explicit PolySystem(std::vector<Polynomial> g) {
        if (g.empty()) throw std::invalid_argument("PolySystem: no generators");
        space = g[0].space();
        gens = std::move(g);
        for (auto& p : gens)
            if (!p.space()->same(*space))
                throw std::invalid_argument("PolySystem: generator in wrong space");
    }

    bool empty() const { return gens.empty(); }
};

class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(std::vector<Polynomial> basis, MonomialOrder order)
        : basis_(std::move(basis)), order_(order) {}

    const std::vector<Polynomial>& basis() const { return basis_; }
    const MonomialOrder& order() const { return order_; }
    bool is_unit_ideal() const {
        return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
    }
    bool empty() const { return basis_.empty(); }
    SpacePtr space() const { return basis_.empty() ? nullptr : basis_[0].space(); }

    PolySystem as_system() const {
        std::vector<Polynomial> gens;
        for (const auto& p : basis_) gens.push_back(p.primitive_normalized());
        return PolySystem(std::move(gens), space());
    }

private:
    std::vector<Polynomial> basis_;
    MonomialOrder order_;
};

// Remainder of multivariate division of f by the elements of G (full tail
// reduction over Q, no rescaling).  Zero iff f lies in the ideal of G.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const MonomialOrder& order) {
    Polynomial p = f.with_order(order);
    Polynomial rem(f.space(), order);
    while (!p.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(p.leading_monomial())) {
                Monomial m = p.leading_monomial() / g.leading_monomial();
                Rational c = p.leading_coefficient() / g.leading_coefficient();
                p -= g.times_term(m, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the leading term to the remainder
            Polynomial head = Polynomial::constant(f.space(), p.leading_coefficient(), order)
                                  .times_term(p.leading_monomial(), Rational(1));
            rem += head;
            p -= head;
        }
    }
    return rem;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (G.empty()) return f;
    Polynomial nf = normal_form(f, G.basis(), G.order());
    return nf;
}

namespace detail {

struct SPair {
    int i, j;
    Monomial lcm;
    int sugar;
    int lcm_deg;
};

struct SPairCmp {
    // smallest sugar first, then smallest lcm degree, then oldest
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

class Buchberger {
public:
    Buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, GBLimits limits)
        : order_(order), limits_(limits) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            add_generator(g.with_order(order_).primitive_normalized());
        }
    }

    std::vector<Polynomial> run() {
        while (!pairs_.empty()) {
            SPair sp = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (++reductions_ > limits_.max_reductions)
                throw resource_limit_error("groebner_basis: reduction cap exceeded");
            Polynomial s = spoly(sp);
            Polynomial r = full_reduce(std::move(s));
            if (r.is_zero()) continue;
            if (r.total_degree() > limits_.max_degree)
                throw resource_limit_error("groebner_basis: degree cap exceeded");
            add_generator(r.primitive_normalized(), sp.sugar);
        }
        return interreduce(basis_, order_);
    }

    static std::vector<Polynomial> interreduce(std::vector<Polynomial> gs, const MonomialOrder& order) {
        // discard zero and duplicate elements first
        std::vector<Polynomial> work;
        for (auto& g : gs)
            if (!g.is_zero()) work.push_back(g.with_order(order).primitive_normalized());
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < work.size(); ++i) {
                Polynomial g = work[i];
                std::vector<Polynomial> others;
                others.reserve(work.size() - 1);
                for (size_t j = 0; j < work.size(); ++j)
                    if (j != i) others.push_back(work[j]);
                Polynomial r = normal_form(g, others, order);
                if (r.is_zero()) {
                    work.erase(work.begin() + i);
                    changed = true;
                    break;
                }
                r = r.primitive_normalized();
                if (!(r == g)) {
                    work[i] = r;
                    changed = true;
                }
            }
        }
        std::sort(work.begin(), work.end(), [&](const Polynomial& a, const Polynomial& b) {
            return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return work;
    }

private:
    Polynomial spoly(const SPair& sp) {
        const Polynomial& f = basis_[sp.i];
        const Polynomial& g = basis_[sp.j];
        Monomial uf = sp.lcm / f.leading_monomial();
        Monomial ug = sp.lcm / g.leading_monomial();
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), f.leading_coefficient().numerator().get_mpz_t(),
                g.leading_coefficient().numerator().get_mpz_t());
        Rational cf = g.leading_coefficient() / Rational(d);
        Rational cg = f.leading_coefficient() / Rational(d);
        return f.times_term(uf, cf) - g.times_term(ug, cg);
    }

    // Fraction-free full reduction; the parked remainder is rescaled in step
    // with the working polynomial so the result is a true ideal remainder up
    // to a positive rational factor.
    Polynomial full_reduce(Polynomial p) {
        Polynomial out(p.space(), order_);
        while (!p.is_zero()) {
            bool reduced = false;
            for (size_t k = 0; k < basis_.size(); ++k) {
                if (basis_[k].leading_monomial().divides(p.leading_monomial())) {
                    const Polynomial& g = basis_[k];
                    Rational lcp = p.leading_coefficient();
                    Rational lcg = g.leading_coefficient();
                    mpz_class d;
                    mpz_gcd(d.get_mpz_t(), lcp.numerator().get_mpz_t(),
                            lcg.numerator().get_mpz_t());
                    Rational a = lcg / Rational(d);
                    Rational b = lcp / Rational(d);
                    if (a.sign() < 0) { a = -a; b = -b; }
                    if (!(a == Rational(1))) {
                        p = p * a;
                        if (!out.is_zero()) out = out * a;
                    }
                    p -= g.times_term(p.leading_monomial() / g.leading_monomial(), b);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                Polynomial head = Polynomial::constant(p.space(), p.leading_coefficient(), order_)
                                      .times_term(p.leading_monomial(), Rational(1));
                out += head;
                p -= head;
            }
            if (++reductions_ > limits_.max_reductions)
                throw resource_limit_error("groebner_basis: reduction cap exceeded");
        }
        return out;
    }

    // Gebauer-Moeller pair update.
    void add_generator(const Polynomial& h, int sugar_hint = -1) {
        int t = static_cast<int>(basis_.size());
        const Monomial& lmh = h.leading_monomial();
        int sh = sugar_hint >= 0 ? std::max(sugar_hint, h.total_degree()) : h.total_degree();

        // drop old pairs strictly superseded by h
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Monomial& lij = it->lcm;
            if (lmh.divides(lij) &&
                !(Monomial::lcm(lmh, basis_[it->i].leading_monomial()) == lij) &&
                !(Monomial::lcm(lmh, basis_[it->j].leading_monomial()) == lij)) {
                it = pairs_.erase(it);
            } else {
                ++it;
            }
        }

        // candidate new pairs
        struct Cand { int g; Monomial lcm; bool coprime; };
        std::vector<Cand> cands;
        for (int g = 0; g < t; ++g) {
            Monomial l = Monomial::lcm(lmh, basis_[g].leading_monomial());
            cands.push_back({g, l, lmh.coprime(basis_[g].leading_monomial())});
        }
        std::vector<bool> keep(cands.size(), true);
        for (size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !keep[a]) continue;
                if (!keep[b]) continue;
                if (cands[b].lcm.divides(cands[a].lcm) && !(cands[b].lcm == cands[a].lcm)) {
                    keep[a] = false;
                }
            }
        }
        // among equal lcms keep one
        for (size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = a + 1; b < cands.size(); ++b) {
                if (keep[b] && cands[b].lcm == cands[a].lcm) keep[b] = false;
            }
        }
        basis_.push_back(h);
        sugars_.push_back(sh);
        for (size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a] || cands[a].coprime) continue;  // product criterion
            int g = cands[a].g;
            int sugar = cands[a].lcm.total_degree() +
                        std::max(sugars_[g] - basis_[g].leading_monomial().total_degree(),
                                 sh - lmh.total_degree());
            pairs_.insert(SPair{g, t, cands[a].lcm, sugar, cands[a].lcm.total_degree()});
        }
    }

    MonomialOrder order_;
    GBLimits limits_;
    std::vector<Polynomial> basis_;
    std::vector<int> sugars_;
    std::set<SPair, SPairCmp> pairs_;
    long reductions_ = 0;
};

}  // namespace detail

// Reduced Groebner basis of <S> under the given order (Buchberger with the
// product and chain criteria, sugar pair selection, final interreduction).
inline GroebnerBasis groebner_basis(const PolySystem& S, const MonomialOrder& order,
                                    const GBLimits& limits = GBLimits{}) {
    detail::Buchberger engine(S.gens, order, limits);
    return GroebnerBasis(engine.run(), order);
}

inline PolySystem interreduced_system(const PolySystem& S, const GBLimits& limits = GBLimits{}) {
    return groebner_basis(S, MonomialOrder::grevlex(), limits).as_system();
}

// true iff f is in the ideal of G
inline bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
    return normal_form(f, G).is_zero();
}

// Mutual normal-form reduction of generators.
inline bool ideal_equal(const PolySystem& A, const PolySystem& B,
                        const GBLimits& limits = GBLimits{}) {
    if (!A.space->same(*B.space)) throw std::invalid_argument("ideal_equal: different spaces");
    GroebnerBasis ga = groebner_basis(A, MonomialOrder::grevlex(), limits);
    for (const auto& b : B.gens)
        if (!ideal_contains(ga, b)) return false;
    GroebnerBasis gb = groebner_basis(B, MonomialOrder::grevlex(), limits);
    for (const auto& a : A.gens)
        if (!ideal_contains(gb, a)) return false;
    return true;
}

// Generators of <S> ∩ Q[space \ drop]: block-order GB keeping drop-free
// elements; the kept elements form a reduced GB of the elimination ideal.
inline PolySystem elimination_ideal(const PolySystem& S, const std::vector<std::string>& drop,
                                    const GBLimits& limits = GBLimits{},
                                    MonomialOrder::Kind outer = MonomialOrder::Kind::grevlex) {
    std::vector<int> front;
    for (const auto& name : drop) front.push_back(S.space->index(name));
    MonomialOrder ord = MonomialOrder::block(front, MonomialOrder::Kind::grevlex, outer);
    GroebnerBasis gb = groebner_basis(S, ord, limits);
    std::vector<Polynomial> kept;
    for (const auto& p : gb.basis()) {
        bool free = true;
        for (int v : front)
            if (p.depends_on(v)) { free = false; break; }
        if (free) kept.push_back(p.primitive_normalized());
    }
    // restrict to the smaller space
    std::vector<std::string> names;
    for (const auto& n : S.space->names())
        if (std::find(drop.begin(), drop.end(), n) == drop.end()) names.push_back(n);
    SpacePtr ns = VariableSpace::make(names);
    std::vector<Polynomial> out;
    for (const auto& p : kept) out.push_back(p.to_space(ns));
    return PolySystem(std::move(out), ns);
}

namespace detail {
inline std::string fresh_var_name(const SpacePtr& space, const std::string& stem) {
    if (space->find(stem) < 0) return stem;
    for (int k = 1;; ++k) {
        std::string cand = stem + std::to_string(k);
        if (space->find(cand) < 0) return cand;
    }
}
inline SpacePtr extend_space(const SpacePtr& space, const std::string& name, bool in_front) {
    std::vector<std::string> names = space->names();
    if (in_front)
        names.insert(names.begin(), name);
    else
        names.push_back(name);
    return VariableSpace::make(names);
}
}  // namespace detail

// sat(<S>, g) = (<S> + <1 - w g>) ∩ Q[space], w fresh.
inline PolySystem saturate(const PolySystem& S, const Polynomial& g,
                           const GBLimits& limits = GBLimits{}) {
    if (g.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
    std::string w = detail::fresh_var_name(S.space, "w");
    SpacePtr ext = detail::extend_space(S.space, w, true);
    std::vector<Polynomial> gens;
    for (const auto& p : S.gens) gens.push_back(p.to_space(ext));
    Polynomial one = Polynomial::constant(ext, Rational(1));
    gens.push_back(one - Polynomial::variable(ext, w) * g.to_space(ext));
    PolySystem extended(std::move(gens), ext);
    PolySystem res = elimination_ideal(extended, {w}, limits);
    if (res.gens.empty()) {
        // saturation of the zero-dimensional-at-most ideal came out empty:
        // <S> : g^inf is the whole ring only if a unit was found, otherwise
        // an empty list means the zero ideal
        return PolySystem(std::vector<Polynomial>{}, S.space);
    }
    std::vector<Polynomial> out;
    for (const auto& p : res.gens) out.push_back(p.to_space(S.space));
    return PolySystem(std::move(out), S.space);
}

// <A> ∩ <B> via elimination of a fresh scalar w from w·A ∪ (1-w)·B.
inline PolySystem ideal_intersection(const PolySystem& A, const PolySystem& B,
                                     const GBLimits& limits = GBLimits{}) {
    if (!A.space->same(*B.space)) throw std::invalid_argument("ideal_intersection: different spaces");
    std::string w = detail::fresh_var_name(A.space, "w");
    SpacePtr ext = detail::extend_space(A.space, w, true);
    Polynomial wv = Polynomial::variable(ext, w);
    Polynomial one = Polynomial::constant(ext, Rational(1));
    std::vector<Polynomial> gens;
    for (const auto& a : A.gens) gens.push_back(wv * a.to_space(ext));
    for (const auto& b : B.gens) gens.push_back((one - wv) * b.to_space(ext));
    PolySystem extended(std::move(gens), ext);
    PolySystem res = elimination_ideal(extended, {w}, limits);
    std::vector<Polynomial> out;
    for (const auto& p : res.gens) out.push_back(p.to_space(A.space));
    return PolySystem(std::move(out), A.space);
}

// ∩_{g in S2} sat(<S1>, g): the variety is the closure of V(S1) \ V(S2).
inline PolySystem saturate_system(const PolySystem& S1, const PolySystem& S2,
                                  const GBLimits& limits = GBLimits{}) {
    if (S2.gens.empty()) throw std::invalid_argument("saturate_system: empty S2");
    // interreduce first to keep the generator count small, and dedupe
    std::vector<Polynomial> gs;
    for (const auto& g : S2.gens) {
        if (g.is_zero()) continue;
        Polynomial gn = g.primitive_normalized();
        bool dup = false;
        for (const auto& h : gs)
            if (h == gn) { dup = true; break; }
        if (!dup) gs.push_back(gn);
    }
    bool any = false;
    PolySystem acc;
    std::vector<PolySystem> seen_sats;
    for (const auto& g : gs) {
        if (g.is_constant()) {
            // saturating by a nonzero constant removes nothing
            if (!any) { acc = interreduced_system(S1, limits); any = true; }
            continue;
        }
        PolySystem sg = saturate(S1, g, limits);
        // skip saturations identical to one already intersected
        bool dup = false;
        for (const auto& s : seen_sats) {
            if (s.gens.size() == sg.gens.size()) {
                bool same = true;
                for (size_t i = 0; i < s.gens.size(); ++i)
                    if (!(s.gens[i] == sg.gens[i])) { same = false; break; }
                if (same) { dup = true; break; }
            }
        }
        if (dup) continue;
        seen_sats.push_back(sg);
        if (!any) {
            acc = sg;
            any = true;
        } else {
            acc = ideal_intersection(acc, sg, limits);
            acc = interreduced_system(acc, limits);
        }
    }
    if (!any) return interreduced_system(S1, limits);
    return interreduced_system(acc, limits);
}

// true iff for every unknown some leading monomial of G is a pure power of it
inline bool is_zero_dimensional(const GroebnerBasis& G, const std::vector<std::string>& unknowns) {
    if (G.empty()) return false;
    if (G.is_unit_ideal()) return true;  // empty variety
    SpacePtr sp = G.space();
    for (const auto& u : unknowns) {
        int iu = sp->index(u);
        bool found = false;
        for (const auto& p : G.basis()) {
            const Monomial& lm = p.leading_monomial();
            if (lm[iu] == 0) continue;
            bool pure = true;
            for (int i = 0; i < lm.n; ++i)
                if (i != iu && lm[i]) { pure = false; break; }
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace cuspatlas

#endif
