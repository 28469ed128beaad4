// Sparse multivariate polynomials over Q: monomial orders, arithmetic,
// calculus, substitution, resultants and discriminants.
#ifndef CUSPATLAS_POLYNOMIAL_HPP
#define CUSPATLAS_POLYNOMIAL_HPP

#include "cuspatlas/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace cuspatlas {

class math_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_divisible_error : public math_error {
public:
    using math_error::math_error;
};

// Ordered list of distinct variable names, fixed for a computation.
class VariableSpace {
public:
    static constexpr int kMaxVars = 16;

    explicit VariableSpace(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw std::invalid_argument("VariableSpace: empty");
        if (names_.size() > kMaxVars) throw std::invalid_argument("VariableSpace: too many variables");
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VariableSpace: duplicate '" + names_[i] + "'");
    }

    static std::shared_ptr<const VariableSpace> make(std::vector<std::string> names) {
        return std::make_shared<const VariableSpace>(std::move(names));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index(const std::string& name) const {
        int i = find(name);
        if (i < 0) throw std::out_of_range("VariableSpace: unknown variable '" + name + "'");
        return i;
    }
    int find(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool same(const VariableSpace& o) const { return this == &o || names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

// Exponent vector aligned with a VariableSpace.
struct Monomial {
    std::array<uint16_t, VariableSpace::kMaxVars> e{};
    int n = 0;

    explicit Monomial(int nvars = 0) : n(nvars) {}

    uint16_t operator[](int i) const { return e[i]; }
    uint16_t& operator[](int i) { return e[i]; }
    int total_degree() const {
        int d = 0;
        for (int i = 0; i < n; ++i) d += e[i];
        return d;
    }
    bool is_one() const {
        for (int i = 0; i < n; ++i)
            if (e[i]) return false;
        return true;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r(n);
        for (int i = 0; i < n; ++i) {
            uint32_t s = uint32_t(e[i]) + o.e[i];
            if (s > 0xffff) throw math_error("Monomial: exponent overflow");
            r.e[i] = uint16_t(s);
        }
        return r;
    }
    // Requires o | *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r(n);
        for (int i = 0; i < n; ++i) r.e[i] = uint16_t(e[i] - o.e[i]);
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n);
        for (int i = 0; i < a.n; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return false;
        return true;
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int i = 0; i < m.n; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Total well-order on monomials: lex, grevlex, or a block order whose
// leading block is an explicit variable subset (the eliminated variables).
struct MonomialOrder {
    enum class Kind { lex, grevlex, block };
    Kind kind = Kind::grevlex;
    std::vector<int> front;  // block only: indices of eliminated variables, ascending
    Kind inner = Kind::grevlex;
    Kind outer = Kind::grevlex;

    static MonomialOrder lex() { return {Kind::lex, {}, Kind::lex, Kind::lex}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, {}, Kind::grevlex, Kind::grevlex}; }
    static MonomialOrder block(std::vector<int> eliminated, Kind in = Kind::grevlex,
                               Kind out = Kind::grevlex) {
        std::sort(eliminated.begin(), eliminated.end());
        return {Kind::block, std::move(eliminated), in, out};
    }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::lex: return cmp_lex_all(a, b);
            case Kind::grevlex: return cmp_grevlex_all(a, b);
            case Kind::block: {
                thread_local std::vector<int> rest;
                rest.clear();
                size_t fi = 0;
                for (int i = 0; i < a.n; ++i) {
                    if (fi < front.size() && front[fi] == i) { ++fi; continue; }
                    rest.push_back(i);
                }
                int c = cmp_subset(a, b, front, inner);
                if (c) return c;
                return cmp_subset(a, b, rest, outer);
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool same(const MonomialOrder& o) const {
        return kind == o.kind && front == o.front && inner == o.inner && outer == o.outer;
    }

private:
    static int cmp_lex_all(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    }
    static int cmp_grevlex_all(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db ? 1 : -1;
        for (int i = a.n - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    static int cmp_subset(const Monomial& a, const Monomial& b, const std::vector<int>& idx,
                          Kind k) {
        if (k == Kind::lex) {
            for (int i : idx)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        int da = 0, db = 0;
        for (int i : idx) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da > db ? 1 : -1;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it)
            if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
        return 0;
    }
};

// Sparse polynomial: map monomial -> nonzero rational, terms held sorted
// descending under the active order.
class Polynomial {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    Polynomial() = default;
    explicit Polynomial(SpacePtr space, MonomialOrder order = MonomialOrder::grevlex())
        : space_(std::move(space)), order_(order) {}

    static Polynomial zero(SpacePtr s, MonomialOrder o = MonomialOrder::grevlex()) {
        return Polynomial(std::move(s), o);
    }
    static Polynomial constant(SpacePtr s, const Rational& c,
                               MonomialOrder o = MonomialOrder::grevlex()) {
        Polynomial p(std::move(s), o);
        if (!c.is_zero()) p.terms_.push_back({Monomial(p.space_->size()), c});
        return p;
    }
    static Polynomial variable(SpacePtr s, const std::string& name,
                               MonomialOrder o = MonomialOrder::grevlex()) {
        Polynomial p(s, o);
        Monomial m(s->size());
        m[s->index(name)] = 1;
        p.terms_.push_back({m, Rational(1)});
        return p;
    }

    const SpacePtr& space() const { return space_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
    size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw math_error("leading_monomial of zero");
        return terms_[0].m;
    }
    const Rational& leading_coefficient() const {
        if (is_zero()) throw math_error("leading_coefficient of zero");
        return terms_[0].c;
    }
    Rational constant_term() const {
        for (const auto& t : terms_)
            if (t.m.is_one()) return t.c;
        return Rational(0);
    }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
        return d;
    }
    int degree(int var) const {
        int d = p_degree_or_neg(var);
        return d < 0 ? 0 : d;
    }
    int degree(const std::string& name) const { return degree(space_->index(name)); }
    bool depends_on(int var) const { return p_degree_or_neg(var) > 0; }
    bool depends_on(const std::string& name) const { return depends_on(space_->index(name)); }

    // Re-sorts the term list under a new active order (same polynomial).
    Polynomial with_order(const MonomialOrder& o) const {
        if (order_.same(o)) return *this;
        Polynomial r = *this;
        r.order_ = o;
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [&](const Term& a, const Term& b) { return o.compare(a.m, b.m) > 0; });
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_space(b);
        Polynomial r(a.space_, a.order_);
        if (a.is_zero() || b.is_zero()) return r;
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.m * tb.m;
                auto [it, fresh] = acc.try_emplace(m, Rational(0));
                it->second += ta.c * tb.c;
            }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        r.sort_terms();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial r = a;
        if (c.is_zero()) {
            r.terms_.clear();
            return r;
        }
        for (auto& t : r.terms_) t.c *= c;
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    // term * polynomial, used heavily by division and Buchberger.
    Polynomial times_term(const Monomial& m, const Rational& c) const {
        Polynomial r(space_, order_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
        return r;  // multiplying by a fixed monomial preserves term order
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!a.space_->same(*b.space_)) return false;
        const Polynomial& bb = a.order_.same(b.order_) ? b : b.with_order(a.order_);
        if (a.terms_.size() != bb.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == bb.terms_[i].m) || a.terms_[i].c != bb.terms_[i].c)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(int var) const {
        Polynomial r(space_, order_);
        for (const auto& t : terms_) {
            if (t.m[var] == 0) continue;
            Term nt{t.m, t.c * Rational(t.m[var])};
            nt.m[var] -= 1;
            r.terms_.push_back(nt);
        }
        r.sort_terms();
        return r;
    }
    Polynomial derivative(const std::string& name) const { return derivative(space_->index(name)); }

    // Exact evaluation at a full rational point (aligned with the space).
    Rational eval(const std::vector<Rational>& pt) const {
        Rational s(0);
        for (const auto& t : terms_) {
            Rational v = t.c;
            for (int i = 0; i < t.m.n; ++i)
                if (t.m[i]) v *= pt[i].pow(t.m[i]);
            s += v;
        }
        return s;
    }

    // Interval enclosure over a box aligned with the space.
    RationalInterval eval_interval(const std::vector<RationalInterval>& box) const {
        RationalInterval s(Rational(0));
        for (const auto& t : terms_) {
            RationalInterval v(t.c);
            for (int i = 0; i < t.m.n; ++i)
                if (t.m[i]) v = v * box[i].pow(t.m[i]);
            s = s + v;
        }
        return s;
    }

    // Exact substitution of rational values; result lives in the space
    // restricted to the unbound variables.
    Polynomial substitute(const std::map<std::string, Rational>& bindings) const {
        std::vector<int> bound(space_->size(), 0);
        std::vector<Rational> val(space_->size());
        for (const auto& [name, v] : bindings) {
            int i = space_->index(name);
            bound[i] = 1;
            val[i] = v;
        }
        SpacePtr ns = restricted_space(bound);
        Polynomial r(ns, MonomialOrder::grevlex());
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& t : terms_) {
            Rational c = t.c;
            Monomial m(ns->size());
            int j = 0;
            for (int i = 0; i < space_->size(); ++i) {
                if (bound[i]) {
                    if (t.m[i]) c *= val[i].pow(t.m[i]);
                } else {
                    m[j++] = t.m[i];
                }
            }
            if (c.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(m, Rational(0));
            it->second += c;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        r.sort_terms();
        return r;
    }

    // Polynomial substitution; binding values must live in the restricted
    // space (the space minus all bound variables).
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const {
        std::vector<int> bound(space_->size(), 0);
        for (const auto& [name, v] : bindings) bound[space_->index(name)] = 1;
        SpacePtr ns = restricted_space(bound);
        std::vector<const Polynomial*> val(space_->size(), nullptr);
        for (const auto& [name, v] : bindings) {
            if (!v.space()->same(*ns))
                throw std::invalid_argument("substitute: binding not in restricted space");
            val[space_->index(name)] = &v;
        }
        Polynomial acc = Polynomial::zero(ns);
        for (const auto& t : terms_) {
            Monomial m(ns->size());
            int j = 0;
            Polynomial factor = Polynomial::constant(ns, t.c);
            for (int i = 0; i < space_->size(); ++i) {
                if (bound[i]) {
                    for (int k = 0; k < t.m[i]; ++k) factor *= *val[i];
                } else {
                    m[j++] = t.m[i];
                }
            }
            acc += factor.times_term(m, Rational(1));
        }
        return acc;
    }

    // Substitution of a value for the SQUARE of a variable; every exponent
    // of the variable must be even (used for the leg lengths rho_i, which
    // enter all kinematic systems squared).
    Polynomial substitute_square(const std::string& name, const Rational& value) const {
        int idx = space_->index(name);
        std::vector<int> bound(space_->size(), 0);
        bound[idx] = 1;
        SpacePtr ns = restricted_space(bound);
        Polynomial r(ns, MonomialOrder::grevlex());
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& t : terms_) {
            if (t.m[idx] % 2 != 0)
                throw math_error("substitute_square: odd power of " + name);
            Rational c = t.c * value.pow(t.m[idx] / 2);
            Monomial m(ns->size());
            int j = 0;
            for (int i = 0; i < space_->size(); ++i)
                if (i != idx) m[j++] = t.m[i];
            if (c.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(m, Rational(0));
            it->second += c;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        r.sort_terms();
        return r;
    }

    bool has_only_even_powers(const std::string& name) const {
        int idx = space_->index(name);
        for (const auto& t : terms_)
            if (t.m[idx] % 2 != 0) return false;
        return true;
    }

    // Maps this polynomial into another space containing all its variables.
    Polynomial to_space(const SpacePtr& ns, MonomialOrder o = MonomialOrder::grevlex()) const {
        if (space_->same(*ns)) return with_order(o);
        std::vector<int> remap(space_->size(), -1);
        for (int i = 0; i < space_->size(); ++i) {
            int j = ns->find(space_->name(i));
            if (j < 0 && depends_on(i))
                throw std::invalid_argument("to_space: target lacks variable " + space_->name(i));
            remap[i] = j;
        }
        Polynomial r(ns, o);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(ns->size());
            for (int i = 0; i < space_->size(); ++i)
                if (t.m[i]) m[remap[i]] = t.m[i];
            r.terms_.push_back({m, t.c});
        }
        r.sort_terms();
        return r;
    }

    // Canonical cross-module form: integer coefficients, content 1, and the
    // lex-leading coefficient positive (stable across active orders).
    Polynomial primitive_normalized() const {
        if (is_zero()) return *this;
        mpz_class den_lcm(1), num_gcd(0);
        for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.denominator().get_mpz_t());
        for (const auto& t : terms_) {
            mpz_class n = t.c.numerator() * (den_lcm / t.c.denominator());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        Rational scale = Rational(den_lcm) / Rational(num_gcd);
        Polynomial r = *this * scale;
        // sign: lex-leading coefficient positive
        const Term* lead = &r.terms_[0];
        MonomialOrder lx = MonomialOrder::lex();
        for (const auto& t : r.terms_)
            if (lx.compare(t.m, lead->m) > 0) lead = &t;
        if (lead->c.sign() < 0) r = -r;
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading_coefficient());
    }

    // Dense coefficient list with respect to one variable; coefficients are
    // polynomials in the same space with that variable's exponent cleared.
    std::vector<Polynomial> coefficients_wrt(int var) const {
        int d = degree(var);
        std::vector<Polynomial> out(d + 1, Polynomial(space_, order_));
        for (const auto& t : terms_) {
            Term nt = t;
            int k = nt.m[var];
            nt.m[var] = 0;
            out[k].terms_.push_back(nt);
        }
        for (auto& p : out) p.sort_terms();
        return out;
    }
    std::vector<Polynomial> coefficients_wrt(const std::string& name) const {
        return coefficients_wrt(space_->index(name));
    }
    Polynomial coefficient_wrt(int var, int power) const {
        Polynomial out(space_, order_);
        for (const auto& t : terms_) {
            if (t.m[var] != power) continue;
            Term nt = t;
            nt.m[var] = 0;
            out.terms_.push_back(nt);
        }
        out.sort_terms();
        return out;
    }
    Polynomial leading_coefficient_wrt(int var) const { return coefficient_wrt(var, degree(var)); }
    Polynomial leading_coefficient_wrt(const std::string& v) const {
        return leading_coefficient_wrt(space_->index(v));
    }

    static Polynomial from_coefficients_wrt(int var, const std::vector<Polynomial>& cs,
                                            const SpacePtr& space,
                                            MonomialOrder o = MonomialOrder::grevlex()) {
        Polynomial r(space, o);
        for (size_t k = 0; k < cs.size(); ++k) {
            if (cs[k].is_zero()) continue;
            for (const auto& t : cs[k].terms_) {
                Term nt = t;
                if (nt.m[var] != 0) throw std::invalid_argument("from_coefficients_wrt: coefficient depends on variable");
                nt.m[var] = uint16_t(k);
                r.terms_.push_back(nt);
            }
        }
        r.sort_terms();
        return r;
    }

    std::string str() const;
    static Polynomial parse(const std::string& text, const SpacePtr& space,
                            MonomialOrder o = MonomialOrder::grevlex());

    void check_same_space(const Polynomial& o) const {
        if (!space_->same(*o.space_))
            throw std::invalid_argument("polynomial operands in different variable spaces");
    }

    // Internal: push a term without sorting (used by builders); call
    // sort_terms() afterwards.
    void raw_push(const Monomial& m, const Rational& c) { terms_.push_back({m, c}); }
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return order_.compare(a.m, b.m) > 0; });
    }

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        a.check_same_space(b);
        const Polynomial& bb = a.order_.same(b.order_) ? b : b.with_order(a.order_);
        Polynomial r(a.space_, a.order_);
        r.terms_.reserve(a.terms_.size() + bb.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < bb.terms_.size()) {
            int c = a.order_.compare(a.terms_[i].m, bb.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                Term t = bb.terms_[j++];
                if (subtract) t.c = -t.c;
                r.terms_.push_back(std::move(t));
            } else {
                Rational c2 = subtract ? a.terms_[i].c - bb.terms_[j].c : a.terms_[i].c + bb.terms_[j].c;
                if (!c2.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c2)});
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < bb.terms_.size(); ++j) {
            Term t = bb.terms_[j];
            if (subtract) t.c = -t.c;
            r.terms_.push_back(std::move(t));
        }
        return r;
    }

    int p_degree_or_neg(int var) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, int(t.m[var]));
        return d;
    }

    SpacePtr restricted_space(const std::vector<int>& bound) const {
        std::vector<std::string> names;
        for (int i = 0; i < space_->size(); ++i)
            if (!bound[i]) names.push_back(space_->name(i));
        if (names.empty()) names.push_back(space_->name(0));  // degenerate: keep one slot
        return VariableSpace::make(std::move(names));
    }

    SpacePtr space_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text format: sum of terms with `^` powers and `*` products, e.g.
//   6*c_alpha + rho2^2 - rho3^2
// Printer and parser round-trip.
// ---------------------------------------------------------------------------

inline std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        bool printed = false;
        if (!(c == Rational(1)) || t.m.is_one()) {
            os << c.str();
            printed = true;
        }
        for (int i = 0; i < t.m.n; ++i) {
            if (!t.m[i]) continue;
            if (printed) os << "*";
            os << space_->name(i);
            if (t.m[i] > 1) os << "^" << int(t.m[i]);
            printed = true;
        }
        first = false;
    }
    return os.str();
}

namespace detail {
struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}
    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eof() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip(); return s[i++]; }
    bool accept(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    std::string ident() {
        skip();
        size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        return s.substr(b, i - b);
    }
    std::string number() {
        skip();
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(b, i - b);
    }
};
}  // namespace detail

inline Polynomial Polynomial::parse(const std::string& text, const SpacePtr& space,
                                    MonomialOrder o) {
    detail::PolyLexer lx(text);
    Polynomial result(space, o);
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        if (lx.accept('+')) { sign = +sign; expect_term = true; continue; }
        if (lx.accept('-')) { sign = -sign; expect_term = true; continue; }
        if (!expect_term) throw std::invalid_argument("poly parse: expected '+' or '-' in '" + text + "'");
        // one term: factors joined by '*'
        Rational coeff(sign);
        Monomial mono(space->size());
        bool any = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.number();
                std::string den = "1";
                if (lx.accept('/')) den = lx.number();
                if (num.empty() || den.empty()) throw std::invalid_argument("poly parse: bad number");
                coeff *= Rational::from_string(num + "/" + den);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lx.ident();
                int vi = space->find(name);
                if (vi < 0) throw std::invalid_argument("poly parse: unknown variable '" + name + "'");
                int exp = 1;
                if (lx.accept('^')) {
                    std::string e = lx.number();
                    if (e.empty()) throw std::invalid_argument("poly parse: bad exponent");
                    exp = std::stoi(e);
                }
                mono[vi] = uint16_t(mono[vi] + exp);
            } else {
                throw std::invalid_argument("poly parse: unexpected character in '" + text + "'");
            }
            any = true;
            if (!lx.accept('*')) break;
        }
        if (!any) throw std::invalid_argument("poly parse: empty term");
        Polynomial t(space, o);
        if (!coeff.is_zero()) t.terms_.push_back({mono, coeff});
        result += t;
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !result.is_zero())
        throw std::invalid_argument("poly parse: dangling sign");
    return result;
}

// ---------------------------------------------------------------------------
// Division, resultants, discriminants, squarefree parts.
// ---------------------------------------------------------------------------

// Exact division p / q; throws not_divisible_error when q does not divide p.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    p.check_same_space(q);
    MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial r = p.with_order(ord);
    Polynomial d = q.with_order(ord);
    Polynomial quot(p.space(), ord);
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (!d.leading_monomial().divides(lm))
            throw not_divisible_error("exact_divide: not divisible");
        Monomial m = lm / d.leading_monomial();
        Rational c = r.leading_coefficient() / d.leading_coefficient();
        quot += Polynomial::constant(p.space(), c, ord).times_term(m, Rational(1));
        r -= d.times_term(m, c);
    }
    return quot;
}

inline bool divides(const Polynomial& q, const Polynomial& p) {
    try {
        exact_divide(p, q);
        return true;
    } catch (const not_divisible_error&) {
        return false;
    }
}

namespace detail {

// Polynomials as dense vectors in one distinguished variable with
// Polynomial coefficients (used by the subresultant machinery).
using UPoly = std::vector<Polynomial>;

inline int udeg(const UPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}
inline void utrim(UPoly& a) { a.resize(std::max(udeg(a) + 1, 0)); }

}  // namespace detail

}  // namespace cuspatlas

// Resultants, discriminants, gcds and squarefree parts live in a companion
// header so the class definition stays readable; including it here keeps
// this header self-contained.
#include "cuspatlas/poly_algorithms.hpp"

#endif
