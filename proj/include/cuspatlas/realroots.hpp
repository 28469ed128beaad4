// Certified univariate real-root isolation: Descartes/bisection
// (Vincent-Collins-Akritas) with exact rational interval endpoints.
#ifndef CUSPATLAS_REALROOTS_HPP
#define CUSPATLAS_REALROOTS_HPP

#include "cuspatlas/polynomial.hpp"

#include <memory>

namespace cuspatlas {

// Dense univariate polynomial with integer coefficients, c[i] on x^i.
struct UniPolyZ {
    std::vector<mpz_class> c;

    int degree() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (c[i] != 0) return i;
        return -1;
    }
    bool is_zero() const { return degree() < 0; }
    void trim() { c.resize(std::max(degree() + 1, 0)); }

    // sign of p(a/b), b > 0
    int sign_at(const Rational& q) const {
        mpz_class a = q.numerator(), b = q.denominator();
        int n = degree();
        if (n < 0) return 0;
        mpz_class acc = c[n];
        for (int i = n - 1; i >= 0; --i) acc = acc * a + c[i] * b_pow(b, n - i);
        return sgn(acc);
    }

    UniPolyZ derivative() const {
        UniPolyZ d;
        int n = degree();
        if (n <= 0) return d;
        d.c.resize(n);
        for (int i = 1; i <= n; ++i) d.c[i - 1] = c[i] * i;
        return d;
    }

    void make_primitive() {
        mpz_class g(0);
        for (const auto& a : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 0) return;
        for (auto& a : c) a /= g;
        if (c[degree()] < 0)
            for (auto& a : c) a = -a;
    }

    static UniPolyZ from_polynomial(const Polynomial& p, const std::string& v) {
        int iv = p.space()->index(v);
        for (const auto& t : p.terms())
            for (int i = 0; i < t.m.n; ++i)
                if (t.m[i] && i != iv)
                    throw std::invalid_argument("UniPolyZ: polynomial not univariate in " + v);
        Polynomial q = p.primitive_normalized();
        UniPolyZ u;
        u.c.assign(q.degree(iv) + 1, mpz_class(0));
        for (const auto& t : q.terms()) u.c[t.m[iv]] = t.c.numerator();
        return u;
    }

    Polynomial to_polynomial(const SpacePtr& space, const std::string& v) const {
        Polynomial x = Polynomial::variable(space, v);
        Polynomial r = Polynomial::zero(space);
        Polynomial xp = Polynomial::constant(space, Rational(1));
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] != 0) r += Polynomial::constant(space, Rational(mpz_class(c[i]))) * xp;
            if (i + 1 < c.size()) xp *= x;
        }
        return r;
    }

private:
    static mpz_class b_pow(const mpz_class& b, int e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    }
};

namespace detail {

inline UniPolyZ uz_mul(const UniPolyZ& a, const UniPolyZ& b) {
    UniPolyZ r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.degree() + b.degree() + 1, mpz_class(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// exact division (throws if not exact), both integer polynomials
inline UniPolyZ uz_exact_div(const UniPolyZ& a, const UniPolyZ& b) {
    int db = b.degree();
    if (db < 0) throw std::domain_error("uz_exact_div: division by zero");
    UniPolyZ r = a;
    r.trim();
    int da = r.degree();
    if (da < db) {
        if (r.is_zero()) return r;
        throw math_error("uz_exact_div: not divisible");
    }
    UniPolyZ q;
    q.c.assign(da - db + 1, mpz_class(0));
    for (int d = da; d >= db; --d) {
        if (r.c[d] == 0) continue;
        mpz_class f = r.c[d] / b.c[db];
        if (f * b.c[db] != r.c[d]) throw math_error("uz_exact_div: not divisible");
        q.c[d - db] = f;
        for (int i = 0; i <= db; ++i) r.c[d - db + i] -= f * b.c[i];
    }
    r.trim();
    if (!r.is_zero()) throw math_error("uz_exact_div: nonzero remainder");
    return q;
}

// primitive PRS gcd of integer polynomials
inline UniPolyZ uz_gcd(UniPolyZ a, UniPolyZ b) {
    a.trim();
    b.trim();
    a.make_primitive();
    b.make_primitive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) {
            UniPolyZ one;
            one.c = {mpz_class(1)};
            return one;
        }
        // pseudo remainder of a by b
        UniPolyZ r = a;
        const mpz_class lb = b.c[b.degree()];
        int db = b.degree();
        while (r.degree() >= db && !r.is_zero()) {
            int dr = r.degree();
            mpz_class lr = r.c[dr];
            for (auto& x : r.c) x *= lb;
            for (int i = 0; i <= db; ++i) r.c[dr - db + i] -= lr * b.c[i];
            r.trim();
        }
        r.make_primitive();
        a = b;
        b = r;
    }
    a.make_primitive();
    return a;
}

inline UniPolyZ uz_squarefree(UniPolyZ p) {
    p.trim();
    p.make_primitive();
    if (p.degree() <= 1) return p;
    UniPolyZ g = uz_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    UniPolyZ q = uz_exact_div(p, g);
    q.make_primitive();
    return q;
}

// coefficients of T(x) = (D(1+x))^n * p((A + B x) / (D (1+x)))
// where lo = A/D, hi = B/D; T(0) ~ p(lo), lc(T) ~ p(hi).
inline std::vector<mpz_class> mobius_01(const UniPolyZ& p, const Rational& lo, const Rational& hi) {
    mpz_class D;
    mpz_lcm(D.get_mpz_t(), lo.denominator().get_mpz_t(), hi.denominator().get_mpz_t());
    mpz_class A = lo.numerator() * (D / lo.denominator());
    mpz_class B = hi.numerator() * (D / hi.denominator());
    int n = p.degree();
    // Horner: S <- S*(A+Bx) + a_i * D^(n-i) * (1+x)^(n-i)
    std::vector<mpz_class> S{p.c[n]};
    mpz_class Dp(1);
    std::vector<mpz_class> onepx{mpz_class(1)};  // (1+x)^k coefficients
    for (int i = n - 1; i >= 0; --i) {
        Dp *= D;
        // onepx = (1+x)^(n-i): binomial row of size n-i+1
        int k = n - i;
        onepx.assign(k + 1, mpz_class(0));
        onepx[0] = 1;
        for (int r = 1; r <= k; ++r) {
            mpz_class prev = onepx[0];
            for (int j2 = 1; j2 <= r; ++j2) {
                mpz_class cur = onepx[j2];
                onepx[j2] += prev;
                prev = cur;
            }
        }
        // S = S*(A+Bx)
        std::vector<mpz_class> ns(S.size() + 1, mpz_class(0));
        for (size_t j2 = 0; j2 < S.size(); ++j2) {
            ns[j2] += S[j2] * A;
            ns[j2 + 1] += S[j2] * B;
        }
        // + a_i * Dp * (1+x)^k
        if (p.c[i] != 0) {
            mpz_class f = p.c[i] * Dp;
            for (int j2 = 0; j2 <= k; ++j2) ns[j2] += f * onepx[j2];
        }
        S = std::move(ns);
    }
    return S;
}

inline int sign_variations(const std::vector<mpz_class>& cs) {
    int v = 0, last = 0;
    for (const auto& a : cs) {
        int s = sgn(a);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace detail

// One isolated real root of a squarefree integer polynomial; the interval is
// open with non-root rational endpoints, or an exact point [r, r].
class IsolatedRoot {
public:
    IsolatedRoot(std::shared_ptr<const UniPolyZ> p, Rational lo, Rational hi, bool exact)
        : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)), exact_(exact) {}

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool exact() const { return exact_; }
    RationalInterval interval() const { return {lo_, hi_}; }
    Rational width() const { return hi_ - lo_; }
    const UniPolyZ& poly() const { return *p_; }
    int index() const { return index_; }
    void set_index(int i) { index_ = i; }

    // One bisection step (no-op on exact roots).
    void refine() {
        if (exact_) return;
        Rational m = (lo_ + hi_) * Rational(1, 2);
        int sm = p_->sign_at(m);
        if (sm == 0) {
            lo_ = hi_ = m;
            exact_ = true;
            return;
        }
        if (sm == p_->sign_at(lo_))
            lo_ = m;
        else
            hi_ = m;
    }
    void refine_to_width(const Rational& w) {
        while (!exact_ && width() > w) refine();
    }

    // -1, 0, +1: position of the root relative to q (exact decision).
    int compare(const Rational& q) const {
        if (exact_) return lo_ < q ? -1 : (lo_ == q ? 0 : 1);
        if (q <= lo_) return 1;   // root > lo >= q, and root > lo strictly
        if (q >= hi_) return -1;
        int sq = p_->sign_at(q);
        if (sq == 0) return 0;
        return sq == p_->sign_at(lo_) ? 1 : -1;  // same sign as lo: root right of q
    }

    // -1, 0, +1 against another isolated root (may be a root of a different
    // polynomial); exact decision.
    int compare_root(const IsolatedRoot& o) const {
        if (exact_ && o.exact_) return lo_ < o.lo_ ? -1 : (lo_ == o.lo_ ? 0 : 1);
        if (exact_) return -o.compare(lo_);
        if (o.exact_) return compare(o.lo_);
        IsolatedRoot a = *this, b = o;
        while (true) {
            if (a.hi_ <= b.lo_) return -1;  // open intervals: roots strictly inside
            if (b.hi_ <= a.lo_) return 1;
            // overlapping open intervals: decide via sign tests where possible
            if (a.p_.get() != b.p_.get()) {
                // equal roots possible only if both polynomials vanish there;
                // bisection separates distinct roots, equality is detected when
                // one side collapses to an exact rational.
            }
            a.refine();
            b.refine();
            if (a.exact_ || b.exact_) return a.compare_root(b);
        }
    }
    bool operator<(const IsolatedRoot& o) const { return compare_root(o) < 0; }

private:
    std::shared_ptr<const UniPolyZ> p_;
    Rational lo_, hi_;
    bool exact_;
    int index_ = 0;
};

namespace detail {

inline void isolate_on(const std::shared_ptr<const UniPolyZ>& p, const Rational& lo,
                       const Rational& hi, std::vector<IsolatedRoot>& out) {
    std::vector<mpz_class> T = mobius_01(*p, lo, hi);
    int v = sign_variations(T);
    if (v == 0) return;
    if (v == 1) {
        out.emplace_back(p, lo, hi, false);
        return;
    }
    Rational m = (lo + hi) * Rational(1, 2);
    if (p->sign_at(m) == 0) {
        // exact rational root at the midpoint: record and deflate
        UniPolyZ lin;  // den*x - num
        lin.c = {mpz_class(-m.numerator()), m.denominator()};
        auto q = std::make_shared<const UniPolyZ>(uz_exact_div(*p, lin));
        isolate_on(q, lo, m, out);
        out.emplace_back(p, m, m, true);
        isolate_on(q, m, hi, out);
        return;
    }
    isolate_on(p, lo, m, out);
    isolate_on(p, m, hi, out);
}

}  // namespace detail

// All real roots of p (any nonzero univariate polynomial; the squarefree part
// is taken first), sorted ascending, with 1-based indices.
inline std::vector<IsolatedRoot> isolate_real_roots(const UniPolyZ& p_in) {
    UniPolyZ p = p_in;
    p.trim();
    if (p.is_zero()) throw math_error("isolate_real_roots: zero polynomial");
    p = detail::uz_squarefree(p);
    std::vector<IsolatedRoot> out;
    // strip root at zero
    size_t k = 0;
    while (k < p.c.size() && p.c[k] == 0) ++k;
    if (k > 0) {
        p.c.erase(p.c.begin(), p.c.begin() + k);
        // squarefree part has at most a simple zero root
    }
    if (p.degree() >= 1) {
        // Cauchy bound: 1 + max |a_i| / |a_n|
        mpz_class amax(0);
        int n = p.degree();
        for (int i = 0; i < n; ++i) {
            mpz_class a = abs(p.c[i]);
            if (a > amax) amax = a;
        }
        mpz_class an = abs(p.c[n]);
        mpz_class bound = 2 + amax / an;  // integer ceiling margin
        Rational B{mpz_class(bound)};
        auto sp = std::make_shared<const UniPolyZ>(p);
        // negative side: q(x) = p(-x) on (0, B) maps to (-B, 0)
        UniPolyZ q = p;
        for (size_t i = 1; i < q.c.size(); i += 2) q.c[i] = -q.c[i];
        std::vector<IsolatedRoot> neg;
        detail::isolate_on(std::make_shared<const UniPolyZ>(q), Rational(0), B, neg);
        for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
            out.emplace_back(sp, -it->hi(), -it->lo(), it->exact());
        }
        if (k > 0) out.emplace_back(sp, Rational(0), Rational(0), true);
        detail::isolate_on(sp, Rational(0), B, out);
    } else if (k > 0) {
        auto sp = std::make_shared<const UniPolyZ>(p);
        out.emplace_back(sp, Rational(0), Rational(0), true);
    }
    for (size_t i = 0; i < out.size(); ++i) out[i].set_index(static_cast<int>(i) + 1);
    return out;
}

inline std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p, const std::string& v) {
    return isolate_real_roots(UniPolyZ::from_polynomial(p, v));
}

// The paper's root(p, l): -inf if l <= 0, +inf if l exceeds the real root
// count, otherwise the l-th real root.
struct ExtendedRoot {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind;
    std::optional<IsolatedRoot> root;

    static ExtendedRoot minus_infinity() { return {Kind::neg_inf, std::nullopt}; }
    static ExtendedRoot plus_infinity() { return {Kind::pos_inf, std::nullopt}; }
    bool is_finite() const { return kind == Kind::finite; }
};

inline ExtendedRoot root_selector(const std::vector<IsolatedRoot>& roots, int l) {
    if (l <= 0) return ExtendedRoot::minus_infinity();
    if (l > static_cast<int>(roots.size())) return ExtendedRoot::plus_infinity();
    return {ExtendedRoot::Kind::finite, roots[l - 1]};
}

inline ExtendedRoot root_selector(const Polynomial& p, const std::string& v, int l) {
    return root_selector(isolate_real_roots(p, v), l);
}

// A rational strictly between root(p, l) and root(p, l+1); infinities are
// handled by stepping one unit past the outermost refined bound.
inline Rational sample_between(std::vector<IsolatedRoot> roots, int l) {
    int n = static_cast<int>(roots.size());
    if (l < 0 || l > n) throw std::invalid_argument("sample_between: empty interval");
    if (n == 0) return Rational(0);
    if (l == 0) {
        roots[0].refine();
        return roots[0].lo() - Rational(1);
    }
    if (l == n) {
        roots[n - 1].refine();
        return roots[n - 1].hi() + Rational(1);
    }
    IsolatedRoot& a = roots[l - 1];
    IsolatedRoot& b = roots[l];
    // consecutive roots of one squarefree polynomial are distinct, so
    // bisection separates the intervals; the midpoint of the touching
    // bounds is then strictly between the two roots
    while (a.hi() > b.lo()) {
        a.refine();
        b.refine();
    }
    return (a.hi() + b.lo()) * Rational(1, 2);
}

inline Rational sample_between(const Polynomial& p, const std::string& v, int l) {
    return sample_between(isolate_real_roots(p, v), l);
}

}  // namespace cuspatlas

#endif
