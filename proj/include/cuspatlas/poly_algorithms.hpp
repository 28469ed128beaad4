// Subresultant PRS, univariate gcd, contents, squarefree parts.
#ifndef CUSPATLAS_POLY_ALGORITHMS_HPP
#define CUSPATLAS_POLY_ALGORITHMS_HPP

#include "cuspatlas/polynomial.hpp"

namespace cuspatlas {

namespace detail {

// Exact pseudo-remainder and quotient: lc(B)^(dA-dB+1) * A = Q*B + R.
inline std::pair<UPoly, UPoly> upseudo_divide(const UPoly& A0, const UPoly& B) {
    int db = udeg(B);
    if (db < 0) throw std::domain_error("pseudo-division by zero");
    const Polynomial& lb = B[db];
    UPoly A = A0;
    int da = udeg(A);
    if (da < db) {
        // lc^(0)… convention: multiply by lc^(da-db+1) impossible; return (0, A)
        return {UPoly{}, A};
    }
    int steps_left = da - db + 1;
    UPoly Q(std::max(da - db + 1, 0), Polynomial::zero(lb.space(), lb.order()));
    while (true) {
        int d = udeg(A);
        if (d < db) break;
        Polynomial la = A[d];
        for (auto& x : A) x = x * lb;
        for (auto& x : Q) x = x * lb;
        Q[d - db] += la;
        for (int i = 0; i <= db; ++i) A[d - db + i] -= B[i] * la;
        utrim(A);
        --steps_left;
    }
    // pad to exactly lc^(dA-dB+1)
    for (; steps_left > 0; --steps_left) {
        for (auto& x : A) x = x * lb;
        for (auto& x : Q) x = x * lb;
    }
    return {Q, A};
}

inline UPoly uprem_exact(const UPoly& A, const UPoly& B) { return upseudo_divide(A, B).second; }

inline Polynomial upoly_pow(Polynomial base, int e) {
    Polynomial r = Polynomial::constant(base.space(), Rational(1), base.order());
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Subresultant PRS core.  Returns {resultant, last nonzero PRS element}.
// The resultant matches the Sylvester determinant with the rows of A first.
inline std::pair<Polynomial, UPoly> subresultant_prs(UPoly A, UPoly B, const SpacePtr& space) {
    Polynomial zero = Polynomial::zero(space);
    Polynomial one = Polynomial::constant(space, Rational(1));
    int da = udeg(A), db = udeg(B);
    if (da < 0 || db < 0) return {zero, {}};
    int sign = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) sign = -sign;
    }
    if (db == 0) {
        // Res(A, b) = b^deg(A)
        Polynomial r = upoly_pow(B[0], da);
        if (sign < 0) r = -r;
        return {r, B};
    }
    Polynomial g = one, h = one;
    UPoly last = B;
    while (true) {
        da = udeg(A);
        db = udeg(B);
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        UPoly R = uprem_exact(A, B);
        A = B;
        Polynomial divisor = g * upoly_pow(h, delta);
        B = R;
        for (auto& x : B)
            if (!x.is_zero()) x = exact_divide(x, divisor);
        utrim(B);
        g = A[udeg(A)];
        if (delta > 0) {
            Polynomial gp = upoly_pow(g, delta);
            h = (delta == 1) ? gp : exact_divide(gp, upoly_pow(h, delta - 1));
        }
        if (udeg(B) <= 0) break;
        last = B;
    }
    if (udeg(B) < 0) return {zero, last};  // nontrivial gcd: resultant is 0
    // deg(B) == 0: res = sign * lc(B)^deg(A) / h^(deg(A)-1)
    int dA = udeg(A);
    Polynomial num = upoly_pow(B[0], dA);
    Polynomial res = (dA >= 1) ? exact_divide(num, upoly_pow(h, dA - 1)) : num;
    if (sign < 0) res = -res;
    return {res, B};
}

inline UPoly to_upoly(const Polynomial& p, const std::string& v) {
    return p.coefficients_wrt(v);
}

inline Polynomial from_upoly(const UPoly& u, const std::string& v, const SpacePtr& space) {
    if (u.empty()) return Polynomial::zero(space);
    return Polynomial::from_coefficients_wrt(space->index(v), u, space);
}

}  // namespace detail

// Resultant of p, q with respect to v: the determinant of the Sylvester
// matrix whose first rows carry the coefficients of p.  Computed by the
// subresultant polynomial remainder sequence.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& v) {
    p.check_same_space(q);
    if (p.degree(v) < 1 && q.degree(v) < 1)
        throw math_error("resultant: both inputs constant in " + v);
    if (p.is_zero() || q.is_zero()) return Polynomial::zero(p.space());
    auto [res, last] = detail::subresultant_prs(detail::to_upoly(p, v), detail::to_upoly(q, v), p.space());
    return res;
}

// disc(p, v) = resultant(p, dp/dv) / lc_v(p).  Sign convention: no extra
// (-1)^(n(n-1)/2) factor; callers only use the vanishing locus.
inline Polynomial discriminant(const Polynomial& p, const std::string& v) {
    if (p.degree(v) < 2) throw math_error("discriminant: degree < 2 in " + v);
    Polynomial r = resultant(p, p.derivative(v), v);
    if (r.is_zero()) return r;
    return exact_divide(r, p.leading_coefficient_wrt(v));
}

// gcd of polynomials that are univariate in v (coefficients rational).
inline Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, const std::string& v) {
    int iv = a.space()->index(v);
    for (const auto& t : a.terms())
        for (int i = 0; i < t.m.n; ++i)
            if (t.m[i] && i != iv) throw std::invalid_argument("univariate_gcd: input not univariate");
    for (const auto& t : b.terms())
        for (int i = 0; i < t.m.n; ++i)
            if (t.m[i] && i != iv) throw std::invalid_argument("univariate_gcd: input not univariate");
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_normalized();
    if (b.is_zero()) return a.primitive_normalized();
    // Euclid over Q with primitive normalization each step.
    Polynomial x = a.primitive_normalized(), y = b.primitive_normalized();
    if (x.degree(v) < y.degree(v)) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree(v) == 0) return Polynomial::constant(a.space(), Rational(1));
        auto [q, r] = detail::upseudo_divide(detail::to_upoly(x, v), detail::to_upoly(y, v));
        Polynomial rem = detail::from_upoly(r, v, a.space());
        x = y;
        y = rem.is_zero() ? rem : rem.primitive_normalized();
    }
    return x.primitive_normalized();
}

inline Polynomial content_in(const Polynomial& p, const std::string& v) {
    if (p.is_zero()) return p;
    int iv = p.space()->index(v);
    // Group terms by the exponents of all other variables.
    std::unordered_map<Monomial, Polynomial, MonomialHash> groups;
    for (const auto& t : p.terms()) {
        Monomial key = t.m;
        uint16_t ev = key[iv];
        key[iv] = 0;
        auto it = groups.find(key);
        if (it == groups.end())
            it = groups.emplace(key, Polynomial::zero(p.space())).first;
        Monomial vm(t.m.n);
        vm[iv] = ev;
        it->second += Polynomial::constant(p.space(), t.c).times_term(vm, Rational(1));
    }
    Polynomial g = Polynomial::zero(p.space());
    for (auto& [key, poly] : groups) {
        g = univariate_gcd(g, poly, v);
        if (!g.is_zero() && g.degree(iv) == 0) break;
    }
    return g.primitive_normalized();
}

// Tangent half-angle substitution s -> 2t/(1+t^2), c -> (1-t^2)/(1+t^2),
// cleared by (1+t^2)^k with k the largest joint degree in (s, c).  Returns
// the cleared polynomial (in the space without s, c) and the power k.
inline std::pair<Polynomial, int> tangent_half_angle(const Polynomial& p, const std::string& s_name,
                                                     const std::string& c_name,
                                                     const std::string& t_name) {
    const SpacePtr& sp = p.space();
    int is = sp->index(s_name), ic = sp->index(c_name);
    sp->index(t_name);
    int k = 0;
    for (const auto& t : p.terms()) k = std::max(k, int(t.m[is]) + int(t.m[ic]));

    std::vector<std::string> names;
    for (const auto& n : sp->names())
        if (n != s_name && n != c_name) names.push_back(n);
    SpacePtr ns = VariableSpace::make(names);

    Polynomial tv = Polynomial::variable(ns, t_name);
    Polynomial one = Polynomial::constant(ns, Rational(1));
    Polynomial two_t = Rational(2) * tv;
    Polynomial one_minus = one - tv * tv;
    Polynomial one_plus = one + tv * tv;

    auto pow_of = [](const Polynomial& base, int e, const SpacePtr& space) {
        Polynomial r = Polynomial::constant(space, Rational(1));
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };

    Polynomial acc = Polynomial::zero(ns);
    for (const auto& t : p.terms()) {
        Monomial m(ns->size());
        int j = 0;
        for (int i = 0; i < sp->size(); ++i)
            if (i != is && i != ic) m[j++] = t.m[i];
        Polynomial f = Polynomial::constant(ns, t.c);
        f *= pow_of(two_t, t.m[is], ns);
        f *= pow_of(one_minus, t.m[ic], ns);
        f *= pow_of(one_plus, k - t.m[is] - t.m[ic], ns);
        acc += f.times_term(m, Rational(1));
    }
    return {acc, k};
}

inline Polynomial squarefree_part(const Polynomial& p, const std::string& v) {
    if (p.is_zero()) throw math_error("squarefree_part: zero polynomial");
    if (p.degree(v) < 1) throw math_error("squarefree_part: no positive degree in " + v);
    Polynomial dp = p.derivative(v);
    auto [res, last] = detail::subresultant_prs(detail::to_upoly(p, v), detail::to_upoly(dp, v), p.space());
    Polynomial g = detail::from_upoly(last, v, p.space());
    if (g.is_zero() || g.degree(v) == 0) return p.primitive_normalized();
    g = g.primitive_normalized();
    // Strip polynomial content the PRS may have accumulated: univariate
    // contents in each other variable are computable exactly.
    for (const auto& name : p.space()->names()) {
        if (name == v || !g.depends_on(name)) continue;
        Polynomial c = content_in(g, name);
        if (!c.is_zero() && c.total_degree() > 0) g = exact_divide(g, c);
    }
    try {
        return exact_divide(p, g).primitive_normalized();
    } catch (const not_divisible_error&) {
        // Residual content in >1 variable: fall back to the pseudo-quotient,
        // which differs from p/gcd only by factors free of v.
        auto [q, r] = detail::upseudo_divide(detail::to_upoly(p, v), detail::to_upoly(g, v));
        Polynomial quot = detail::from_upoly(q, v, p.space());
        if (quot.is_zero()) return p.primitive_normalized();
        return quot.primitive_normalized();
    }
}

}  // namespace cuspatlas

#endif
