// Test-only oracles, independent of the library's computation paths:
// Bareiss fraction-free Sylvester determinants for resultants, Sturm
// sequences for real-root counts, and random generators.
#ifndef CUSPATLAS_TEST_ORACLES_HPP
#define CUSPATLAS_TEST_ORACLES_HPP

#include "cuspatlas/polynomial.hpp"
#include "cuspatlas/realroots.hpp"

#include <random>

namespace oracles {

using cuspatlas::Monomial;
using cuspatlas::Polynomial;
using cuspatlas::Rational;
using cuspatlas::SpacePtr;
using cuspatlas::UniPolyZ;

// Determinant by fraction-free Bareiss elimination with exact division.
inline Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> M, const SpacePtr& space) {
    const int n = static_cast<int>(M.size());
    Polynomial prev = Polynomial::constant(space, Rational(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!M[r][k].is_zero()) { piv = r; break; }
            if (piv < 0) return Polynomial::zero(space);
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = num.is_zero() ? num : cuspatlas::exact_divide(num, prev);
            }
            M[i][k] = Polynomial::zero(space);
        }
        prev = M[k][k];
    }
    Polynomial det = M[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Sylvester matrix with the rows of p first.
inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, const std::string& v) {
    const SpacePtr& space = p.space();
    auto a = p.coefficients_wrt(v);  // a[i] on v^i
    auto b = q.coefficients_wrt(v);
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    int N = m + n;
    std::vector<std::vector<Polynomial>> M(N, std::vector<Polynomial>(N, Polynomial::zero(space)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + i] = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + i] = b[n - i];
    return bareiss_determinant(std::move(M), space);
}

// Sturm sequence count of distinct real roots in (a, b].
inline int sturm_count(const UniPolyZ& p_in, const Rational& a, const Rational& b) {
    UniPolyZ p = cuspatlas::detail::uz_squarefree(p_in);
    std::vector<UniPolyZ> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        const UniPolyZ& f = seq[seq.size() - 2];
        const UniPolyZ& g = seq.back();
        // negated pseudo-remainder, sign-corrected so the Sturm property holds:
        // multiply f by lc(g)^2k (positive) before long division
        UniPolyZ r = f;
        int dg = g.degree();
        mpz_class lg = g.c[dg];
        while (r.degree() >= dg && !r.is_zero()) {
            int dr = r.degree();
            mpz_class lr = r.c[dr];
            for (auto& x : r.c) x *= lg * lg;  // even power keeps signs
            mpz_class f2 = lr * lg;
            for (int i = 0; i <= dg; ++i) r.c[dr - dg + i] -= f2 * g.c[i];
            r.trim();
        }
        for (auto& x : r.c) x = -x;
        // strip positive integer content only; do not flip the sign, the
        // Sturm property depends on it
        mpz_class cont(0);
        for (const auto& x : r.c) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
        if (cont > 1)
            for (auto& x : r.c) x /= cont;
        seq.push_back(r);
        if (seq.back().is_zero()) break;
    }
    auto variations = [&](const Rational& x) {
        int v = 0, last = 0;
        for (const auto& f : seq) {
            if (f.is_zero()) continue;
            int s = f.sign_at(x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    return variations(a) - variations(b);
}

inline int sturm_count_all(const UniPolyZ& p) {
    // Cauchy bound on both sides
    UniPolyZ p2 = cuspatlas::detail::uz_squarefree(p);
    int n = p2.degree();
    if (n <= 0) return 0;
    mpz_class amax(0);
    for (int i = 0; i < n; ++i) {
        mpz_class v = abs(p2.c[i]);
        if (v > amax) amax = v;
    }
    mpz_class bound = 2 + amax / abs(p2.c[n]);
    Rational B{mpz_class(bound)};
    return sturm_count(p2, -B, B);
}

// --- random generators (hand-rolled property style) -----------------------

inline Rational random_rational(std::mt19937_64& rng, long amp = 10) {
    std::uniform_int_distribution<long> num(-amp, amp);
    std::uniform_int_distribution<long> den(1, 6);
    return Rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const SpacePtr& space, int max_deg,
                                    int nterms, long amp = 8) {
    Polynomial p = Polynomial::zero(space);
    std::uniform_int_distribution<int> expd(0, max_deg);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(space->size());
        int budget = max_deg;
        for (int i = 0; i < space->size(); ++i) {
            int e = std::uniform_int_distribution<int>(0, budget)(rng);
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) e = 0;
            m[i] = uint16_t(e);
            budget -= e;
            if (budget <= 0) break;
        }
        Rational c = random_rational(rng, amp);
        if (c.is_zero()) continue;
        p += Polynomial::constant(space, c).times_term(m, Rational(1));
    }
    return p;
}

inline UniPolyZ random_unipoly(std::mt19937_64& rng, int max_deg, long amp = 20) {
    std::uniform_int_distribution<int> degd(1, max_deg);
    std::uniform_int_distribution<long> cd(-amp, amp);
    int d = degd(rng);
    UniPolyZ p;
    p.c.resize(d + 1);
    for (int i = 0; i <= d; ++i) p.c[i] = cd(rng);
    while (p.c[d] == 0) p.c[d] = cd(rng);
    return p;
}

}  // namespace oracles

#endif
