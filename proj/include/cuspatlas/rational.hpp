// Exact rational arithmetic and rational interval arithmetic.
// Every quantity in the kernel is an element of Q or a product of
// Q-intervals; floating point appears only when emitting reports.
#ifndef CUSPATLAS_RATIONAL_HPP
#define CUSPATLAS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cuspatlas {

// Arbitrary-precision rational, canonical form (reduced, denominator > 0).
// Thin value wrapper over GMP's mpq_class; construction canonicalizes.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p", "-p", or "p/q".  Used by every config and report format.
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        return Rational(std::move(q));
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    Rational pow(unsigned e) const {
        mpq_class r(1);
        mpq_class base = v_;
        unsigned k = e;
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return Rational(std::move(r));
    }

    // Serialization: "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
    Rational lo, hi;

    RationalInterval() = default;
    RationalInterval(Rational point) : lo(point), hi(std::move(point)) {}
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::invalid_argument("RationalInterval: lo > hi");
    }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool disjoint(const RationalInterval& o) const { return hi < o.lo || o.hi < lo; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) * Rational(1, 2); }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }
    // Four-endpoint rule; endpoints exact, so no outward rounding.
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
    }

    RationalInterval pow(unsigned e) const {
        RationalInterval r(Rational(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

    friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

// Product of named intervals certifying one point of R^n.
struct Box {
    std::vector<std::pair<std::string, RationalInterval>> coords;

    const RationalInterval& at(const std::string& name) const {
        for (const auto& [n, iv] : coords)
            if (n == name) return iv;
        throw std::out_of_range("Box: no coordinate '" + name + "'");
    }
    bool has(const std::string& name) const {
        for (const auto& [n, iv] : coords)
            if (n == name) return true;
        return false;
    }
    bool disjoint(const Box& o) const {
        // Disjoint iff some shared coordinate's intervals are disjoint.
        for (const auto& [n, iv] : coords)
            if (o.has(n) && iv.disjoint(o.at(n))) return true;
        return false;
    }
};

}  // namespace cuspatlas

#endif
