#include <catch2/catch_amalgamated.hpp>

#include "cuspatlas/rational.hpp"

#include <random>

using namespace cuspatlas;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(7, 5) < Rational(10, 7));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(-1, 2)).denominator() > 0);
}

TEST_CASE("rational division and errors") {
    CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational::from_string("1/3").str() == "1/3");
    CHECK(Rational::from_string("-2").str() == "-2");
    CHECK(Rational::from_string("4/6").str() == "2/3");
    CHECK(Rational(0).str() == "0");
    CHECK_THROWS(Rational::from_string("abc"));
}

TEST_CASE("rational pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("interval arithmetic basics") {
    RationalInterval a{Rational(1), Rational(2)};
    RationalInterval b{Rational(3), Rational(4)};
    CHECK((a + b) == RationalInterval{Rational(4), Rational(6)});
    RationalInterval c{Rational(-1), Rational(2)};
    CHECK((c * b) == RationalInterval{Rational(-4), Rational(8)});
    CHECK((-a) == RationalInterval{Rational(-2), Rational(-1)});
    CHECK_THROWS_AS((RationalInterval{Rational(2), Rational(1)}), std::invalid_argument);
}

namespace {
Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(num(rng), den(rng));
}
RationalInterval random_interval(std::mt19937_64& rng) {
    Rational a = random_rational(rng), b = random_rational(rng);
    return a <= b ? RationalInterval{a, b} : RationalInterval{b, a};
}
}  // namespace

TEST_CASE("interval ops contain pointwise results and are inclusion monotone") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        RationalInterval a = random_interval(rng), b = random_interval(rng);
        // pick x in a, y in b
        Rational x = a.lo + (a.hi - a.lo) * Rational(1, 3);
        Rational y = b.lo + (b.hi - b.lo) * Rational(2, 5);
        CHECK((a + b).contains(x + y));
        CHECK((a * b).contains(x * y));
        CHECK((-a).contains(-x));
        // inclusion monotonicity: widen and check containment
        RationalInterval aw{a.lo - Rational(1), a.hi + Rational(1)};
        RationalInterval bw{b.lo - Rational(1, 2), b.hi + Rational(1, 3)};
        CHECK(aw.contains(a));
        CHECK((aw + bw).contains(a + b));
        CHECK((aw * bw).contains(a * b));
    }
}

TEST_CASE("box coordinate lookup and disjointness") {
    Box b1{{{"x", {Rational(0), Rational(1)}}, {"y", {Rational(0), Rational(1)}}}};
    Box b2{{{"x", {Rational(2), Rational(3)}}, {"y", {Rational(0), Rational(1)}}}};
    CHECK(b1.at("x").hi == Rational(1));
    CHECK(b1.disjoint(b2));
    CHECK_THROWS_AS(b1.at("z"), std::out_of_range);
}
