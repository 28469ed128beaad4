#include <catch2/catch_amalgamated.hpp>

#include "cuspatlas/realroots.hpp"

#include "oracles.hpp"

#include <random>

using namespace cuspatlas;

namespace {
Polynomial P(const std::string& s, const SpacePtr& sp) { return Polynomial::parse(s, sp); }
SpacePtr xs() { return VariableSpace::make({"x"}); }
}  // namespace

TEST_CASE("isolating simple roots") {
    auto roots = isolate_real_roots(P("x^2 - 2", xs()), "x");
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].interval().contains(Rational(-1415, 1000)) );
    CHECK(roots[1].interval().contains(Rational(1415, 1000)));
    CHECK(roots[0].hi() <= roots[1].lo());  // non-overlapping open intervals
    CHECK(roots[0].index() == 1);
    CHECK(roots[1].index() == 2);
}

TEST_CASE("multiple root collapses to one isolated point") {
    auto roots = isolate_real_roots(P("x^3", xs()), "x");
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].exact());
    CHECK(roots[0].lo() == Rational(0));
}

TEST_CASE("the positive root of the quartic DV factor") {
    // 2 rho1^4 + 10 rho1^2 - 1: two real roots, the positive one (r1) in
    // ]0.31, 0.32[ after refinement
    auto sp = VariableSpace::make({"rho1"});
    auto roots = isolate_real_roots(P("2*rho1^4 + 10*rho1^2 - 1", sp), "rho1");
    REQUIRE(roots.size() == 2);
    CHECK(oracles::sturm_count_all(UniPolyZ::from_polynomial(P("2*rho1^4 + 10*rho1^2 - 1", sp), "rho1")) == 2);
    IsolatedRoot pos = roots[1];
    pos.refine_to_width(Rational(1, 1000));
    CHECK(Rational(31, 100) < pos.lo());
    CHECK(pos.hi() < Rational(32, 100));
}

TEST_CASE("isolation count matches Sturm on random polynomials") {
    std::mt19937_64 rng(321);
    for (int it = 0; it < 200; ++it) {
        UniPolyZ p = oracles::random_unipoly(rng, 8);
        auto roots = isolate_real_roots(p);
        CHECK(static_cast<int>(roots.size()) == oracles::sturm_count_all(p));
        for (size_t i = 0; i + 1 < roots.size(); ++i) {
            CHECK(roots[i].compare_root(roots[i + 1]) < 0);
        }
    }
}

TEST_CASE("isolated intervals certify sign change or exactness") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 50; ++it) {
        UniPolyZ p = oracles::random_unipoly(rng, 6);
        for (auto& r : isolate_real_roots(p)) {
            if (r.exact()) {
                CHECK(r.poly().sign_at(r.lo()) == 0);
            } else {
                CHECK(r.poly().sign_at(r.lo()) * r.poly().sign_at(r.hi()) < 0);
            }
        }
    }
}

TEST_CASE("root selector semantics") {
    auto sp = xs();
    Polynomial p = P("x^3 - 2*x", sp);  // roots -sqrt2, 0, sqrt2
    auto r2 = root_selector(p, "x", 2);
    REQUIRE(r2.is_finite());
    CHECK(r2.root->exact());
    CHECK(r2.root->lo() == Rational(0));

    CHECK(root_selector(P("x^2 + 1", sp), "x", 1).kind == ExtendedRoot::Kind::pos_inf);
    CHECK(root_selector(p, "x", 0).kind == ExtendedRoot::Kind::neg_inf);
    CHECK(root_selector(p, "x", 4).kind == ExtendedRoot::Kind::pos_inf);
}

TEST_CASE("root selector is monotone in l") {
    std::mt19937_64 rng(888);
    for (int it = 0; it < 20; ++it) {
        UniPolyZ p = oracles::random_unipoly(rng, 6);
        auto roots = isolate_real_roots(p);
        int n = static_cast<int>(roots.size());
        for (int l = 0; l + 1 <= n; ++l) {
            auto a = root_selector(roots, l);
            auto b = root_selector(roots, l + 1);
            if (a.is_finite() && b.is_finite()) CHECK(a.root->compare_root(*b.root) < 0);
        }
    }
}

TEST_CASE("sample between consecutive roots") {
    auto sp = xs();
    Polynomial p = P("x^2 - 2", sp);
    Rational s = sample_between(p, "x", 1);
    CHECK(p.eval({s}).sign() < 0);  // inside ]-sqrt2, sqrt2[

    Rational s0 = sample_between(p, "x", 0);
    CHECK(s0 * s0 > Rational(2));
    CHECK(s0.sign() < 0);
    Rational s2 = sample_between(p, "x", 2);
    CHECK(s2 * s2 > Rational(2));
    CHECK(s2.sign() > 0);

    CHECK_THROWS_AS(sample_between(p, "x", -1), std::invalid_argument);
}

TEST_CASE("samples between the DV roots r2 and r3") {
    // the 1-parameter DV of the cusp system: rho1 (rho1^2-2) (8 rho1^2-1)
    // (2 rho1^4+10 rho1^2-1); between r2 = sqrt(2)/4 and r3 = sqrt(2) the
    // value 1 is admissible (0.354 < 1 < 1.414)
    auto sp = VariableSpace::make({"rho1"});
    Polynomial dv = P("rho1", sp) * P("rho1^2 - 2", sp) * P("8*rho1^2 - 1", sp) *
                    P("2*rho1^4 + 10*rho1^2 - 1", sp);
    auto roots = isolate_real_roots(dv, "rho1");
    // roots: -r3, -r2, -r1, 0, r1, r2, r3
    REQUIRE(roots.size() == 7);
    Rational s = sample_between(roots, 6);
    CHECK(Rational(3, 10) < s);
    CHECK(s < Rational(15, 10));
    // and the sample strictly separates the two roots
    CHECK(roots[5].compare(s) < 0);
    CHECK(roots[6].compare(s) > 0);
}

TEST_CASE("refinement shrinks without losing the root") {
    std::mt19937_64 rng(999);
    for (int it = 0; it < 30; ++it) {
        UniPolyZ p = oracles::random_unipoly(rng, 5);
        for (auto r : isolate_real_roots(p)) {
            RationalInterval before = r.interval();
            r.refine_to_width(Rational(1, 1 << 20));
            CHECK(before.contains(r.interval()));
            if (!r.exact()) {
                CHECK(r.width() <= Rational(1, 1 << 20));
                CHECK(r.poly().sign_at(r.lo()) * r.poly().sign_at(r.hi()) < 0);
            }
        }
    }
}
