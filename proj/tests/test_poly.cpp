#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/bihpoly.hpp"
#include "core/textio.hpp"
#include "core/tripoly.hpp"
#include "support/oracles.hpp"

using namespace rcs;

namespace {

HPoly H(const std::string& s) { return parse_hpoly(s); }

} // namespace

TEST_CASE("homogeneous arithmetic")
{
    CHECK(H("t + v") * H("t - v") == H("t^2 - v^2"));
    HPoly p = H("2*t^2 - v^2");
    CHECK(p + HPoly::zero() == p);
    CHECK(H("2*t") * H("3*v") == H("6*t*v"));
    CHECK_THROWS_AS(H("t") + H("t^2"), MathError);
}

TEST_CASE("homogeneous gcd")
{
    CHECK(gcd(H("t^2 - v^2"), H("t - v")) == H("t - v"));
    CHECK(gcd(H("t^2"), H("v^2")) == H("1"));
    // Shared monomial factor: cross-checked against brute-force divisor
    // enumeration.
    HPoly f = H("t^2*v"), g = H("t*v^2");
    HPoly expect = test::monomial_gcd_bruteforce(f, g);
    CHECK(expect == H("t*v"));
    CHECK(gcd(f, g) == expect);
}

TEST_CASE("gcd multiplicativity property")
{
    test::Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        HPoly f = rng.hpoly(static_cast<int>(rng.pick(1, 3)));
        HPoly g = rng.hpoly(static_cast<int>(rng.pick(1, 3)));
        HPoly h = rng.hpoly(static_cast<int>(rng.pick(1, 2)));
        HPoly lhs = gcd(f * h, g * h);
        HPoly rhs = (h * gcd(f, g)).normalized();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact division")
{
    CHECK(H("t^2 - v^2").divide_exact(H("t - v")) == H("t + v"));
    HPoly f = H("3*t^3 - t*v^2");
    CHECK(f.divide_exact(H("1")) == f);
    CHECK_THROWS_AS(H("t^2 + v^2").divide_exact(H("t - v")), MathError);
}

TEST_CASE("Cayley division")
{
    BiHPoly cay = BiHPoly::cayley();
    CHECK(cay.divide_by_cayley() == BiHPoly::from_su(H("1")));
    // s^2 v^2 - t^2 u^2 = (sv - tu)(sv + tu)
    BiHPoly f = cay * (BiHPoly::from_su(H("s*v").is_zero() ? H("1") : H("1")));
    BiHPoly sv_plus_tu(1, 1, {Rational(0), Rational(1), Rational(1), Rational(0)});
    BiHPoly s2v2_minus_t2u2 = cay * sv_plus_tu;
    CHECK(s2v2_minus_t2u2.divide_by_cayley() == sv_plus_tu);
    // Quotients re-multiply exactly (randomized).
    test::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        BiHPoly q = rng.bihpoly(static_cast<int>(rng.pick(0, 2)),
                                static_cast<int>(rng.pick(0, 2)));
        BiHPoly prod = cay * q;
        CHECK(prod.divide_by_cayley() == q);
    }
    // Non-vanishing diagonal is rejected.
    BiHPoly bad(1, 1, {Rational(1), Rational(0), Rational(0), Rational(0)}); // u*v
    CHECK_THROWS_AS(bad.divide_by_cayley(), MathError);
}

TEST_CASE("evaluation")
{
    CHECK(H("t^2 - v^2").eval(Rational(1), Rational(1)) == Rational(0));
    CHECK(H("t^2 - v^2").eval(Rational(2), Rational(1)) == Rational(3));
    CHECK_THROWS_AS(H("t").eval(Rational(0), Rational(0)), MathError);
    // Partial evaluation of a bihomogeneous polynomial gives a form in the
    // other pair.
    BiHPoly f = BiHPoly::from_su(H("s")) * BiHPoly::from_tv(H("t + v"));
    HPoly slice = f.eval_su(Rational(2), Rational(5));
    CHECK(slice == H("2*t + 2*v"));
}

TEST_CASE("resultants of univariate and homogeneous polynomials")
{
    CHECK(resultant(UPoly({Rational(-1), Rational(1)}), UPoly({Rational(1), Rational(1)})) ==
          Rational(2));
    UPoly f({Rational(3), Rational(0), Rational(1)}); // t^2 + 3
    CHECK(resultant(f, f) == Rational(0));
    UPoly a({Rational(1), Rational(0), Rational(1)});  // t^2 + 1
    UPoly b({Rational(-2), Rational(0), Rational(1)}); // t^2 - 2
    CHECK(resultant(a, b) == Rational(9));
    CHECK(test::sylvester_resultant(a, b) == Rational(9));
    // Homogeneous resultant vanishes exactly on common factors.
    test::Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        HPoly p = rng.hpoly(2), q = rng.hpoly(2);
        bool zero = is_zero(resultant_h(p, q));
        bool common = gcd(p, q).degree() > 0;
        CHECK(zero == common);
    }
}

TEST_CASE("chart round trips")
{
    test::Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        HPoly f = rng.hpoly(static_cast<int>(rng.pick(0, 5)));
        int ypow = f.y_power();
        CHECK(HPoly::homogenize(f.chart_x(), f.chart_x().degree() + ypow) == f);
        // Chart y reverses the coefficient order.
        UPoly cy = f.chart_y();
        for (int i = 0; i <= f.degree(); ++i)
            CHECK(cy.coeff(f.degree() - i) == f.coeff(i));
    }
}

TEST_CASE("trivariate polynomials")
{
    // x^3 - y^2 w
    TriPoly f(3, std::vector<Rational>(TriPoly::cell_count(3), Rational(0)));
    f.set_coeff(3, 0, Rational(1));
    f.set_coeff(0, 2, Rational(-1));
    CHECK(f.eval(Rational(1), Rational(1), Rational(1)) == Rational(0));
    CHECK(f.eval(Rational(2), Rational(1), Rational(1)) == Rational(7));
    TriPoly fy = f.derivative(1);
    CHECK(fy.eval(Rational(0), Rational(1), Rational(1)) == Rational(-2));
    // Composition with the cuspidal cubic vanishes identically.
    HPoly a = H("t^2*v"), b = H("t^3"), c = H("v^3");
    CHECK(f.compose(a, b, c).is_zero());
}

TEST_CASE("polynomial text syntax round trip")
{
    for (const std::string& s :
         {"t^2*v - 3/2*v^3", "t^4 - t^2*v^2 + 7*v^4", "t", "v^5", "2*t*v"}) {
        HPoly f = parse_hpoly(s);
        CHECK(parse_hpoly(f.to_string()) == f);
    }
    CHECK_THROWS_AS(parse_hpoly("t^2 + v"), ParseError); // inhomogeneous
    CHECK_THROWS_AS(parse_hpoly("t^2 +"), ParseError);
}
