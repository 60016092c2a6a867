#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/polymat.hpp"
#include "core/textio.hpp"
#include "support/oracles.hpp"

using namespace rcs;

namespace {

UPoly U(std::vector<long> coeffs)
{
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return UPoly(std::move(c));
}

PolyMat mat2(const UPoly& a, const UPoly& b, const UPoly& c, const UPoly& d)
{
    PolyMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

PolyMat random_polymat(test::Rng& rng, int size, int maxdeg, long bound = 2)
{
    PolyMat m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            m.at(i, j) = rng.upoly(static_cast<int>(rng.pick(0, maxdeg)), bound, false);
    return m;
}

} // namespace

TEST_CASE("univariate Smith normal form on small examples")
{
    UPoly t = U({0, 1}), one = U({1});

    SmithFormU s1 = snf_univariate(mat2(t, UPoly(), UPoly(), t * t));
    CHECK(s1.factors == std::vector<UPoly>{t, t * t});

    SmithFormU s2 = snf_univariate(mat2(t, UPoly(), UPoly(), one));
    CHECK(s2.factors == std::vector<UPoly>{one, t});

    // Determinant factor oracle: D1 = t, D2 = det = t^2, so the invariant
    // factors are (t, t).
    PolyMat m = mat2(t, t * t, t * t, t * t * t + t);
    auto oracle = test::minor_det_factors(m);
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0] == t);
    CHECK(oracle[1] == t * t);
    SmithFormU s3 = snf_univariate(m);
    CHECK(s3.factors == std::vector<UPoly>{t, t});

    CHECK_THROWS_AS(snf_univariate(PolyMat(2, 2)), MathError);
}

TEST_CASE("Smith transforms reproduce the diagonal exactly")
{
    test::Rng rng(211);
    for (int trial = 0; trial < 60; ++trial) {
        int size = static_cast<int>(rng.pick(1, 4));
        PolyMat m = random_polymat(rng, size, 2);
        if (m.is_zero()) continue;
        SmithFormU s = snf_univariate(m, true);
        REQUIRE(s.left.has_value());
        REQUIRE(s.right.has_value());
        // Unimodularity: constant nonzero determinants.
        UPoly dl = s.left->det(), dr = s.right->det();
        CHECK(dl.degree() == 0);
        CHECK(dr.degree() == 0);
        PolyMat diag = *s.left * m * *s.right;
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                CHECK(diag.at(i, j) == (i == j ? s.factors[i] : UPoly()));
        // Divisibility chain.
        for (int i = 0; i + 1 < size; ++i) {
            if (s.factors[i + 1].is_zero()) continue;
            CHECK(s.factors[i + 1].divrem(s.factors[i]).second.is_zero());
        }
    }
}

TEST_CASE("equivalent matrices share one Smith form")
{
    test::Rng rng(223);
    for (int trial = 0; trial < 30; ++trial) {
        int size = 3;
        PolyMat m = random_polymat(rng, size, 2);
        if (m.is_zero()) continue;
        // Random elementary row/column operations.
        PolyMat e = PolyMat::identity(size);
        e.at(0, 1) = rng.upoly(1, 2, false);
        PolyMat f = PolyMat::identity(size);
        f.at(2, 0) = rng.upoly(1, 2, false);
        SmithFormU s1 = snf_univariate(m);
        SmithFormU s2 = snf_univariate(e * m * f);
        CHECK(s1.factors == s2.factors);
    }
}

TEST_CASE("determinant factors")
{
    DetFactorsU id = det_factors(PolyMat::identity(3));
    REQUIRE(id.D.size() == 3);
    for (const auto& d : id.D) CHECK(d == U({1}));

    UPoly t = U({0, 1});
    DetFactorsU dd = det_factors(mat2(t, UPoly(), UPoly(), t));
    REQUIRE(dd.D.size() == 2);
    CHECK(dd.D[0] == t);
    CHECK(dd.D[1] == t * t);

    // Cross-oracle: minor gcds equal products of invariant factors.
    test::Rng rng(307);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMat m = random_polymat(rng, 3, 2);
        if (m.is_zero()) continue;
        SmithFormU s = snf_univariate(m);
        auto mins = test::minor_det_factors(m);
        UPoly run = U({1});
        for (size_t k = 0; k < mins.size(); ++k) {
            run = (run * s.factors[k]).normalized();
            CHECK(mins[k] == run);
        }
    }
}

TEST_CASE("homogeneous Smith normal form")
{
    HPoly t = parse_hpoly("t"), v = parse_hpoly("v"), tv = parse_hpoly("t*v");
    HPolyMat m(2, 2);
    m.at(0, 0) = t;
    m.at(1, 1) = tv;
    SmithFormH s = snf_homogeneous(m);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == t);
    CHECK(s.factors[1] == tv);

    // Degree conservation: the product of invariant factors has the
    // determinant's degree.
    test::Rng rng(401);
    for (int trial = 0; trial < 25; ++trial) {
        HPolyMat a(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a.at(i, j) = rng.hpoly(2);
        HPoly det = a.det();
        if (det.is_zero()) continue;
        SmithFormH sh = snf_homogeneous(a);
        int total = 0;
        for (const auto& f : sh.factors) total += f.degree();
        CHECK(total == det.degree());
        // Chart consistency: specializing at v=1 reproduces the univariate
        // invariant factors after dropping pure-v content.
        SmithFormU sx = snf_univariate(a.chart_x());
        for (size_t i = 0; i < sh.factors.size(); ++i)
            CHECK(sh.factors[i].chart_x().normalized() == sx.factors[i].normalized());
    }
    (void)v;
}

TEST_CASE("invariant factor products divide the product's factors")
{
    PolyMat id = PolyMat::identity(2);
    CHECK(check_product_divisibility(id, id).ok);

    UPoly t = U({0, 1}), one = U({1});
    PolyMat d1t = mat2(one, UPoly(), UPoly(), t);
    CheckReport rep = check_product_divisibility(d1t, d1t);
    CHECK(rep.ok);

    test::Rng rng(503);
    int done = 0;
    while (done < 100) {
        PolyMat a = random_polymat(rng, 3, 2, 1);
        PolyMat b = random_polymat(rng, 3, 2, 1);
        if (a.det().is_zero() || b.det().is_zero()) continue;
        CHECK(check_product_divisibility(a, b).ok);
        ++done;
    }
}

TEST_CASE("rank at a parameter value")
{
    HPolyMat id(2, 2);
    id.at(0, 0) = HPoly::constant(Rational(1));
    id.at(1, 1) = HPoly::constant(Rational(1));
    CHECK(rank_at(id, Rational(5), Rational(7)) == 2);

    HPolyMat d(2, 2);
    d.at(0, 0) = parse_hpoly("t");
    d.at(1, 1) = parse_hpoly("v");
    CHECK(rank_at(d, Rational(0), Rational(1)) == 1);
    CHECK_THROWS_AS(rank_at(d, Rational(0), Rational(0)), MathError);
}
