#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/mubasis.hpp"
#include "core/resultants.hpp"
#include "core/singularity.hpp"
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

// Sylvester matrix of two bihomogeneous polynomials in (t,v), entries
// forms in (s,u); determinant by Laplace expansion only.
HPoly sylvester_resultant_tv(const BiHPoly& F, const BiHPoly& G)
{
    int m = F.deg_tv(), n = G.deg_tv();
    HPolyMat s(m + n, m + n);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s.at(r, r + i) = F.tv_coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s.at(n + r, r + i) = G.tv_coeff(n - i);
    return test::laplace_det(s);
}

bool is_pm_power_of(const Rational& ratio, const Rational& base, int lmax)
{
    Rational p(1);
    for (int l = 0; l <= lmax; ++l) {
        if (ratio == p || ratio == -p) return true;
        p *= base;
    }
    return false;
}

} // namespace

TEST_CASE("Bezout matrix basics")
{
    BiHPoly Ft = BiHPoly::from_tv(parse_hpoly("t"));
    BiHPoly Gv = BiHPoly::from_tv(parse_hpoly("v"));
    BezoutMatrix b = bezout_tv(Ft, Gv);
    REQUIRE(b.size == 1);
    CHECK(b.mat.at(0, 0) == HPoly::constant(Rational(1)));

    CHECK(bezout_tv(Ft, Ft).mat.is_zero());

    // Swapping the inputs negates the matrix; equal-degree input gives a
    // symmetric matrix.
    test::Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        BiHPoly F = rng.bihpoly(1, 2), G = rng.bihpoly(1, 2);
        BezoutMatrix bf = bezout_tv(F, G), bg = bezout_tv(G, F);
        for (int i = 0; i < bf.size; ++i)
            for (int j = 0; j < bf.size; ++j) {
                CHECK(bf.mat.at(i, j) == bf.mat.at(j, i));
                HPoly neg = bg.mat.at(i, j).scaled(Rational(-1));
                CHECK(bf.mat.at(i, j) == neg);
            }
    }
}

TEST_CASE("Bezout matrix determinant is the resultant")
{
    // Cuspidal cubic mu-basis.
    CurveSpec curve = parse_curve("t^2*v; t^3; v^3");
    MuBasis basis = compute_mubasis(curve);
    FGPair fg = build_FG(curve, basis);
    BezoutMatrix b = bezout_tv(fg.F, fg.G);
    REQUIRE(b.size == 2);
    HPoly det = b.mat.det();
    HPoly res = sylvester_resultant_tv(fg.F, fg.G);
    CHECK(det.normalized() == res.normalized());

    test::Rng rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        BiHPoly F = rng.bihpoly(1, 2), G = rng.bihpoly(1, 2);
        HPoly d = bezout_tv(F, G).mat.det();
        HPoly r = sylvester_resultant_tv(F, G);
        if (d.is_zero())
            CHECK(r.is_zero());
        else
            CHECK(d.normalized() == r.normalized());
    }
}

TEST_CASE("coefficient reversal conjugates the Bezout matrix")
{
    // Reversing both inputs (the chart at the other end of the parameter
    // line) reverses rows and columns and flips the sign.
    test::Rng rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        BiHPoly F = rng.bihpoly(1, 2), G = rng.bihpoly(1, 2);
        auto reverse_tv = [](const BiHPoly& X) {
            int ds = X.deg_su(), dt = X.deg_tv();
            std::vector<Rational> c;
            c.reserve(static_cast<size_t>(ds + 1) * (dt + 1));
            for (int i = 0; i <= ds; ++i)
                for (int j = 0; j <= dt; ++j) c.push_back(X.cell(i, dt - j));
            return BiHPoly(ds, dt, std::move(c));
        };
        BezoutMatrix b = bezout_tv(F, G);
        BezoutMatrix br = bezout_tv(reverse_tv(F), reverse_tv(G));
        int m = b.size;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                CHECK(br.mat.at(i, j) ==
                      b.mat.at(m - 1 - i, m - 1 - j).scaled(Rational(-1)));
    }
}

TEST_CASE("companion matrix and polynomial evaluation")
{
    QMat d = companion(U({-1, 0, 1})); // t^2 - 1
    CHECK(d.at(0, 0) == Rational(0));
    CHECK(d.at(0, 1) == Rational(1));
    CHECK(d.at(1, 0) == Rational(1));
    CHECK(d.at(1, 1) == Rational(0));

    test::Rng rng(59);
    QMat m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = rng.coeff();
    QMat id = eval_poly_at_matrix(U({0, 1}), m);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(id.at(i, j) == m.at(i, j));
}

TEST_CASE("companion resultant identity, 100 seeded trials")
{
    test::Rng rng(61);
    int done = 0;
    while (done < 100) {
        int mq = static_cast<int>(rng.pick(1, 3));
        int np = static_cast<int>(rng.pick(mq, 4));
        UPoly Q = rng.upoly(mq), P = rng.upoly(np);
        if (Q.is_zero()) continue;
        // Res(Q,P) = p0^m det(Q(Delta_{P/p0})).
        QMat delta = companion(P);
        Rational inv = Rational(1) / P.lc();
        for (int i = 0; i < delta.rows(); ++i)
            for (int j = 0; j < delta.cols(); ++j) delta.at(i, j) *= inv;
        Rational det = eval_poly_at_matrix(Q, delta).det();
        Rational pw(1);
        for (int i = 0; i < mq; ++i) pw *= P.lc();
        CHECK(pw * det == test::sylvester_resultant(Q, P));
        ++done;
    }
}

TEST_CASE("H is multiplicative, 100 seeded trials")
{
    test::Rng rng(67);
    int done = 0;
    while (done < 100) {
        int mq = static_cast<int>(rng.pick(1, 2));
        int mr = static_cast<int>(rng.pick(1, 2));
        int np = static_cast<int>(rng.pick(mq + mr, 5));
        UPoly Q = rng.upoly(mq), R = rng.upoly(mr), P = rng.upoly(np);
        QMat h1 = companion_H(Q, P), h2 = companion_H(R, P), h12 = companion_H(Q * R, P);
        QMat prod = h1 * h2;
        bool equal = true;
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j)
                equal = equal && prod.at(i, j) == h12.at(i, j);
        CHECK(equal);
        ++done;
    }
}

TEST_CASE("hybrid Bezout matrix")
{
    // Unit Q: the identity block structure.
    QMat b = hybrid_bezout(U({1}), U({2, 0, 1}));
    CHECK(b.det() == Rational(1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(b.at(i, j) == (i == j ? Rational(1) : Rational(0)));

    // Common factors force a zero determinant.
    CHECK(hybrid_bezout(U({-1, 0, 1}), U({-1, 0, 1})).det() == Rational(0));
    CHECK(hybrid_bezout(U({-1, 1}), U({-1, 0, 1})).det() == Rational(0));

    // B(Q,P) = T_m H(Q,P), and det matches the resultant up to a power of
    // the leading coefficient.
    test::Rng rng(71);
    int done = 0;
    while (done < 100) {
        int mq = static_cast<int>(rng.pick(1, 3));
        int np = static_cast<int>(rng.pick(mq, 4));
        UPoly Q = rng.upoly(mq), P = rng.upoly(np);
        QMat hb = hybrid_bezout(Q, P);
        QMat h = companion_H(Q, P);
        QMat tm(np, np);
        for (int i = 0; i < np; ++i) {
            if (i < mq)
                for (int j = i; j < mq; ++j) tm.at(i, j) = P.coeff(np - (j - i));
            else
                tm.at(i, i) = Rational(1);
        }
        QMat prod = tm * h;
        for (int i = 0; i < np; ++i)
            for (int j = 0; j < np; ++j) CHECK(prod.at(i, j) == hb.at(i, j));

        Rational res = test::sylvester_resultant(Q, P);
        Rational det = hb.det();
        if (is_zero(res))
            CHECK(is_zero(det));
        else
            CHECK(is_pm_power_of(det / res, P.lc(), np));
        ++done;
    }
}

TEST_CASE("hybrid Bezout over a polynomial coefficient ring")
{
    test::Rng rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        // Polynomials in the eliminated variable with Q[x] coefficients.
        std::vector<UPoly> Q(2), P(4);
        for (auto& c : Q) c = rng.upoly(1, 2, false);
        for (auto& c : P) c = rng.upoly(1, 2, false);
        if (Q.back().is_zero() || P.back().is_zero()) continue;
        PolyMat hb = hybrid_bezout_x(Q, P);
        UPoly det = hb.det();
        UPoly res = resultant_x(Q, P);
        if (det.is_zero()) {
            CHECK(res.is_zero());
            continue;
        }
        // det = unit * h0^l * res.
        UPoly ratio = det;
        bool divides = false;
        for (int l = 0; l <= 4 && !divides; ++l) {
            if (!res.is_zero() && ratio.divrem(res).second.is_zero()) {
                UPoly q = ratio.divide_exact(res);
                // q must be +- a power of the leading coefficient.
                UPoly pw = UPoly::constant(Rational(1));
                for (int e = 0; e <= 4 && !divides; ++e) {
                    if (q.normalized() == pw.normalized()) divides = true;
                    pw = pw * P.back();
                }
            }
            ratio = ratio * P.back();
        }
        CHECK(divides);
    }
}

TEST_CASE("invariant factors of hybrid Bezout products divide, bivariate")
{
    test::Rng rng(79);
    int done = 0;
    while (done < 12) {
        std::vector<UPoly> f(3), g(3), h(6);
        for (auto& c : f) c = rng.upoly(1, 1, false);
        for (auto& c : g) c = rng.upoly(1, 1, false);
        for (auto& c : h) c = rng.upoly(1, 1, false);
        if (f.back().is_zero() || g.back().is_zero() || h.back().is_zero()) continue;
        CheckReport rep = check_product_factor_divisibility(f, g, h, 2);
        CHECK(rep.ok);
        ++done;
    }
    // Monic h: no leading-coefficient correction needed.
    int done2 = 0;
    while (done2 < 12) {
        std::vector<UPoly> f(3), g(3), h(6);
        for (auto& c : f) c = rng.upoly(1, 1, false);
        for (auto& c : g) c = rng.upoly(1, 1, false);
        for (auto& c : h) c = rng.upoly(1, 1, false);
        h.back() = UPoly::constant(Rational(1));
        if (f.back().is_zero() || g.back().is_zero()) continue;
        CheckReport rep = check_product_factor_divisibility(f, g, h, 2);
        CHECK(rep.ok);
        ++done2;
    }
}

TEST_CASE("Cayley padding lemma")
{
    // Smallest nondegenerate case: F = t, G = v.
    BiHPoly Ft = BiHPoly::from_tv(parse_hpoly("t"));
    BiHPoly Gv = BiHPoly::from_tv(parse_hpoly("v"));
    CHECK(check_cayley_padding(Ft, Gv).ok);

    test::Rng rng(83);
    int done = 0;
    while (done < 50) {
        BiHPoly F = rng.bihpoly(1, 3), G = rng.bihpoly(1, 3);
        if (bezout_tv(F, G).mat.is_zero()) continue;
        CHECK(check_cayley_padding(F, G).ok);
        ++done;
    }
}
