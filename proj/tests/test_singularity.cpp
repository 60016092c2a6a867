#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/report.hpp"

#include <json.hpp>
#include "core/singularity.hpp"
#include "core/textio.hpp"
#include "support/oracles.hpp"

using namespace rcs;

namespace {

HPoly H(const std::string& s) { return parse_hpoly(s); }

CurveSpec cusp() { return make_curve(H("t^2*v"), H("t^3"), H("v^3")); }
CurveSpec node() { return make_curve(H("t^2*v - v^3"), H("t^3 - t*v^2"), H("v^3")); }
CurveSpec triple() // ordinary triple point, one parameter at infinity
{
    return make_curve(H("t^2*v^2 - v^4"), H("t^3*v - t*v^3"), H("t^4 + v^4"));
}
CurveSpec tacnodal() // tacnode at (0,0,1) plus a cusp at (-1,0,2)
{
    return make_curve(H("t^2*v^2 - v^4"), H("t^4 - t^2*v^2"), H("t^3*v + 2*v^4"));
}

} // namespace

TEST_CASE("F,G construction")
{
    CurveSpec c = cusp();
    MuBasis basis = compute_mubasis(c);
    FGPair fg = build_FG(c, basis);
    CHECK(fg.F.deg_tv() == 2);
    CHECK(fg.G.deg_tv() == 2);
    // Re-multiplication: (sv - tu) F == p . P(t,v).
    CHECK(BiHPoly::cayley() * fg.F == moving_line(basis.p, c));
    CHECK(BiHPoly::cayley() * fg.G == moving_line(basis.q, c));
    // The numerator vanishes on the diagonal.
    CHECK(moving_line(basis.p, c).diagonal().is_zero());
    // Swapping p and q swaps F and G.
    MuBasis swapped = basis;
    std::swap(swapped.p, swapped.q);
    FGPair fg2 = build_FG(c, swapped);
    CHECK(fg2.F == fg.G);
    CHECK(fg2.G == fg.F);
}

TEST_CASE("main Smith form of the cuspidal cubic")
{
    CurveSpec c = cusp();
    MuBasis basis = compute_mubasis(c);
    FGPair fg = build_FG(c, basis);
    MainSmith ms = main_smith(c, basis, fg);
    REQUIRE(ms.smith.factors.size() == 2);
    CHECK(ms.smith.factors[0] == H("1"));
    CHECK(ms.smith.factors[1] == H("t^2"));
    CHECK(ms.d_by_k[2] == H("t^2"));
    // Exhaustive-minor oracle on the 2x2 matrix.
    auto mins = test::minor_det_factors(ms.bezout);
    REQUIRE(mins.size() == 2);
    CHECK(mins[0] == H("1"));
    CHECK(mins[1] == H("t^2"));
}

TEST_CASE("main Smith form of the nodal cubic")
{
    CurveSpec c = node();
    MuBasis basis = compute_mubasis(c);
    MainSmith ms = main_smith(c, basis, build_FG(c, basis));
    REQUIRE(ms.smith.factors.size() == 2);
    CHECK(ms.smith.factors[0] == H("1"));
    CHECK(ms.smith.factors[1] == H("t^2 - v^2"));
    auto mins = test::minor_det_factors(ms.bezout);
    CHECK(mins[1] == H("t^2 - v^2"));
}

TEST_CASE("smooth conic has a trivial chain")
{
    CurveSpec c = make_curve(H("t^2"), H("t*v"), H("v^2"));
    MuBasis basis = compute_mubasis(c);
    MainSmith ms = main_smith(c, basis, build_FG(c, basis));
    REQUIRE(ms.smith.factors.size() == 1);
    CHECK(ms.smith.factors[0] == H("1"));
    CHECK(singular_points(c, basis, ms).empty());
}

TEST_CASE("singular points of the golden cubics")
{
    CurveSpec c = cusp();
    MuBasis basis = compute_mubasis(c);
    MainSmith ms = main_smith(c, basis, build_FG(c, basis));
    auto pts = singular_points(c, basis, ms);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].order == 2);
    CHECK(pts[0].formula == H("t^2"));
    CHECK(pts[0].has_point);
    CHECK(pts[0].point == std::array<Rational, 3>{Rational(0), Rational(0), Rational(1)});
    // Rank cross-check at the singular parameter (order = n - rank).
    CHECK(rank_at(ms.bezout, Rational(0), Rational(1)) == 1);

    CurveSpec d = node();
    MuBasis nb = compute_mubasis(d);
    MainSmith nms = main_smith(d, nb, build_FG(d, nb));
    auto npts = singular_points(d, nb, nms);
    REQUIRE(npts.size() == 1);
    CHECK(npts[0].order == 2);
    CHECK(npts[0].formula == H("t^2 - v^2"));
    CHECK(npts[0].point == std::array<Rational, 3>{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("move to origin and blow up the cusp")
{
    CurveSpec c = cusp();
    MuBasis basis = compute_mubasis(c);
    MainSmith ms = main_smith(c, basis, build_FG(c, basis));
    auto pts = singular_points(c, basis, ms);
    OriginForm of = move_to_origin(c, pts[0], 20);
    CHECK(of.h == H("t^2"));
    CHECK(of.a == H("v"));
    CHECK(of.b == H("t"));
    CHECK(of.c == H("v^3"));
    CHECK(gcd(of.a, of.h).is_constant());
    CHECK(gcd(of.h, of.c).is_constant());

    HPoly removed;
    CurveSpec blown = blow_up(of, &removed);
    CHECK(removed == H("v^2"));
    CHECK(blown.n == 2);
    // (t^2, t v, v^2): a smooth conic, so no infinitely near points.
    MuBasis bb = compute_mubasis(blown);
    MainSmith bms = main_smith(blown, bb, build_FG(blown, bb));
    CHECK(singular_points(blown, bb, bms).empty());
}

TEST_CASE("blow-up of the node is smooth")
{
    CurveSpec d = node();
    MuBasis nb = compute_mubasis(d);
    MainSmith nms = main_smith(d, nb, build_FG(d, nb));
    auto pts = singular_points(d, nb, nms);
    OriginForm of = move_to_origin(d, pts[0], 20);
    CHECK(of.h == H("t^2 - v^2"));
    CurveSpec blown = blow_up(of);
    MuBasis bb = compute_mubasis(blown);
    MainSmith bms = main_smith(blown, bb, build_FG(blown, bb));
    CHECK(singular_points(blown, bb, bms).empty());
}

TEST_CASE("full analysis of the golden curves")
{
    AnalysisReport rc = analyze(cusp());
    REQUIRE(rc.tree.size() == 1);
    CHECK(rc.tree[0].order == 2);
    CHECK(rc.tree[0].children.empty());
    CHECK(rc.budget_ok);
    CHECK(rc.budget_lhs == 2);

    AnalysisReport rn = analyze(node());
    REQUIRE(rn.tree.size() == 1);
    CHECK(rn.tree[0].order == 2);
    CHECK(rn.tree[0].children.empty());
    CHECK(rn.budget_lhs == 2);

    AnalysisReport rt = analyze(triple());
    REQUIRE(rt.tree.size() == 1);
    CHECK(rt.tree[0].order == 3);
    CHECK(rt.tree[0].formula == H("t^2*v - v^3"));
    CHECK(rt.tree[0].children.empty());
    CHECK(rt.budget_lhs == 6);
    CHECK(rt.budget_ok);
}

TEST_CASE("tacnodal quartic carries an infinitely near point")
{
    AnalysisReport r = analyze(tacnodal());
    CHECK(r.budget_lhs == 6);
    CHECK(r.budget_ok);
    REQUIRE(r.tree.size() == 2);
    // Sorted points: the cusp at (-1,0,2), then the tacnode at (0,0,1).
    const SingularityNode* tac = nullptr;
    const SingularityNode* cu = nullptr;
    for (const auto& nd : r.tree) {
        if (nd.formula == H("t^2 - v^2")) tac = &nd;
        if (nd.formula == H("t^2")) cu = &nd;
    }
    REQUIRE(tac != nullptr);
    REQUIRE(cu != nullptr);
    CHECK(cu->children.empty());
    CHECK(tac->order == 2);
    REQUIRE(tac->children.size() == 1);
    CHECK(tac->children[0].level == 1);
    CHECK(tac->children[0].order == 2);
    CHECK(tac->children[0].formula.degree() == 2);
    // d_2 restricted to the tacnode is h * psi.
    HPoly d2_tac = restrict_to(r.ms.d_by_k[2], {H("t - v"), H("t + v")});
    CHECK(d2_tac == (tac->formula * tac->children[0].formula).normalized());
}

TEST_CASE("verification suites pass on every golden curve")
{
    for (const CurveSpec& c : {cusp(), node(), triple(), tacnodal()}) {
        AnalysisReport r = analyze(c);
        run_all_verifications(r);
        for (const auto& v : r.verifications) {
            INFO(v.name << ": " << v.detail);
            CHECK(v.ok);
        }
    }
}

TEST_CASE("syzygy invariance rejects dependent pairs")
{
    CurveSpec c = node();
    MuBasis basis = compute_mubasis(c);
    MainSmith ms = main_smith(c, basis, build_FG(c, basis));
    auto pts = singular_points(c, basis, ms);
    CheckReport rep = syzygy_invariance_for(c, basis, basis.p, basis.p, pts);
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.notes.empty());
    CHECK(rep.notes.front().find("precondition") != std::string::npos);
}

TEST_CASE("syzygy invariance under unimodular recombination")
{
    test::Rng rng(131);
    CurveSpec c = tacnodal();
    MuBasis basis = compute_mubasis(c);
    MainSmith ms = main_smith(c, basis, build_FG(c, basis));
    auto pts = singular_points(c, basis, ms);
    for (int trial = 0; trial < 5; ++trial) {
        // Triangular recombination with constant units on the diagonal.
        HPoly gamma = rng.hpoly(c.n - 2 * basis.mu, 2);
        Syzygy p2 = basis.p;
        Syzygy q2{basis.q.A + gamma * basis.p.A, basis.q.B + gamma * basis.p.B,
                  basis.q.C + gamma * basis.p.C};
        CheckReport rep = syzygy_invariance_for(c, basis, p2, q2, pts);
        INFO((rep.notes.empty() ? std::string() : rep.notes.front()));
        CHECK(rep.ok);
    }
}

TEST_CASE("implicit multiplicity check")
{
    CurveSpec c = cusp();
    AnalysisReport r = analyze(c);
    CHECK(implicit_multiplicity_check(r.implicit_f,
                                      {Rational(0), Rational(0), Rational(1)}, 2)
              .ok);
    // A smooth point has multiplicity 1, not 2.
    CHECK_FALSE(implicit_multiplicity_check(r.implicit_f,
                                            {Rational(1), Rational(1), Rational(1)}, 2)
                    .ok);
}

TEST_CASE("reparametrization equivariance")
{
    // A unimodular parameter change maps every reported formula by the
    // same substitution and keeps all orders.
    CurveSpec c = tacnodal();
    AnalysisReport r1 = analyze(c);
    // (t,v) -> (t + v, v): substitute t -> t + v.
    auto sub = [](const HPoly& f) {
        return f.substitute_linear(Rational(1), Rational(1), Rational(0), Rational(1));
    };
    CurveSpec c2 = make_curve(sub(c.a), sub(c.b), sub(c.c));
    AnalysisReport r2 = analyze(c2);
    REQUIRE(r1.tree.size() == r2.tree.size());
    // Inverse substitution on reported formulas: t -> t - v.
    auto unsub = [](const HPoly& f) {
        return f.substitute_linear(Rational(1), Rational(-1), Rational(0), Rational(1))
            .normalized();
    };
    for (size_t i = 0; i < r1.tree.size(); ++i) {
        bool matched = false;
        for (size_t j = 0; j < r2.tree.size(); ++j) {
            if (unsub(r2.tree[j].formula) == r1.tree[i].formula.normalized()) {
                matched = true;
                CHECK(r2.tree[j].order == r1.tree[i].order);
                CHECK(r2.tree[j].children.size() == r1.tree[i].children.size());
            }
        }
        CHECK(matched);
    }
    for (size_t k = 2; k < r1.ms.d_by_k.size(); ++k)
        CHECK(unsub(r2.ms.d_by_k[k]) == r1.ms.d_by_k[k].normalized());
}

TEST_CASE("isolating intervals in reports")
{
    AnalysisOptions opts;
    opts.isolate_roots = true;
    AnalysisReport r = analyze(node(), opts);
    REQUIRE(r.tree.size() == 1);
    REQUIRE(r.tree[0].intervals.size() == 2); // t = -1 and t = 1
    CHECK_FALSE(r.tree[0].parameter_at_infinity);

    AnalysisReport rt = analyze(triple(), opts);
    REQUIRE(rt.tree.size() == 1);
    CHECK(rt.tree[0].intervals.size() == 2); // t = 0, +-1 minus... t=0,1,-1 distinct
    CHECK(rt.tree[0].parameter_at_infinity);
}

TEST_CASE("JSON report round trip is byte identical")
{
    AnalysisReport r = analyze(tacnodal());
    run_all_verifications(r);
    std::string j = report_to_json(r);
    auto parsed = nlohmann::ordered_json::parse(j);
    CHECK(parsed.dump(2) + "\n" == j);
}
