#include "core/singularity.hpp"

#include <algorithm>
#include <functional>

namespace rcs {

namespace {

std::vector<HPoly> distinct_irreducibles(const HPoly& f)
{
    std::vector<HPoly> out;
    if (f.is_constant()) return out;
    for (const HFactor& hf : factor_rational(f)) out.push_back(hf.factor);
    return out;
}

std::vector<HPoly> restrict_chain(const std::vector<HPoly>& factors,
                                  const std::vector<HPoly>& irrs)
{
    std::vector<HPoly> out;
    for (const HPoly& f : factors)
        out.push_back(f.is_zero() ? HPoly() : restrict_to(f, irrs));
    return out;
}

// alt = alpha * p + beta * q; recovered through the cross product identity
// alt x q = alpha (p x q) = alpha k P.
HPoly syzygy_coordinate(const CurveSpec& curve, const MuBasis& basis, const Syzygy& numer)
{
    const HPoly* comps[3] = {&curve.a, &curve.b, &curve.c};
    const HPoly* ss[3] = {&numer.A, &numer.B, &numer.C};
    for (int i = 0; i < 3; ++i) {
        if (comps[i]->is_zero()) continue;
        if (ss[i]->is_zero()) return HPoly();
        return ss[i]->divide_exact(comps[i]->scaled(basis.k));
    }
    throw MathError("curve with all zero components");
}

std::vector<const SingularityNode*> level0_nodes(const AnalysisReport& rep)
{
    std::vector<const SingularityNode*> out;
    for (const auto& n : rep.tree) out.push_back(&n);
    return out;
}

// Rational parameter roots of the linear factors of a formula, as (t0,v0).
std::vector<std::array<Rational, 2>> rational_parameters(const HPoly& formula)
{
    std::vector<std::array<Rational, 2>> out;
    for (const HFactor& hf : factor_rational(formula)) {
        if (hf.factor.degree() != 1) continue;
        out.push_back({-hf.factor.coeff(0), hf.factor.coeff(1)});
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------

CheckReport h_block_check(const OriginForm& origin)
{
    CheckReport rep;
    int n = origin.curve.n, r = origin.order;
    if (r > n - 1) {
        rep.fail("order exceeds n-1; no h-block statement applies");
        return rep;
    }
    for (int lam = 0; lam <= 2 * n + 2; ++lam) {
        Rational l(lam);
        // Reparametrize (t,v) -> (t, l t + v) to expose a nonzero leading
        // (t,v)-coefficient of L.
        HPoly a = origin.a.substitute_linear(Rational(1), Rational(0), l, Rational(1));
        HPoly b = origin.b.substitute_linear(Rational(1), Rational(0), l, Rational(1));
        HPoly c = origin.c.substitute_linear(Rational(1), Rational(0), l, Rational(1));
        HPoly h = origin.h.substitute_linear(Rational(1), Rational(0), l, Rational(1)).normalized();
        CurveSpec curve;
        try {
            curve = make_curve(a * h, b * h, c);
        } catch (const MathError&) {
            continue;
        }
        Syzygy lsyz{c, HPoly(), -(a * h)};
        BiHPoly lbi = moving_line(lsyz, curve).divide_by_cayley();
        if (lbi.tv_coeff(n - 1).is_zero()) continue;

        HPolyMat bh = hybrid_bezout_tv(BiHPoly::from_tv(h), lbi);
        SmithFormH s = snf_homogeneous(bh);
        std::vector<HPoly> irrs = distinct_irreducibles(h);
        std::vector<HPoly> restr = restrict_chain(s.factors, irrs);
        if (static_cast<int>(restr.size()) != n - 1) {
            rep.fail("h-block matrix has unexpected size");
            return rep;
        }
        int total = 0;
        for (int i = 0; i < n - 1; ++i) {
            if (restr[i].is_zero()) {
                rep.fail("h-block Smith form has a zero factor");
                return rep;
            }
            total += restr[i].degree();
            if (i < n - r) {
                if (!restr[i].is_constant())
                    rep.fail("restricted factor " + std::to_string(i + 1) +
                             " should be a unit, is " + restr[i].to_string("s", "u"));
            } else if (restr[i] != h) {
                rep.fail("restricted factor " + std::to_string(i + 1) + " is " +
                         restr[i].to_string("s", "u") + ", expected the inversion formula");
            }
        }
        if (total != r * (r - 1))
            rep.fail("restricted degree total " + std::to_string(total) + " != r(r-1) = " +
                     std::to_string(r * (r - 1)));
        if (rep.ok)
            rep.note("S^Q(B(h,L)) = diag(1 x " + std::to_string(n - r) + ", h x " +
                     std::to_string(r - 1) + "), degree total r(r-1) = " +
                     std::to_string(r * (r - 1)) +
                     (lam > 0 ? " (after parameter shear " + std::to_string(lam) + ")" : ""));
        return rep;
    }
    rep.fail("no parameter shear exposed a nonzero leading coefficient for L");
    return rep;
}

CheckReport syzygy_invariance_for(const CurveSpec& curve, const MuBasis& basis,
                                  const Syzygy& alt_p, const Syzygy& alt_q,
                                  const std::vector<SingularPoint>& points)
{
    CheckReport rep;
    if (!alt_p.dot(curve.a, curve.b, curve.c).is_zero() ||
        !alt_q.dot(curve.a, curve.b, curve.c).is_zero())
        throw MathError("alternative pair is not made of syzygies");

    HPoly alpha = syzygy_coordinate(curve, basis, cross(alt_p, basis.q));
    HPoly beta = syzygy_coordinate(curve, basis, cross(basis.p, alt_p));
    HPoly gamma = syzygy_coordinate(curve, basis, cross(alt_q, basis.q));
    HPoly delta = syzygy_coordinate(curve, basis, cross(basis.p, alt_q));
    HPoly det = alpha * delta - beta * gamma;
    if (det.is_zero()) {
        rep.fail("precondition: alternative pair is linearly dependent");
        return rep;
    }

    BiHPoly ft = moving_line(alt_p, curve).divide_by_cayley();
    BiHPoly gt = moving_line(alt_q, curve).divide_by_cayley();
    SmithFormH alt_s = snf_homogeneous(bezout_tv(ft, gt).mat);
    FGPair fg = build_FG(curve, basis);
    SmithFormH main_s = snf_homogeneous(bezout_tv(fg.F, fg.G).mat);

    for (const SingularPoint& pt : points) {
        if (!gcd(det, pt.formula).is_constant()) {
            rep.fail("precondition: alternative pair dependent at parameters of " +
                     pt.formula.to_string());
            continue;
        }
        std::vector<HPoly> irrs = distinct_irreducibles(pt.formula);
        std::vector<HPoly> r1 = restrict_chain(main_s.factors, irrs);
        std::vector<HPoly> r2 = restrict_chain(alt_s.factors, irrs);
        if (r1 != r2)
            rep.fail("restricted Smith forms differ at " + pt.formula.to_string());
    }
    if (rep.ok) rep.note("restricted Smith forms agree for every singular point");
    return rep;
}

CheckReport syzygy_invariance_check(const CurveSpec& curve, const MuBasis& basis,
                                    const AnalysisOptions& opts)
{
    CheckReport rep;
    FGPair fg = build_FG(curve, basis);
    MainSmith ms = main_smith(curve, basis, fg);
    std::vector<SingularPoint> pts = singular_points(curve, basis, ms);
    bool any = false;
    for (const SingularPoint& pt : pts) {
        if (!pt.has_point) {
            rep.note("skipped an irrational class (no rational move available)");
            continue;
        }
        any = true;
        OriginForm origin;
        try {
            origin = move_to_origin(curve, pt, opts.coord_bound);
        } catch (const IncompleteError& e) {
            rep.fail(e.what());
            continue;
        }
        // On the moved curve: M = (-b, a, 0), L = (c, 0, -a h).
        MuBasis basis2 = compute_mubasis(origin.curve);
        Syzygy m{-origin.b, origin.a, HPoly()};
        Syzygy lsyz{origin.c, HPoly(), -(origin.a * origin.h)};
        SingularPoint moved = pt;
        moved.formula = origin.h;
        moved.irreducibles = distinct_irreducibles(origin.h);
        CheckReport sub = syzygy_invariance_for(origin.curve, basis2, m, lsyz, {moved});
        if (!sub.ok) {
            rep.ok = false;
            for (const auto& s : sub.notes) rep.notes.push_back(s);
        }
    }
    if (rep.ok)
        rep.note(any ? "S^Q(B(F,G)) = S^Q(B(M,L)) at every rational singular point"
                     : "no rational singular points to check");
    return rep;
}

// ---------------------------------------------------------------------

namespace {

// Chart of a bihomogeneous polynomial as x-power coefficient rows over y.
std::vector<UPoly> chart_rows(const BiHPoly& f, bool s_finite, bool t_finite)
{
    int ds = f.deg_su();
    std::vector<UPoly> rows(ds + 1);
    for (int i = 0; i <= ds; ++i) {
        HPoly row = f.su_coeff(s_finite ? i : ds - i);
        if (row.is_zero()) continue;
        rows[i] = t_finite ? row.chart_x() : row.chart_y();
    }
    return rows;
}

// Ideal membership in (mx(x), my(y)) for squarefree moduli.
bool reduces_to_zero(std::vector<UPoly> rows, const UPoly& mx, const UPoly& my)
{
    if (mx.degree() == 0 || my.degree() == 0) return true; // empty chart
    int dm = mx.degree();
    for (int i = static_cast<int>(rows.size()) - 1; i >= dm; --i) {
        if (rows[i].is_zero()) continue;
        UPoly f = rows[i].scaled(Rational(1) / mx.coeff(dm));
        for (int k = 0; k <= dm; ++k)
            rows[i - dm + k] = rows[i - dm + k] - f.scaled(mx.coeff(k));
    }
    for (int i = 0; i < dm && i < static_cast<int>(rows.size()); ++i)
        if (!rows[i].divrem(my).second.is_zero()) return false;
    return true;
}

// f vanishes at every pair (root of phi1; root of phi2), in all four
// chart combinations.
bool vanishes_on_factor_pairs(const BiHPoly& f, const HPoly& phi1, const HPoly& phi2)
{
    for (bool sf : {true, false})
        for (bool tf : {true, false}) {
            UPoly mx = sf ? phi1.chart_x() : phi1.chart_y();
            UPoly my = tf ? phi2.chart_x() : phi2.chart_y();
            if (!reduces_to_zero(chart_rows(f, sf, tf), mx, my)) return false;
        }
    return true;
}

} // namespace

CheckReport symmetry_check(const CurveSpec& curve, const FGPair& fg,
                           const std::vector<SingularPoint>& points)
{
    (void)curve;
    CheckReport rep;
    if (points.empty()) {
        HPoly det = bezout_tv(fg.F, fg.G).mat.det();
        if (det.is_zero() || !det.is_constant())
            rep.fail("no singular points reported, but Res(F,G) is not a nonzero constant");
        else
            rep.note("Res(F,G) is a nonzero constant: no singular parameter pairs");
        return rep;
    }
    BiHPoly cay = BiHPoly::cayley();
    for (const SingularPoint& pt : points) {
        auto factors = factor_rational(pt.formula);
        for (const auto& [phi1, m1] : factors)
            for (const auto& [phi2, m2] : factors) {
                if (phi1 != phi2) {
                    // Distinct factors: every ordered root pair is a common
                    // root of F and G.
                    if (!vanishes_on_factor_pairs(fg.F, phi1, phi2) ||
                        !vanishes_on_factor_pairs(fg.G, phi1, phi2))
                        rep.fail("F,G do not vanish on the pairs (" + phi1.to_string() +
                                 "; " + phi2.to_string() + ")");
                } else {
                    // Same factor: off-diagonal pairs, tested after killing
                    // the diagonal with the Cayley factor.
                    if (phi1.degree() >= 2 &&
                        (!vanishes_on_factor_pairs(cay * fg.F, phi1, phi1) ||
                         !vanishes_on_factor_pairs(cay * fg.G, phi1, phi1)))
                        rep.fail("F,G do not vanish on the off-diagonal pairs of " +
                                 phi1.to_string());
                    // Diagonal pairs carry a common root exactly when the
                    // parameter has multiplicity >= 2.
                    if (m1 >= 2 && (!phi1.divides(fg.F.diagonal()) ||
                                    !phi1.divides(fg.G.diagonal())))
                        rep.fail("F,G do not vanish on the diagonal of the repeated "
                                 "parameter " +
                                 phi1.to_string());
                }
            }
        // Rational distinct pairs, both orderings, by direct evaluation.
        auto params = rational_parameters(squarefree_part(pt.formula));
        for (const auto& s0 : params)
            for (const auto& t0 : params) {
                if (s0 == t0) continue;
                if (!is_zero(fg.F.eval_su(s0[0], s0[1]).eval(t0[0], t0[1])) ||
                    !is_zero(fg.G.eval_su(s0[0], s0[1]).eval(t0[0], t0[1])))
                    rep.fail("evaluation at a rational parameter pair is nonzero");
            }
    }
    if (rep.ok)
        rep.note("F and G vanish at every ordered pair of distinct parameters and at "
                 "every repeated-parameter diagonal");
    return rep;
}

CheckReport budget_check(const AnalysisReport& report)
{
    CheckReport rep;
    if (report.budget_lhs != report.budget_rhs)
        rep.fail("sum (k-1) deg d_k = " + std::to_string(report.budget_lhs) +
                 " differs from (n-1)(n-2) = " + std::to_string(report.budget_rhs));
    // The tree must carry the same weighted degree total.
    long tree_sum = 0;
    std::function<void(const SingularityNode&)> walk = [&](const SingularityNode& n) {
        tree_sum += static_cast<long>(n.order - 1) * n.formula.degree();
        for (const auto& c : n.children) walk(c);
    };
    for (const auto& n : report.tree) walk(n);
    if (tree_sum != report.budget_lhs)
        rep.fail("tree-weighted degree total " + std::to_string(tree_sum) +
                 " differs from the d-chain total " + std::to_string(report.budget_lhs));
    if (rep.ok)
        rep.note("sum_k (k-1) deg d_k = (n-1)(n-2) = " + std::to_string(report.budget_rhs) +
                 ", matched by the tree");
    return rep;
}

CheckReport implicit_multiplicity_check(const TriPoly& f,
                                        const std::array<Rational, 3>& point, int r)
{
    CheckReport rep;
    std::vector<TriPoly> current{f};
    for (int order = 0; order <= r; ++order) {
        bool all_zero = true;
        for (const TriPoly& d : current)
            if (!is_zero(d.eval(point[0], point[1], point[2]))) all_zero = false;
        if (order < r && !all_zero) {
            rep.fail("an order-" + std::to_string(order) + " partial does not vanish");
            return rep;
        }
        if (order == r) {
            if (all_zero)
                rep.fail("all order-" + std::to_string(r) +
                         " partials vanish: multiplicity exceeds the reported order");
            break;
        }
        std::vector<TriPoly> next;
        for (const TriPoly& d : current)
            for (int var = 0; var < 3; ++var) next.push_back(d.derivative(var));
        current = std::move(next);
    }
    if (rep.ok)
        rep.note("multiplicity at the point is exactly " + std::to_string(r));
    return rep;
}

// ---------------------------------------------------------------------

CheckReport compare_four_matrices(const CurveSpec& curve, const MuBasis& basis,
                                  const MainSmith& ms)
{
    CheckReport rep;
    int n = curve.n, mu = basis.mu;
    BiHPoly pP = moving_line(basis.p, curve);
    BiHPoly qP = moving_line(basis.q, curve);

    // Form 2: Bezout in (t,v); the padded main matrix.
    SmithFormH s2 = snf_homogeneous(bezout_tv(pP, qP).mat);
    for (int i = 0; i < n - 1; ++i)
        if (s2.factors[i] != ms.smith.factors[i])
            rep.fail("form 2 does not pad the main Smith form at position " +
                     std::to_string(i + 1));
    if (!s2.factors[n - 1].is_zero()) rep.fail("form 2 lacks the trailing zero factor");

    // Form 1: the Hybrid Bezout matrix in (s,u); agreement is recorded only.
    bool form1_agrees = true;
    std::string form1_note;
    try {
        SmithFormH s1 = snf_homogeneous(hybrid_bezout_su(pP, qP));
        if (static_cast<int>(s1.factors.size()) != n - mu) {
            form1_agrees = false;
            form1_note = "unexpected form-1 size";
        } else {
            if (!s1.factors[n - mu - 1].is_zero()) form1_agrees = false;
            HPoly prev = HPoly::constant(Rational(1));
            for (int i = 0; i + 1 < n - mu && form1_agrees; ++i) {
                HPoly d = s1.factors[i].divide_exact(prev).normalized();
                prev = s1.factors[i];
                int k = n - mu - i;
                if (d != ms.d_by_k[k]) form1_agrees = false;
            }
        }
    } catch (const MathError& e) {
        form1_agrees = false;
        form1_note = e.what();
    }
    rep.note(std::string("form 1 (Hybrid) vs form 2: ") +
             (form1_agrees ? "Smith forms agree" : "DISAGREEMENT observed") +
             (form1_note.empty() ? "" : " (" + form1_note + ")"));

    // Forms 3 and 4: the obvious syzygies (c,0,-a), (0,c,-b).
    Syzygy l1{curve.c, HPoly(), -curve.a};
    Syzygy l2{HPoly(), curve.c, -curve.b};
    BiHPoly l1P = moving_line(l1, curve);
    BiHPoly l2P = moving_line(l2, curve);
    BezoutMatrix b3 = bezout_su(l1P, l2P);
    BezoutMatrix b4 = bezout_tv(l1P, l2P);
    bool same = true, negated = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (b3.mat.at(i, j) != b4.mat.at(i, j)) same = false;
            if (b3.mat.at(i, j) != b4.mat.at(i, j).scaled(Rational(-1))) negated = false;
        }
    if (!same && !negated)
        rep.fail("forms 3 and 4 do not agree up to sign");
    else
        rep.note(std::string("forms 3 and 4 agree ") + (same ? "exactly" : "up to sign"));

    // Form 4 = c(s,u) times the form-2 pattern.
    SmithFormH s4 = snf_homogeneous(b4.mat);
    HPoly cnorm = curve.c.normalized();
    for (int i = 0; i < n; ++i) {
        if (s4.factors[i].is_zero()) {
            if (i != n - 1) rep.fail("form 4 has an unexpected zero factor");
            continue;
        }
        HPoly reduced;
        try {
            reduced = s4.factors[i].divide_exact(cnorm).normalized();
        } catch (const MathError&) {
            rep.fail("form 4 factor " + std::to_string(i + 1) +
                     " is not divisible by c(s,u)");
            continue;
        }
        if (reduced != s2.factors[i].normalized())
            rep.fail("form 4 factor " + std::to_string(i + 1) +
                     " does not reduce to the form 2 factor after removing c");
    }
    if (rep.ok) rep.note("forms 2 vs 3/4 agree after removing the factor c(s,u)");
    return rep;
}

CheckReport appendix_checks(const CurveSpec& curve, const MuBasis& basis,
                            const AnalysisReport& report)
{
    CheckReport rep;
    int n = curve.n;
    BiHPoly pP = moving_line(basis.p, curve);
    BiHPoly qP = moving_line(basis.q, curve);
    HPolyMat bn = bezout_tv(pP, qP).mat;
    DetFactorsH dets = det_factors(bn);

    bool any_children = false;
    for (const auto& node : report.tree)
        if (!node.children.empty()) any_children = true;

    for (const auto& node : report.tree) {
        if (node.level != 0) continue;
        int r = node.order;
        // A.4: h | D_{n-r+1}.
        if (n - r < static_cast<int>(dets.D.size())) {
            if (!node.formula.divides(dets.D[n - r]))
                rep.fail("inversion formula does not divide D_{n-r+1}");
        } else {
            rep.fail("determinant factor D_{n-r+1} unavailable");
        }
        for (const auto& par : rational_parameters(node.formula)) {
            const Rational &t0 = par[0], &v0 = par[1];
            // A.2: gcd of the forms evaluated at the parameter.
            std::array<Rational, 3> pv{basis.p.A.eval(t0, v0), basis.p.B.eval(t0, v0),
                                       basis.p.C.eval(t0, v0)};
            std::array<Rational, 3> qv{basis.q.A.eval(t0, v0), basis.q.B.eval(t0, v0),
                                       basis.q.C.eval(t0, v0)};
            auto dotc = [&](const std::array<Rational, 3>& w) {
                HPoly out;
                const HPoly* comps[3] = {&curve.a, &curve.b, &curve.c};
                for (int i = 0; i < 3; ++i) {
                    if (is_zero(w[i])) continue;
                    HPoly term = comps[i]->scaled(w[i]);
                    out = out.is_zero() ? term : out + term;
                }
                return out;
            };
            HPoly g = gcd(dotc(pv), dotc(qv)).normalized();
            if (g != node.formula.normalized())
                rep.fail("evaluated gcd inversion formula differs at a rational parameter");
            // A.3: rank deficiency of the padded and main matrices.
            if (rank_at(bn, t0, v0) != n - r)
                rep.fail("rank(B(p.P, q.P)) at a singular parameter is not n-r");
            if (rank_at(report.ms.bezout, t0, v0) != n - r)
                rep.fail("rank(B(F,G)) at a singular parameter is not n-r");
        }
    }

    // A.1: with no infinitely near singularities the padded Smith form is
    // the plain cascade of the level-0 inversion formulas.
    if (!any_children) {
        SmithFormH sn = snf_homogeneous(bn);
        std::vector<HPoly> expected(n, HPoly::constant(Rational(1)));
        int nm = n - basis.mu;
        std::vector<HPoly> h_of_order(nm + 1, HPoly::constant(Rational(1)));
        for (const auto& node : report.tree)
            if (node.order <= nm)
                h_of_order[node.order] = (h_of_order[node.order] * node.formula).normalized();
        HPoly running = HPoly::constant(Rational(1));
        for (int i = basis.mu; i < n - 1; ++i) {
            int k = nm - (i - basis.mu);
            running = (running * h_of_order[k]).normalized();
            expected[i] = running;
        }
        expected[n - 1] = HPoly();
        bool okshape = true;
        for (int i = 0; i < n; ++i)
            if (sn.factors[i] != expected[i]) okshape = false;
        if (!okshape) rep.fail("no-infinitely-near Smith form shape violated");
    }
    if (rep.ok) rep.note("appendix identities hold at all rational singular parameters");
    return rep;
}

CheckReport blowup_consistency_check(const AnalysisReport& report)
{
    CheckReport rep;
    // Order monotonicity along every blow-up edge (fallback markers under
    // an unattributed class are not single points, so they are skipped).
    std::function<void(const SingularityNode&)> mono = [&](const SingularityNode& n) {
        if (!n.attributed_by_blowup) return;
        for (const auto& c : n.children) {
            if (c.attributed_by_blowup && c.order > n.order)
                rep.fail("child order exceeds parent order");
            mono(c);
        }
    };
    for (const auto& n : report.tree) mono(n);

    // d-chain conservation per attributed point: d_k restricted to the
    // point equals its own h (at k = r) times the order-k descendants.
    for (const auto& node : report.tree) {
        if (!node.has_point || !node.attributed_by_blowup) continue;
        std::vector<HPoly> irrs = distinct_irreducibles(node.formula);
        int kmax = static_cast<int>(report.ms.d_by_k.size()) - 1;
        for (int k = 2; k <= kmax; ++k) {
            HPoly actual = restrict_to(report.ms.d_by_k[k], irrs);
            HPoly expected = HPoly::constant(Rational(1));
            if (k == node.order) expected = node.formula.normalized();
            std::function<void(const SingularityNode&)> collect =
                [&](const SingularityNode& m) {
                    for (const auto& c : m.children) {
                        if (c.order == k)
                            expected = (expected * c.formula).normalized();
                        collect(c);
                    }
                };
            collect(node);
            if (actual != expected.normalized())
                rep.fail("d_" + std::to_string(k) + " restricted to a point is " +
                         actual.to_string("s", "u") + ", expected " +
                         expected.to_string("s", "u"));
        }
    }
    if (rep.ok) rep.note("d-chain conservation holds across all blow-up levels");
    return rep;
}

std::vector<Verification> run_all_verifications(AnalysisReport& report,
                                                const AnalysisOptions& opts)
{
    std::vector<Verification> out;
    auto add = [&](const std::string& name, const CheckReport& r) {
        std::string detail;
        for (const auto& s : r.notes) {
            if (!detail.empty()) detail += "; ";
            detail += s;
        }
        out.push_back({name, r.ok, detail});
    };

    // Factor identity: product of invariant factors = det(B(F,G)) up to unit.
    {
        CheckReport r;
        HPoly prod = HPoly::constant(Rational(1));
        for (const HPoly& f : report.ms.smith.factors) prod = prod * f;
        HPoly det = report.ms.bezout.det();
        if (det.is_zero() || prod.normalized() != det.normalized())
            r.fail("product of invariant factors differs from det(B(F,G))");
        else
            r.note("product of invariant factors = Res(F,G) up to a unit");
        add("factor-identity", r);
    }
    add("budget", budget_check(report));
    add("blowup-consistency", blowup_consistency_check(report));

    {
        std::vector<SingularPoint> pts =
            singular_points(report.curve, report.basis, report.ms);
        add("symmetry", symmetry_check(report.curve, report.fg, pts));
        add("syzygy-invariance",
            syzygy_invariance_check(report.curve, report.basis, opts));

        CheckReport hb;
        CheckReport impl;
        bool any_rational = false;
        for (const SingularPoint& pt : pts) {
            if (!pt.has_point) continue;
            any_rational = true;
            OriginForm origin;
            try {
                origin = move_to_origin(report.curve, pt, opts.coord_bound);
            } catch (const IncompleteError& e) {
                hb.ok = false;
                hb.notes.push_back(e.what());
                continue;
            }
            CheckReport one = h_block_check(origin);
            if (!one.ok) {
                hb.ok = false;
                for (const auto& s : one.notes) hb.notes.push_back(s);
            }
            CheckReport m = implicit_multiplicity_check(report.implicit_f, pt.point, pt.order);
            if (!m.ok) {
                impl.ok = false;
                for (const auto& s : m.notes) impl.notes.push_back(s);
            }
        }
        if (hb.ok) hb.note(any_rational ? "h-block shape holds at every rational point"
                                        : "no rational singular points");
        if (impl.ok) impl.note(any_rational ? "implicit multiplicities match reported orders"
                                            : "no rational singular points");
        add("h-block", hb);
        add("implicit-multiplicity", impl);
    }
    add("appendix", appendix_checks(report.curve, report.basis, report));
    add("four-matrices", compare_four_matrices(report.curve, report.basis, report.ms));

    report.verifications = out;
    return out;
}

} // namespace rcs
