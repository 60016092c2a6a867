#include "core/singularity.hpp"

#include <algorithm>
#include <map>

namespace rcs {

BiHPoly moving_line(const Syzygy& s, const CurveSpec& curve)
{
    const HPoly* comps[3] = {&curve.a, &curve.b, &curve.c};
    const HPoly* ss[3] = {&s.A, &s.B, &s.C};
    BiHPoly out;
    for (int i = 0; i < 3; ++i) {
        if (ss[i]->is_zero()) continue;
        BiHPoly term = BiHPoly::from_su(*ss[i]) * BiHPoly::from_tv(*comps[i]);
        out = out.is_zero() ? term : out + term;
    }
    return out;
}

FGPair build_FG(const CurveSpec& curve, const MuBasis& basis)
{
    BiHPoly pp = moving_line(basis.p, curve);
    BiHPoly qq = moving_line(basis.q, curve);
    FGPair fg;
    try {
        fg.F = pp.divide_by_cayley();
        fg.G = qq.divide_by_cayley();
    } catch (const MathError& e) {
        throw MathError(std::string("invalid syzygy while building F,G: ") + e.what());
    }
    return fg;
}

MainSmith main_smith(const CurveSpec& curve, const MuBasis& basis, const FGPair& fg)
{
    int n = curve.n, mu = basis.mu;
    if (fg.F.deg_tv() != n - 1 || fg.G.deg_tv() != n - 1)
        throw MathError("F,G must have (t,v)-degree n-1");
    MainSmith out;
    out.bezout = bezout_tv(fg.F, fg.G).mat;
    out.smith = snf_homogeneous(out.bezout);
    const auto& f = out.smith.factors;
    if (static_cast<int>(f.size()) != n - 1)
        throw MathError("unexpected Smith form size");
    for (const HPoly& e : f)
        if (e.is_zero())
            throw MathError("structural failure: B(F,G) is singular");
    for (int i = 0; i < mu; ++i)
        if (!f[i].is_constant())
            throw MathError("structural failure: expected " + std::to_string(mu) +
                            " unit invariant factors, position " + std::to_string(i + 1) +
                            " is " + f[i].to_string("s", "u"));
    out.d_by_k.assign(n - mu + 1, HPoly::constant(Rational(1)));
    HPoly prev = HPoly::constant(Rational(1));
    for (int i = mu; i < n - 1; ++i) {
        HPoly d;
        try {
            d = f[i].divide_exact(prev).normalized();
        } catch (const MathError&) {
            throw MathError("structural failure: invariant factor cascade broken at position " +
                            std::to_string(i + 1));
        }
        out.d_by_k[n - mu - (i - mu)] = d;
        prev = f[i];
    }
    return out;
}

// ---------------------------------------------------------------------

namespace {

UPoly inverse_mod(const UPoly& a, const UPoly& m)
{
    UPoly r0 = m, r1 = a.divrem(m).second;
    UPoly t0, t1 = UPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        UPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw MathError("element not invertible in the quotient ring");
    return t0.scaled(Rational(1) / r0.coeff(0));
}

std::array<Rational, 3> normalize_point(std::array<Rational, 3> p)
{
    std::vector<Rational> v(p.begin(), p.end());
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
    if (all_zero) throw MathError("point (0,0,0) is not projective");
    Rational c = coeff_content(v);
    for (int i = 2; i >= 0; --i)
        if (!is_zero(p[i])) {
            if (sign(p[i]) < 0) c = -c;
            break;
        }
    for (auto& q : p) q /= c;
    return p;
}

// Rational coordinates of the (single) point carried by an irreducible
// parameter factor, when they exist.
std::optional<std::array<Rational, 3>> point_of_class(const CurveSpec& curve, const HPoly& phi)
{
    if (phi.degree() == 1) {
        // c1 x + c0 y vanishes at (x:y) = (-c0 : c1).
        Rational t0 = -phi.coeff(0), v0 = phi.coeff(1);
        return normalize_point({curve.a.eval(t0, v0), curve.b.eval(t0, v0),
                                curve.c.eval(t0, v0)});
    }
    // Irreducible of degree >= 2: no root at (1:0), work in Q[x]/(phi).
    // A factorization residual of degree >= 5 may actually be reducible;
    // a failed inversion then simply means no single rational point.
    UPoly m = phi.chart_x();
    UPoly va = curve.a.chart_x().divrem(m).second;
    UPoly vb = curve.b.chart_x().divrem(m).second;
    UPoly vc = curve.c.chart_x().divrem(m).second;
    const UPoly* comps[3] = {&va, &vb, &vc};
    int den = -1;
    for (int i = 0; i < 3; ++i)
        if (!comps[i]->is_zero()) { den = i; break; }
    if (den < 0) throw MathError("curve vanishes identically on a parameter class");
    std::array<Rational, 3> pt{};
    try {
        UPoly inv = inverse_mod(*comps[den], m);
        for (int i = 0; i < 3; ++i) {
            UPoly ratio = (*comps[i] * inv).divrem(m).second;
            if (ratio.degree() > 0) return std::nullopt; // genuinely irrational point
            pt[i] = ratio.coeff(0);
        }
    } catch (const MathError&) {
        return std::nullopt;
    }
    return normalize_point(pt);
}

HPoly dot_point(const Syzygy& s, const std::array<Rational, 3>& q)
{
    HPoly out;
    const HPoly* comps[3] = {&s.A, &s.B, &s.C};
    for (int i = 0; i < 3; ++i) {
        if (comps[i]->is_zero() || is_zero(q[i])) continue;
        HPoly term = comps[i]->scaled(q[i]);
        out = out.is_zero() ? term : out + term;
    }
    return out;
}

std::vector<HPoly> distinct_irreducibles(const HPoly& f)
{
    std::vector<HPoly> out;
    for (const HFactor& hf : factor_rational(f)) out.push_back(hf.factor);
    return out;
}

int trailing_divisible(const std::vector<HPoly>& factors, const HPoly& h)
{
    int count = 0;
    for (const HPoly& e : factors)
        if (!e.is_zero() && h.divides(e)) ++count;
    return count;
}

bool point_less(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b)
{
    for (int i = 0; i < 3; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

} // namespace

HPoly restrict_to(const HPoly& f, const std::vector<HPoly>& irreducibles)
{
    HPoly out = HPoly::constant(Rational(1));
    for (const HPoly& phi : irreducibles) {
        int m = multiplicity(f, phi);
        if (m > 0) out = out * phi.pow(m);
    }
    return out.normalized();
}

std::vector<SingularPoint> singular_points(const CurveSpec& curve, const MuBasis& basis,
                                           const MainSmith& ms)
{
    const auto& factors = ms.smith.factors;
    HPoly last = factors.back();
    std::vector<SingularPoint> out;
    if (last.is_constant()) return out;

    struct Rec {
        std::array<Rational, 3> pt;
        HPoly h;
        std::vector<HPoly> irrs;
    };
    std::vector<Rec> recs;
    std::vector<HPoly> atomic;

    // Candidate parameter factors: irreducible pieces of every d_k, split
    // further against each other (the chain itself often factors what a
    // single entry would not).
    std::vector<HPoly> raw;
    for (const HPoly& d : ms.d_by_k) {
        if (d.is_zero() || d.is_constant()) continue;
        for (const HFactor& hf : factor_rational(d)) raw.push_back(hf.factor);
    }
    std::vector<HPoly> candidates;
    for (const HPoly& g : gcd_free_basis(raw))
        for (const HFactor& hf : factor_rational(g)) candidates.push_back(hf.factor);

    for (const HPoly& phi : candidates) {
        auto pt = point_of_class(curve, phi);
        if (!pt) {
            atomic.push_back(phi);
            continue;
        }
        auto it = std::find_if(recs.begin(), recs.end(),
                               [&](const Rec& r) { return r.pt == *pt; });
        if (it == recs.end()) {
            HPoly pq = dot_point(basis.p, *pt);
            HPoly qq = dot_point(basis.q, *pt);
            HPoly h = gcd(pq, qq).normalized();
            recs.push_back(Rec{*pt, h, {}});
            it = recs.end() - 1;
        }
        if (!phi.divides(it->h))
            throw MathError("parameter factor " + phi.to_string() +
                            " does not divide the inversion formula of its point");
        it->irrs.push_back(phi);
    }

    for (const Rec& r : recs) {
        SingularPoint sp;
        sp.formula = r.h;
        sp.has_point = true;
        sp.point = r.pt;
        sp.irreducibles = distinct_irreducibles(r.h);
        int r_deg = r.h.degree();
        int r_div = 1 + trailing_divisible(factors, r.h);
        if (r_deg != r_div)
            throw MathError("order mismatch at point: deg(h) = " + std::to_string(r_deg) +
                            " but the invariant-factor count gives " + std::to_string(r_div));
        sp.order = r_deg;
        if (sp.order >= 2) out.push_back(std::move(sp));
    }
    for (const HPoly& phi : atomic) {
        SingularPoint sp;
        sp.atomic_class = true;
        sp.irreducibles = {phi};
        int r = 1 + trailing_divisible(factors, phi);
        sp.order = r;
        if (r >= 2 && r < static_cast<int>(ms.d_by_k.size()))
            sp.formula = restrict_to(ms.d_by_k[r], sp.irreducibles);
        else
            sp.formula = phi;
        if (sp.order >= 2) out.push_back(std::move(sp));
    }

    std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
        if (a.has_point != b.has_point) return a.has_point;
        if (a.has_point && a.point != b.point) return point_less(a.point, b.point);
        const UPoly ua = a.formula.chart_x(), ub = b.formula.chart_x();
        if (a.formula.degree() != b.formula.degree())
            return a.formula.degree() < b.formula.degree();
        for (int i = 0; i <= std::max(ua.degree(), ub.degree()); ++i)
            if (ua.coeff(i) != ub.coeff(i)) return ua.coeff(i) < ub.coeff(i);
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------

namespace {

QMat invert3(const QMat& m)
{
    QMat inv(3, 3);
    Rational d = m.det();
    if (is_zero(d)) throw MathError("singular coordinate transform");
    auto minor2 = [&](int i, int j) -> Rational {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        if (r0 > r1) std::swap(r0, r1);
        if (c0 > c1) std::swap(c0, c1);
        return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational cof = minor2(j, i);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = cof / d;
        }
    return inv;
}

struct TransformedCurve {
    HPoly A, B, C;
};

TransformedCurve apply_transform(const QMat& t, const CurveSpec& curve)
{
    auto combine = [&](int row) {
        HPoly out;
        const HPoly* comps[3] = {&curve.a, &curve.b, &curve.c};
        for (int j = 0; j < 3; ++j) {
            if (is_zero(t.at(row, j))) continue;
            HPoly term = comps[j]->scaled(t.at(row, j));
            out = out.is_zero() ? term : out + term;
        }
        return out;
    };
    return TransformedCurve{combine(0), combine(1), combine(2)};
}

} // namespace

OriginForm move_to_origin(const CurveSpec& curve, const SingularPoint& pt, int coord_bound)
{
    if (!pt.has_point)
        throw MathError("move_to_origin needs a singular point with rational coordinates");
    const auto& q = pt.point;

    QMat t(3, 3);
    if (is_zero(q[0]) && is_zero(q[1])) {
        // Already at (0,0,w); scale is irrelevant projectively.
        for (int i = 0; i < 3; ++i) t.at(i, i) = Rational(1);
    } else {
        int im = 0;
        while (is_zero(q[im])) ++im;
        QMat tinv(3, 3);
        int col = 0;
        for (int j = 0; j < 3; ++j) {
            if (j == im) continue;
            tinv.at(j, col) = Rational(1);
            ++col;
        }
        for (int i = 0; i < 3; ++i) tinv.at(i, 2) = q[i];
        t = invert3(tinv);
    }

    {
        // The inversion formula must come out of the transformed chart
        // exactly; anything else is a structural inconsistency.
        TransformedCurve tc = apply_transform(t, curve);
        if (tc.A.is_zero() || tc.B.is_zero() ||
            gcd(tc.A, tc.B).normalized() != pt.formula.normalized())
            throw MathError("gcd(A,B) after the move does not match the inversion formula");
    }

    auto build = [&](const QMat& trans) -> std::optional<OriginForm> {
        TransformedCurve tc = apply_transform(trans, curve);
        if (tc.A.is_zero() || tc.B.is_zero()) return std::nullopt;
        HPoly h = gcd(tc.A, tc.B).normalized();
        if (h != pt.formula.normalized()) return std::nullopt;
        HPoly a = tc.A.divide_exact(h);
        HPoly b = tc.B.divide_exact(h);
        HPoly c = tc.C;
        if (c.is_zero() || !gcd(h, c).is_constant()) return std::nullopt;
        if (!gcd(a, h).is_constant()) return std::nullopt;
        OriginForm of;
        of.curve = make_curve(tc.A, tc.B, tc.C);
        of.a = a;
        of.b = b;
        of.c = c;
        of.h = h;
        of.transform = trans;
        of.order = pt.order;
        return of;
    };

    // The raw transform may violate gcd(a,h) = 1; integer shears fixing
    // (0,0,1) restore it.
    for (int mi = 0; mi <= coord_bound; ++mi) {
        for (int sgn : {1, -1}) {
            if (mi == 0 && sgn < 0) continue;
            Rational m(sgn * mi);
            // x -> x + m y.
            QMat shear(3, 3);
            for (int i = 0; i < 3; ++i) shear.at(i, i) = Rational(1);
            shear.at(0, 1) = m;
            if (auto of = build(shear * t)) return *of;
            // y -> y + m x.
            QMat shear2(3, 3);
            for (int i = 0; i < 3; ++i) shear2.at(i, i) = Rational(1);
            shear2.at(1, 0) = m;
            if (auto of = build(shear2 * t)) return *of;
        }
    }
    throw IncompleteError("coordinate search exhausted (bound " +
                          std::to_string(coord_bound) +
                          ") without achieving gcd(a,h) = 1");
}

CurveSpec blow_up(const OriginForm& origin, HPoly* removed_factor)
{
    HPoly A = origin.a * origin.a * origin.h;
    HPoly B = origin.b * origin.c;
    HPoly C = origin.c * origin.a;
    HPoly g = gcd(gcd(A, B), C).normalized();
    if (removed_factor) *removed_factor = g;
    if (!g.is_constant()) {
        A = A.divide_exact(g);
        B = B.divide_exact(g);
        C = C.divide_exact(g);
    }
    try {
        return make_curve(A, B, C);
    } catch (const MathError& e) {
        throw MathError(std::string("degenerate blow-up: ") + e.what());
    }
}

// ---------------------------------------------------------------------
// The full pipeline.

namespace {

void isolate_node_roots(SingularityNode& node)
{
    HPoly sf = squarefree_part(node.formula);
    node.parameter_at_infinity = sf.y_power() > 0;
    UPoly u = sf.chart_x();
    if (u.degree() >= 1) node.intervals = isolate_real_roots(u);
}

SingularityNode build_node(const CurveSpec& curve, const MuBasis& basis,
                           const MainSmith& ms, const SingularPoint& pt, int level,
                           int ancestor_order, const AnalysisOptions& opts,
                           AnalysisReport& rep)
{
    SingularityNode node;
    node.level = level;
    node.order = pt.order;
    node.formula = pt.formula;
    node.has_point = pt.has_point;
    node.point = pt.point;
    node.ancestor_order = ancestor_order;
    node.attributed_by_blowup = pt.has_point;
    if (opts.isolate_roots) isolate_node_roots(node);

    if (!pt.has_point) {
        // SNF-only fallback: remaining factor content of the d-chain marks
        // unattributed infinitely near (or mixed-class) singularities.
        for (int k = 2; k < static_cast<int>(ms.d_by_k.size()); ++k) {
            if (k == pt.order) continue;
            HPoly part = restrict_to(ms.d_by_k[k], pt.irreducibles);
            if (part.is_constant()) continue;
            SingularityNode child;
            child.level = level + 1;
            child.order = k;
            child.formula = part;
            child.ancestor_order = ancestor_order;
            child.attributed_by_blowup = false;
            if (opts.isolate_roots) isolate_node_roots(child);
            node.children.push_back(std::move(child));
        }
        if (!node.children.empty())
            rep.incompleteness.push_back(
                "irrational class " + pt.formula.to_string() +
                ": infinitely near factors attached without blow-up levels");
        return node;
    }

    if (level >= opts.max_depth) {
        rep.incomplete = true;
        rep.incompleteness.push_back("blow-up depth cap " + std::to_string(opts.max_depth) +
                                     " reached at an order-" + std::to_string(pt.order) +
                                     " point; deeper neighborhoods unexplored");
        return node;
    }

    OriginForm origin;
    try {
        origin = move_to_origin(curve, pt, opts.coord_bound);
    } catch (const IncompleteError& e) {
        rep.incomplete = true;
        rep.incompleteness.push_back(e.what());
        node.attributed_by_blowup = false;
        return node;
    }
    CurveSpec blown;
    try {
        blown = blow_up(origin);
    } catch (const MathError& e) {
        rep.incompleteness.push_back(std::string(e.what()) +
                                     " (no further neighborhoods explored)");
        return node;
    }

    MuBasis basis1 = compute_mubasis(blown);
    FGPair fg1 = build_FG(blown, basis1);
    MainSmith ms1 = main_smith(blown, basis1, fg1);
    for (const SingularPoint& q : singular_points(blown, basis1, ms1)) {
        HPoly psi = restrict_to(q.formula, pt.irreducibles);
        if (psi.is_constant()) continue; // a singularity of P1 away from Q
        SingularPoint child_pt = q;
        if (psi != q.formula)
            rep.incompleteness.push_back(
                "blow-up point mixes parameters of the center with foreign ones; "
                "child formula restricted to the center");
        child_pt.formula = psi;
        child_pt.order = q.order;
        SingularityNode child =
            build_node(blown, basis1, ms1, child_pt, level + 1, ancestor_order, opts, rep);
        node.children.push_back(std::move(child));
    }
    return node;
}

} // namespace

AnalysisReport analyze(const CurveSpec& curve, const AnalysisOptions& opts)
{
    AnalysisReport rep;
    rep.curve = curve;
    rep.basis = compute_mubasis(curve);
    rep.implicit_f = implicitize(curve, rep.basis);
    rep.implicit_degree = implicit_curve_degree(curve, rep.implicit_f);
    if (rep.implicit_degree != curve.n)
        throw MathError("improper parametrization: implicit curve degree is " +
                        std::to_string(rep.implicit_degree) + ", parametrization degree is " +
                        std::to_string(curve.n));
    rep.fg = build_FG(curve, rep.basis);
    rep.ms = main_smith(curve, rep.basis, rep.fg);

    for (const SingularPoint& pt : singular_points(curve, rep.basis, rep.ms))
        rep.tree.push_back(
            build_node(curve, rep.basis, rep.ms, pt, 0, pt.order, opts, rep));

    long lhs = 0;
    for (int k = 2; k < static_cast<int>(rep.ms.d_by_k.size()); ++k)
        if (!rep.ms.d_by_k[k].is_constant())
            lhs += static_cast<long>(k - 1) * rep.ms.d_by_k[k].degree();
    rep.budget_lhs = lhs;
    rep.budget_rhs = static_cast<long>(curve.n - 1) * (curve.n - 2);
    rep.budget_ok = rep.budget_lhs == rep.budget_rhs;

    CheckReport bc = budget_check(rep);
    rep.verifications.push_back({"budget", bc.ok, bc.notes.empty() ? "" : bc.notes.front()});
    CheckReport cons = blowup_consistency_check(rep);
    rep.verifications.push_back(
        {"blowup-consistency", cons.ok, cons.notes.empty() ? "" : cons.notes.front()});
    return rep;
}

} // namespace rcs
