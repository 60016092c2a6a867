#include "core/mubasis.hpp"

#include "core/factor.hpp"
#include "core/qmat.hpp"

#include <algorithm>

namespace rcs {

CurveSpec make_curve(const HPoly& a, const HPoly& b, const HPoly& c)
{
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw MathError("curve components must be nonzero");
    int n = a.degree();
    if (b.degree() != n || c.degree() != n)
        throw MathError("curve components must share one degree");
    if (n < 1) throw MathError("curve degree must be at least 1");
    HPoly g = gcd(gcd(a, b), c);
    if (!g.is_constant())
        throw MathError("curve components are not relatively prime (common factor " +
                        g.to_string() + ")");
    // Linear independence of the three coefficient vectors.
    QMat m(3, n + 1);
    for (int i = 0; i <= n; ++i) {
        m.at(0, i) = a.coeff(i);
        m.at(1, i) = b.coeff(i);
        m.at(2, i) = c.coeff(i);
    }
    if (m.rank() < 3)
        throw MathError("curve components are linearly dependent (the image is a line)");
    return CurveSpec{n, a, b, c};
}

int Syzygy::degree() const
{
    int d = -1;
    for (const HPoly* h : {&A, &B, &C})
        if (!h->is_zero()) d = std::max(d, h->degree());
    return d;
}

HPoly Syzygy::dot(const HPoly& x, const HPoly& y, const HPoly& z) const
{
    HPoly s = A * x;
    HPoly t = B * y;
    HPoly u = C * z;
    HPoly out = s;
    out = out.is_zero() ? t : (t.is_zero() ? out : out + t);
    out = out.is_zero() ? u : (u.is_zero() ? out : out + u);
    return out;
}

Syzygy cross(const Syzygy& p, const Syzygy& q)
{
    return Syzygy{p.B * q.C - p.C * q.B, p.C * q.A - p.A * q.C, p.A * q.B - p.B * q.A};
}

namespace {

// Coefficient vector of a degree-d syzygy candidate: [A_0..A_d, B, C].
Syzygy syzygy_from_vector(const std::vector<Rational>& v, int d)
{
    auto take = [&](int off) {
        std::vector<Rational> c(v.begin() + off, v.begin() + off + d + 1);
        return HPoly(d, std::move(c));
    };
    return Syzygy{take(0), take(d + 1), take(2 * (d + 1))};
}

std::vector<Rational> syzygy_to_vector(const Syzygy& s, int d)
{
    std::vector<Rational> v(3 * (d + 1), Rational(0));
    for (int i = 0; i <= d; ++i) {
        v[i] = s.A.coeff(i);
        v[d + 1 + i] = s.B.coeff(i);
        v[2 * (d + 1) + i] = s.C.coeff(i);
    }
    return v;
}

// Scales to integer coprime coefficients, first nonzero positive.
std::vector<Rational> normalize_vector(std::vector<Rational> v)
{
    Rational c = coeff_content(v);
    for (const Rational& q : v)
        if (!is_zero(q)) {
            if (sign(q) < 0) c = -c;
            break;
        }
    for (Rational& q : v) q /= c;
    return v;
}

QMat syzygy_system(const CurveSpec& curve, int d)
{
    int n = curve.n;
    int rows = n + d + 1, cols = 3 * (d + 1);
    QMat m(rows, cols);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= n; ++i) {
            m.at(i + j, j) = curve.a.coeff(i);
            m.at(i + j, d + 1 + j) = curve.b.coeff(i);
            m.at(i + j, 2 * (d + 1) + j) = curve.c.coeff(i);
        }
    return m;
}

} // namespace

std::vector<Syzygy> syzygy_space(const CurveSpec& curve, int degree)
{
    if (degree < 0) return {};
    std::vector<Syzygy> out;
    for (const auto& v : syzygy_system(curve, degree).nullspace())
        out.push_back(syzygy_from_vector(normalize_vector(v), degree));
    return out;
}

MuBasis compute_mubasis(const CurveSpec& curve)
{
    int n = curve.n;
    // Lowest degree admitting a nonzero syzygy.
    int mu = -1;
    Syzygy p;
    for (int d = 1; d <= n; ++d) {
        std::vector<Syzygy> space = syzygy_space(curve, d);
        if (!space.empty()) {
            mu = d;
            p = space.front();
            break;
        }
    }
    if (mu < 0 || mu > n - mu)
        throw MathError("no mu-basis: syzygy degrees are out of range");

    // Second element at degree n - mu, independent of the multiples of p.
    int dq = n - mu;
    std::vector<std::vector<Rational>> pmult;
    for (int k = 0; k <= dq - mu; ++k) {
        Syzygy sp{p.A * HPoly::monomial(Rational(1), k, dq - mu),
                  p.B * HPoly::monomial(Rational(1), k, dq - mu),
                  p.C * HPoly::monomial(Rational(1), k, dq - mu)};
        pmult.push_back(syzygy_to_vector(sp, dq));
    }
    int cols = 3 * (dq + 1);
    QMat span(static_cast<int>(pmult.size()), cols);
    for (size_t i = 0; i < pmult.size(); ++i)
        for (int j = 0; j < cols; ++j) span.at(static_cast<int>(i), j) = pmult[i][j];
    std::vector<int> pivots;
    {
        QMat tmp = span;
        pivots = tmp.rref();
        span = tmp;
    }

    Syzygy q;
    bool found = false;
    for (const auto& w0 : syzygy_system(curve, dq).nullspace()) {
        // Reduce against the span of the p-multiples.
        std::vector<Rational> w = w0;
        for (size_t r = 0; r < pivots.size(); ++r) {
            Rational f = w[pivots[r]];
            if (is_zero(f)) continue;
            for (int j = 0; j < cols; ++j) w[j] -= f * span.at(static_cast<int>(r), j);
        }
        if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return !is_zero(x); })) {
            q = syzygy_from_vector(normalize_vector(w), dq);
            found = true;
            break;
        }
    }
    if (!found) throw MathError("no independent syzygy at degree n - mu");

    MuBasis basis{p, q, mu, Rational(0)};
    CheckReport rep = verify_mubasis(curve, basis);
    if (!rep.ok) throw MathError("mu-basis contracts failed: " + rep.notes.front());
    // verify recomputed k; store it
    Syzygy x = cross(basis.p, basis.q);
    const HPoly* comps[3] = {&curve.a, &curve.b, &curve.c};
    const HPoly* xs[3] = {&x.A, &x.B, &x.C};
    for (int i = 0; i < 3 && is_zero(basis.k); ++i) {
        if (comps[i]->is_zero()) continue;
        for (int t = 0; t <= comps[i]->degree(); ++t)
            if (!is_zero(comps[i]->coeff(t))) {
                basis.k = xs[i]->coeff(t) / comps[i]->coeff(t);
                break;
            }
    }
    return basis;
}

CheckReport verify_mubasis(const CurveSpec& curve, const MuBasis& basis)
{
    CheckReport rep;
    // Both elements are syzygies.
    if (!basis.p.dot(curve.a, curve.b, curve.c).is_zero())
        rep.fail("p is not a syzygy of the curve");
    if (!basis.q.dot(curve.a, curve.b, curve.c).is_zero())
        rep.fail("q is not a syzygy of the curve");
    // Degree sum.
    int dp = basis.p.degree(), dq = basis.q.degree();
    if (dp + dq != curve.n)
        rep.fail("deg(p) + deg(q) = " + std::to_string(dp + dq) + " != n = " +
                 std::to_string(curve.n));
    // Outer product recovers the parametrization up to a nonzero constant.
    Syzygy x = cross(basis.p, basis.q);
    Rational k(0);
    const HPoly* comps[3] = {&curve.a, &curve.b, &curve.c};
    const HPoly* xs[3] = {&x.A, &x.B, &x.C};
    for (int i = 0; i < 3 && is_zero(k); ++i)
        for (int t = 0; t <= comps[i]->degree() && is_zero(k); ++t)
            if (!is_zero(comps[i]->coeff(t))) k = xs[i]->coeff(t) / comps[i]->coeff(t);
    bool prop = !is_zero(k);
    for (int i = 0; i < 3 && prop; ++i) {
        HPoly scaled = comps[i]->scaled(k);
        if ((xs[i]->is_zero() && !scaled.is_zero()) ||
            (!xs[i]->is_zero() && *xs[i] != scaled))
            prop = false;
    }
    if (!prop)
        rep.fail("p x q is not a constant multiple of P");
    else
        rep.note("p x q = k P with k = " + rat_to_string(k));
    return rep;
}

TriPoly implicitize(const CurveSpec& curve, const MuBasis& basis)
{
    int n = curve.n, mu = basis.mu;
    // Sylvester matrix of p.X and q.X in (s,u): entries linear in (x,y,w).
    // Evaluate at triangular grid points and interpolate exactly.
    auto res_at = [&](const Rational& x, const Rational& y, const Rational& w) {
        std::vector<Rational> f1(mu + 1), f2(n - mu + 1);
        for (int i = 0; i <= mu; ++i)
            f1[i] = basis.p.A.coeff(i) * x + basis.p.B.coeff(i) * y + basis.p.C.coeff(i) * w;
        for (int i = 0; i <= n - mu; ++i)
            f2[i] = basis.q.A.coeff(i) * x + basis.q.B.coeff(i) * y + basis.q.C.coeff(i) * w;
        QMat s(n, n);
        for (int r = 0; r < n - mu; ++r)
            for (int i = 0; i <= mu; ++i) s.at(r, r + i) = f1[mu - i];
        for (int r = 0; r < mu; ++r)
            for (int i = 0; i <= n - mu; ++i) s.at(n - mu + r, r + i) = f2[n - mu - i];
        return s.det();
    };

    int cells = TriPoly::cell_count(n);
    QMat sys(cells, cells);
    std::vector<Rational> rhs(cells);
    int row = 0;
    for (int px = 0; px <= n; ++px)
        for (int py = 0; px + py <= n; ++py) {
            Rational x(px), y(py), w(1);
            // Monomial values in the same order TriPoly stores cells.
            int col = 0;
            std::vector<Rational> xp(n + 1, Rational(1)), yp(n + 1, Rational(1));
            for (int k = 1; k <= n; ++k) {
                xp[k] = xp[k - 1] * x;
                yp[k] = yp[k - 1] * y;
            }
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j) sys.at(row, col++) = xp[i] * yp[j];
            rhs[row] = res_at(x, y, w);
            ++row;
        }
    std::vector<Rational> sol = sys.solve(rhs);
    TriPoly f(n, std::move(sol));
    if (f.is_zero()) throw MathError("implicitization produced the zero polynomial");
    f = f.normalized();
    if (!f.compose(curve.a, curve.b, curve.c).is_zero())
        throw MathError("implicit equation does not vanish on the curve");
    return f;
}

int implicit_curve_degree(const CurveSpec& curve, const TriPoly& f)
{
    int n = curve.n;
    // Base point off the curve.
    std::array<Rational, 3> base{};
    bool have_base = false;
    for (int i = 0; i <= n && !have_base; ++i)
        for (int j = 0; i + j <= n && !have_base; ++j)
            if (!is_zero(f.eval(Rational(i), Rational(j), Rational(1)))) {
                base = {Rational(i), Rational(j), Rational(1)};
                have_base = true;
            }
    for (int i = 0; i <= n && !have_base; ++i)
        if (!is_zero(f.eval(Rational(i), Rational(1), Rational(0)))) {
            base = {Rational(i), Rational(1), Rational(0)};
            have_base = true;
        }
    if (!have_base) {
        if (!is_zero(f.eval(Rational(1), Rational(0), Rational(0)))) {
            base = {Rational(1), Rational(0), Rational(0)};
            have_base = true;
        }
    }
    if (!have_base) throw MathError("no base point off the curve found");

    // Lines through the base point along moment-curve directions; enough
    // samples to clear every degenerate line.
    int samples = 3 * n * n + 2;
    int best = 0;
    for (int t = 0; t <= samples; ++t) {
        Rational rt(t);
        std::array<Rational, 3> dir{Rational(1), rt, rt * rt};
        if (!is_zero(f.eval(dir[0], dir[1], dir[2]))) {
            UPoly g = f.restrict_to_line(base, dir);
            if (g.degree() == f.degree()) {
                int distinct = squarefree_part(g).degree();
                best = std::max(best, distinct);
            }
        }
    }
    if (best <= 0) throw MathError("implicit degree sweep found no valid line");
    return best;
}

bool check_proper(const CurveSpec& curve, const MuBasis& basis)
{
    TriPoly f = implicitize(curve, basis);
    return implicit_curve_degree(curve, f) == curve.n;
}

} // namespace rcs
