#include "core/resultants.hpp"

#include <algorithm>
#include <functional>

namespace rcs {

namespace {

// Minimal ring interface shared by the coefficient types the companion
// machinery runs over.
template <typename E> struct Ring;

template <> struct Ring<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational divexact(const Rational& a, const Rational& b)
    {
        if (is_zero(b)) throw MathError("division by zero");
        return a / b;
    }
};

template <> struct Ring<UPoly> {
    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly::constant(Rational(1)); }
    static bool is_zero(const UPoly& a) { return a.is_zero(); }
    static UPoly add(const UPoly& a, const UPoly& b) { return a + b; }
    static UPoly sub(const UPoly& a, const UPoly& b) { return a - b; }
    static UPoly mul(const UPoly& a, const UPoly& b) { return a * b; }
    static UPoly divexact(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero()) return UPoly();
        return a.divide_exact(b);
    }
};

template <> struct Ring<HPoly> {
    static HPoly zero() { return HPoly(); }
    static HPoly one() { return HPoly::constant(Rational(1)); }
    static bool is_zero(const HPoly& a) { return a.is_zero(); }
    static HPoly add(const HPoly& a, const HPoly& b) { return a + b; }
    static HPoly sub(const HPoly& a, const HPoly& b) { return a - b; }
    static HPoly mul(const HPoly& a, const HPoly& b) { return a * b; }
    static HPoly divexact(const HPoly& a, const HPoly& b)
    {
        if (a.is_zero()) return HPoly();
        return a.divide_exact(b);
    }
};

template <typename E> using GMat = std::vector<std::vector<E>>;

template <typename E> GMat<E> gmat(int r, int c)
{
    return GMat<E>(r, std::vector<E>(c, Ring<E>::zero()));
}

template <typename E> GMat<E> gmat_identity(int n)
{
    GMat<E> m = gmat<E>(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = Ring<E>::one();
    return m;
}

template <typename E> GMat<E> gmat_mul(const GMat<E>& a, const GMat<E>& b)
{
    int r = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int c = static_cast<int>(b[0].size());
    GMat<E> out = gmat<E>(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (Ring<E>::is_zero(a[i][t])) continue;
            for (int j = 0; j < c; ++j)
                if (!Ring<E>::is_zero(b[t][j]))
                    out[i][j] = Ring<E>::add(out[i][j], Ring<E>::mul(a[i][t], b[t][j]));
        }
    return out;
}

template <typename E> GMat<E> gmat_transpose(const GMat<E>& a)
{
    int r = static_cast<int>(a.size());
    int c = static_cast<int>(a[0].size());
    GMat<E> out = gmat<E>(c, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out[j][i] = a[i][j];
    return out;
}

// J M J with J the antidiagonal reversal.
template <typename E> GMat<E> gmat_reverse_conj(const GMat<E>& a)
{
    int n = static_cast<int>(a.size());
    GMat<E> out = gmat<E>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[n - 1 - i][n - 1 - j];
    return out;
}

// Companion matrix of P (ascending coefficients, formal degree size-1):
// subdiagonal p0, last column -(p_n, ..., p_1) top to bottom.
template <typename E> GMat<E> gmat_companion(const std::vector<E>& P)
{
    int n = static_cast<int>(P.size()) - 1;
    if (n < 1) throw MathError("companion matrix needs degree >= 1");
    const E& p0 = P[n];
    if (Ring<E>::is_zero(p0)) throw MathError("zero leading coefficient");
    GMat<E> m = gmat<E>(n, n);
    for (int i = 1; i < n; ++i) m[i][i - 1] = p0;
    for (int i = 0; i < n; ++i) {
        E v = P[i];
        m[i][n - 1] = Ring<E>::sub(Ring<E>::zero(), v);
    }
    return m;
}

// p0^m * Q(M / p0) for Q of formal degree m = Q.size()-1, by Horner.
template <typename E>
GMat<E> gmat_poly_scaled(const std::vector<E>& Q, const GMat<E>& M, const E& p0)
{
    int m = static_cast<int>(Q.size()) - 1;
    int n = static_cast<int>(M.size());
    std::vector<E> pw(m + 1, Ring<E>::one());
    for (int k = 1; k <= m; ++k) pw[k] = Ring<E>::mul(pw[k - 1], p0);
    GMat<E> s = gmat<E>(n, n);
    for (int i = 0; i < n; ++i) s[i][i] = Q[m];
    for (int k = m - 1; k >= 0; --k) {
        s = gmat_mul(s, M);
        for (int i = 0; i < n; ++i)
            s[i][i] = Ring<E>::add(s[i][i], Ring<E>::mul(Q[k], pw[m - k]));
    }
    return s;
}

// T_m: upper-left m x m upper triangular Toeplitz of p0..p_{m-1}, identity
// elsewhere.  T_0 is the identity.
template <typename E> GMat<E> gmat_tm(const std::vector<E>& P, int m)
{
    int n = static_cast<int>(P.size()) - 1;
    GMat<E> t = gmat<E>(n, n);
    for (int i = 0; i < n; ++i) {
        if (i < m)
            for (int j = i; j < m; ++j) t[i][j] = P[n - (j - i)];
        else
            t[i][i] = Ring<E>::one();
    }
    return t;
}

// p0^m * H(Q,P) = J (p0^m Q(Delta^T / p0)) J, polynomial in every ring.
template <typename E>
GMat<E> gmat_H_scaled(const std::vector<E>& Q, const std::vector<E>& P)
{
    GMat<E> delta = gmat_companion(P);
    const E& p0 = P[P.size() - 1];
    GMat<E> s = gmat_poly_scaled(Q, gmat_transpose(delta), p0);
    return gmat_reverse_conj(s);
}

template <typename E>
GMat<E> gmat_hybrid(const std::vector<E>& Q, const std::vector<E>& P)
{
    int m = static_cast<int>(Q.size()) - 1;
    int n = static_cast<int>(P.size()) - 1;
    if (m > n) throw MathError("hybrid Bezout needs deg(Q) <= deg(P)");
    if (Ring<E>::is_zero(P[n])) throw MathError("zero leading coefficient");
    GMat<E> hs = gmat_H_scaled(Q, P);
    GMat<E> b = gmat_mul(gmat_tm(P, m), hs);
    // Strip the p0^m scaling; exactness is the companion factorization.
    E pw = Ring<E>::one();
    for (int k = 0; k < m; ++k) pw = Ring<E>::mul(pw, P[n]);
    for (auto& row : b)
        for (auto& e : row) e = Ring<E>::divexact(e, pw);
    return b;
}

// Symmetric Bezout entries from the closed-form sums.
template <typename E>
GMat<E> gmat_bezout(const std::vector<E>& f, const std::vector<E>& g)
{
    int m = static_cast<int>(f.size()) - 1;
    if (m < 1 || f.size() != g.size())
        throw MathError("Bezout matrix needs equal degrees >= 1");
    GMat<E> b = gmat<E>(m, m);
    auto cf = [&](const std::vector<E>& v, int i) {
        return (i < 0 || i > m) ? Ring<E>::zero() : v[i];
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            E acc = Ring<E>::zero();
            int kmax = std::min(i + 1, m - j);
            for (int k = 1; k <= kmax; ++k) {
                E t1 = Ring<E>::mul(cf(f, j + k), cf(g, i + 1 - k));
                E t2 = Ring<E>::mul(cf(f, i + 1 - k), cf(g, j + k));
                acc = Ring<E>::add(acc, Ring<E>::sub(t1, t2));
            }
            b[i][j] = acc;
        }
    return b;
}

// Cayley quotient (F(t)G(a) - F(a)G(t)) / (t - a) as a grid in (t, a).
template <typename E>
GMat<E> gmat_cayley_bezout(const std::vector<E>& f, const std::vector<E>& g)
{
    int m = static_cast<int>(f.size()) - 1;
    GMat<E> num = gmat<E>(m + 1, m + 1);
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q)
            num[p][q] = Ring<E>::sub(Ring<E>::mul(f[p], g[q]), Ring<E>::mul(f[q], g[p]));
    // num = (t - a) quot: num[p][q] = quot[p-1][q] - quot[p][q-1].
    GMat<E> quot = gmat<E>(m, m);
    for (int q = 0; q < m; ++q)
        for (int p = 0; p < m; ++p) {
            E v = num[p + 1][q];
            if (q > 0 && p + 1 < m) v = Ring<E>::add(v, quot[p + 1][q - 1]);
            quot[p][q] = v;
        }
    // Check the division was exact.
    for (int q = 1; q <= m; ++q) {
        E v = num[0][q];
        E w = Ring<E>::sub(Ring<E>::zero(), quot[0][q - 1]);
        if (!Ring<E>::is_zero(Ring<E>::sub(v, w)))
            throw MathError("Cayley quotient division failed");
    }
    return quot;
}

std::vector<HPoly> tv_coeff_vector(const BiHPoly& F)
{
    if (F.is_zero()) throw MathError("Bezout construction with zero input");
    std::vector<HPoly> out(F.deg_tv() + 1);
    for (int j = 0; j <= F.deg_tv(); ++j) out[j] = F.tv_coeff(j);
    return out;
}

HPolyMat to_hpolymat(const GMat<HPoly>& g)
{
    HPolyMat m(static_cast<int>(g.size()), static_cast<int>(g[0].size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = g[i][j];
    return m;
}

PolyMat to_polymat(const GMat<UPoly>& g)
{
    PolyMat m(static_cast<int>(g.size()), static_cast<int>(g[0].size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = g[i][j];
    return m;
}

QMat to_qmat(const GMat<Rational>& g)
{
    QMat m(static_cast<int>(g.size()), static_cast<int>(g[0].size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = g[i][j];
    return m;
}

} // namespace

// ---------------------------------------------------------------------

BezoutMatrix bezout_tv(const BiHPoly& F, const BiHPoly& G)
{
    if (F.is_zero() || G.is_zero())
        throw MathError("Bezout matrix of a zero polynomial");
    if (F.deg_tv() != G.deg_tv())
        throw MathError("Bezout matrix needs equal (t,v)-degrees");
    std::vector<HPoly> f = tv_coeff_vector(F), g = tv_coeff_vector(G);
    GMat<HPoly> b = gmat_bezout(f, g);
    GMat<HPoly> cq = gmat_cayley_bezout(f, g);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (b[i][j] != cq[i][j])
                throw MathError("Bezout entry formula disagrees with the Cayley quotient");
    BezoutMatrix out;
    out.size = F.deg_tv();
    out.mat = to_hpolymat(b);
    return out;
}

BezoutMatrix bezout_su(const BiHPoly& F, const BiHPoly& G)
{
    return bezout_tv(F.swap_pairs(), G.swap_pairs());
}

QMat companion(const UPoly& P)
{
    if (P.is_zero()) throw MathError("companion matrix of zero polynomial");
    if (P.degree() < 1) throw MathError("companion matrix needs degree >= 1");
    return to_qmat(gmat_companion(P.coeffs()));
}

QMat eval_poly_at_matrix(const UPoly& Q, const QMat& M)
{
    if (M.rows() != M.cols()) throw MathError("polynomial of a non-square matrix");
    int n = M.rows();
    GMat<Rational> m = gmat<Rational>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = M.at(i, j);
    int d = std::max(Q.degree(), 0);
    GMat<Rational> s = gmat<Rational>(n, n);
    for (int i = 0; i < n; ++i) s[i][i] = Q.coeff(d);
    for (int k = d - 1; k >= 0; --k) {
        s = gmat_mul(s, m);
        for (int i = 0; i < n; ++i) s[i][i] += Q.coeff(k);
    }
    return to_qmat(s);
}

QMat companion_H(const UPoly& Q, const UPoly& P)
{
    if (P.is_zero()) throw MathError("companion matrix of zero polynomial");
    GMat<Rational> hs = gmat_H_scaled(Q.coeffs(), P.coeffs());
    Rational pw(1);
    for (int k = 0; k < Q.degree(); ++k) pw *= P.lc();
    GMat<Rational> h = hs;
    for (auto& row : h)
        for (auto& e : row) e /= pw;
    return to_qmat(h);
}

QMat hybrid_bezout(const UPoly& Q, const UPoly& P)
{
    if (Q.is_zero() || P.is_zero())
        throw MathError("hybrid Bezout of a zero polynomial");
    return to_qmat(gmat_hybrid(Q.coeffs(), P.coeffs()));
}

PolyMat companion_x(const std::vector<UPoly>& P)
{
    return to_polymat(gmat_companion(P));
}

PolyMat companion_H_scaled_x(const std::vector<UPoly>& Q, const std::vector<UPoly>& P)
{
    return to_polymat(gmat_H_scaled(Q, P));
}

PolyMat hybrid_bezout_x(const std::vector<UPoly>& Q, const std::vector<UPoly>& P)
{
    return to_polymat(gmat_hybrid(Q, P));
}

UPoly resultant_x(const std::vector<UPoly>& Q, const std::vector<UPoly>& P)
{
    int m = static_cast<int>(Q.size()) - 1;
    int n = static_cast<int>(P.size()) - 1;
    if (m < 0 || n < 0) throw MathError("resultant of an empty polynomial");
    if (m == 0 && n == 0) return UPoly::constant(Rational(1));
    int size = m + n;
    PolyMat s(size, size);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s.at(r, r + i) = Q[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s.at(n + r, r + i) = P[n - i];
    return s.det();
}

HPolyMat hybrid_bezout_tv(const BiHPoly& Q, const BiHPoly& P)
{
    if (Q.is_zero() || P.is_zero())
        throw MathError("hybrid Bezout of a zero polynomial");
    if (Q.deg_tv() > P.deg_tv())
        throw MathError("hybrid Bezout needs deg_tv(Q) <= deg_tv(P)");
    std::vector<HPoly> q = tv_coeff_vector(Q), p = tv_coeff_vector(P);
    if (p.back().is_zero()) throw MathError("zero leading coefficient");
    return to_hpolymat(gmat_hybrid(q, p));
}

HPolyMat hybrid_bezout_su(const BiHPoly& Q, const BiHPoly& P)
{
    return hybrid_bezout_tv(Q.swap_pairs(), P.swap_pairs());
}

// ---------------------------------------------------------------------

CheckReport check_cayley_padding(const BiHPoly& F, const BiHPoly& G)
{
    CheckReport rep;
    if (F.deg_tv() != G.deg_tv())
        throw MathError("Cayley padding check needs equal (t,v)-degrees");
    BiHPoly cay = BiHPoly::cayley();
    HPolyMat bp = bezout_tv(cay * F, cay * G).mat;
    HPolyMat bb = bezout_tv(F, G).mat;
    if (bb.is_zero()) {
        // Proportional inputs degenerate consistently on both sides.
        if (bp.is_zero())
            rep.note("both Bezout matrices vanish (proportional inputs)");
        else
            rep.fail("base Bezout matrix vanishes but the padded one does not");
        return rep;
    }
    SmithFormH padded = snf_homogeneous(bp);
    SmithFormH base = snf_homogeneous(bb);
    if (padded.factors.size() != base.factors.size() + 1) {
        rep.fail("padded Smith form has unexpected size");
        return rep;
    }
    for (size_t i = 0; i < base.factors.size(); ++i)
        if (padded.factors[i] != base.factors[i]) {
            rep.fail("padded Smith form differs at position " + std::to_string(i + 1));
            return rep;
        }
    if (!padded.factors.back().is_zero()) {
        rep.fail("padded Smith form does not end with a zero factor");
        return rep;
    }
    rep.note("S(B((sv-tu)F,(sv-tu)G)) == diag(S(B(F,G)), 0)");
    return rep;
}

CheckReport check_product_factor_divisibility(const std::vector<UPoly>& f,
                                              const std::vector<UPoly>& g,
                                              const std::vector<UPoly>& h,
                                              int max_tuple)
{
    CheckReport rep;
    int mf = static_cast<int>(f.size()) - 1;
    int mg = static_cast<int>(g.size()) - 1;
    int nh = static_cast<int>(h.size()) - 1;
    if (mf + mg > nh) throw MathError("need deg(f) + deg(g) <= deg(h)");
    if (h[nh].is_zero()) throw MathError("zero leading coefficient");

    std::vector<UPoly> fg(mf + mg + 1, UPoly());
    for (int i = 0; i <= mf; ++i)
        for (int j = 0; j <= mg; ++j) fg[i + j] = fg[i + j] + f[i] * g[j];

    SmithFormU sa = snf_univariate(hybrid_bezout_x(f, h));
    SmithFormU sb = snf_univariate(hybrid_bezout_x(g, h));
    SmithFormU sc = snf_univariate(hybrid_bezout_x(fg, h));
    const UPoly& h0 = h[nh];
    int lmax = mf + mg;

    int kmax = std::min(max_tuple, nh);
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> a(k), b(k);
        std::function<void(int, int)> pick_b;
        std::function<void(int, int)> pick_a = [&](int pos, int start) {
            if (pos == k) {
                pick_b(0, 0);
                return;
            }
            for (int i = start; i < nh; ++i) {
                a[pos] = i;
                pick_a(pos + 1, i + 1);
            }
        };
        pick_b = [&](int pos, int start) {
            if (pos == k) {
                if (a[k - 1] + 1 + b[k - 1] + 1 > k + nh) return;
                UPoly lhs = UPoly::constant(Rational(1));
                UPoly rhs = UPoly::constant(Rational(1));
                for (int t = 0; t < k; ++t) {
                    lhs = lhs * sa.factors[a[t]] * sb.factors[b[t]];
                    rhs = rhs * sc.factors[a[t] + b[t] - t];
                }
                if (lhs.is_zero()) return; // rank-deficient side: nothing to check
                UPoly scaled_rhs = rhs;
                bool okdiv = false;
                for (int l = 0; l <= lmax; ++l) {
                    if (scaled_rhs.divrem(lhs).second.is_zero()) {
                        okdiv = true;
                        break;
                    }
                    scaled_rhs = scaled_rhs * h0;
                }
                if (!okdiv)
                    rep.fail("invariant factor divisibility fails for a k=" +
                             std::to_string(k) + " tuple");
                return;
            }
            for (int j = start; j < nh; ++j) {
                b[pos] = j;
                pick_b(pos + 1, j + 1);
            }
        };
        pick_a(0, 0);
    }
    if (rep.ok) rep.note("hybrid Bezout invariant-factor divisibility holds");
    return rep;
}

} // namespace rcs
