#include "core/factor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <deque>

namespace rcs {

UPoly squarefree_part(const UPoly& f)
{
    if (f.is_zero()) throw MathError("squarefree part of zero");
    if (f.degree() == 0) return UPoly::constant(Rational(1));
    UPoly g = gcd(f, f.derivative());
    return f.divide_exact(g).normalized();
}

HPoly squarefree_part(const HPoly& f)
{
    if (f.is_zero()) throw MathError("squarefree part of zero");
    if (f.degree() == 0) return HPoly::constant(Rational(1));
    UPoly u = f.chart_x();
    int ypow = f.y_power();
    UPoly s = u.degree() > 0 ? squarefree_part(u) : UPoly::constant(Rational(1));
    HPoly h = HPoly::homogenize(s, s.degree() + (ypow > 0 ? 1 : 0));
    return h.normalized();
}

// ---------------------------------------------------------------------
// Sturm sequences.

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& f)
{
    std::vector<UPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        const UPoly& a = seq[seq.size() - 2];
        const UPoly& b = seq.back();
        UPoly r = a.divrem(b).second;
        if (r.is_zero()) break;
        UPoly next = -r;
        // Positive scaling keeps the sign pattern intact.
        next = next.scaled(Rational(1) / next.content());
        seq.push_back(std::move(next));
    }
    return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x)
{
    int var = 0, last = 0;
    for (const UPoly& p : seq) {
        int s = sign(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

Rational cauchy_bound(const UPoly& f)
{
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rational a = abs(f.coeff(i) / f.lc());
        if (a > m) m = a;
    }
    return m + 1;
}

} // namespace

std::vector<Interval> isolate_real_roots(const UPoly& f)
{
    if (f.is_zero()) throw MathError("root isolation of zero polynomial");
    if (f.degree() == 0) return {};
    if (!gcd(f, f.derivative()).is_constant())
        throw MathError("root isolation requires a squarefree polynomial");

    std::vector<UPoly> seq = sturm_sequence(f);
    Rational bound = cauchy_bound(f);
    struct Piece {
        Rational lo, hi;
        int nlo, nhi;
    };
    std::deque<Piece> work;
    int vlo = sign_variations(seq, -bound), vhi = sign_variations(seq, bound);
    work.push_back({-bound, bound, vlo, vhi});
    std::vector<Interval> out;
    while (!work.empty()) {
        Piece p = work.front();
        work.pop_front();
        int count = p.nlo - p.nhi;
        if (count <= 0) continue;
        if (count == 1) {
            out.push_back({p.lo, p.hi});
            continue;
        }
        Rational mid = (p.lo + p.hi) / 2;
        if (is_zero(f.eval(mid))) {
            out.push_back({mid, mid});
            // Nudge the split so the exact root sits in neither half.
            Rational eps = (p.hi - p.lo) / 4;
            UPoly probe = f;
            Rational lo2 = mid - eps, hi2 = mid + eps;
            while (is_zero(probe.eval(lo2))) lo2 = (p.lo + lo2) / 2;
            while (is_zero(probe.eval(hi2))) hi2 = (hi2 + p.hi) / 2;
            int nlo2 = sign_variations(seq, lo2), nhi2 = sign_variations(seq, hi2);
            work.push_back({p.lo, lo2, p.nlo, nlo2});
            work.push_back({hi2, p.hi, nhi2, p.nhi});
        } else {
            int nmid = sign_variations(seq, mid);
            work.push_back({p.lo, mid, p.nlo, nmid});
            work.push_back({mid, p.hi, nmid, p.nhi});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

// ---------------------------------------------------------------------
// Rational roots without divisor enumeration: monicize and hunt integer
// roots of the associated monic polynomial with Sturm bisection.

namespace {

// Narrows [lo,hi] (containing exactly one root of squarefree f) until
// hi - lo < 1, then tests the at most two integer candidates.
bool integer_root_in(const UPoly& f, Rational lo, Rational hi, Int& out)
{
    // The unique (simple) root lies in (lo, hi], so f changes sign there.
    int slo = sign(f.eval(lo));
    while (hi - lo >= 1) {
        Rational mid = (lo + hi) / 2;
        int smid = sign(f.eval(mid));
        if (smid == 0) {
            if (mid.get_den() == 1) { out = mid.get_num(); return true; }
            return false;
        }
        if (smid == slo)
            lo = mid;
        else
            hi = mid;
    }
    // An interval shorter than 1 contains at most one integer: floor(hi).
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    Rational x(k);
    if (x > lo && x <= hi && is_zero(f.eval(x))) { out = k; return true; }
    return false;
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& f)
{
    if (f.is_zero()) throw MathError("roots of zero polynomial");
    std::vector<std::pair<Rational, int>> out;
    if (f.degree() < 1) return out;
    UPoly s = squarefree_part(f).normalized(); // integer, coprime coefficients
    // Scaled monic companion: lc * g(y) where g(y) = lc^(d-1) s(y/lc) is
    // monic over the integers, so every rational root of it is an integer
    // and y0 = lc * x0 maps roots across.
    Int lc_num = s.lc().get_num();
    int d = s.degree();
    std::vector<Rational> g(d + 1);
    Rational pw(1);
    for (int i = d; i >= 0; --i) {
        g[i] = s.coeff(i) * pw;
        pw *= Rational(lc_num);
    }
    UPoly gm(std::move(g));
    for (const Interval& iv : isolate_real_roots(gm)) {
        Int y;
        if (iv.lo == iv.hi) {
            if (iv.lo.get_den() != 1) continue;
            y = iv.lo.get_num();
        } else if (!integer_root_in(gm, iv.lo, iv.hi, y)) {
            continue;
        }
        Rational x(y, lc_num);
        x.canonicalize();
        // Multiplicity in the original polynomial.
        UPoly lin({-x, Rational(1)});
        UPoly rest = f;
        int m = 0;
        while (true) {
            auto [q, r] = rest.divrem(lin);
            if (!r.is_zero()) break;
            rest = q;
            ++m;
        }
        if (m > 0) out.emplace_back(x, m);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------
// Factorization.

namespace {

bool rational_is_square(const Rational& q, Rational& root)
{
    if (sign(q) < 0) return false;
    if (is_zero(q)) { root = Rational(0); return true; }
    const Int& n = q.get_num();
    const Int& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

// Splits a squarefree quartic with no rational roots into two rational
// quadratics when possible (resolvent cubic route); returns false when the
// quartic is irreducible over the rationals.
bool split_quartic(const UPoly& f, UPoly& f1, UPoly& f2)
{
    Rational a = f.coeff(3) / f.coeff(4);
    Rational b = f.coeff(2) / f.coeff(4);
    Rational c = f.coeff(1) / f.coeff(4);
    Rational d = f.coeff(0) / f.coeff(4);
    // Depress: x = y - a/4.
    Rational p = b - a * a * Rational(3, 8);
    Rational q = c - a * b / 2 + a * a * a / 8;
    Rational r = d - a * c / 4 + a * a * b / 16 - a * a * a * a * Rational(3, 256);

    auto build = [&](const Rational& u, const Rational& s, const Rational& t,
                     UPoly& g1, UPoly& g2) {
        // (y^2 + u y + s)(y^2 - u y + t) with y = x + a/4.
        UPoly y({a / 4, Rational(1)});
        UPoly y2 = y * y;
        g1 = y2 + y.scaled(u) + UPoly::constant(s);
        g2 = y2 - y.scaled(u) + UPoly::constant(t);
    };

    std::vector<std::array<Rational, 3>> candidates; // (u, s, t)
    if (is_zero(q)) {
        // (y^2 + z1)(y^2 + z2) with z1 z2 = r, z1 + z2 = p.
        Rational disc = p * p - 4 * r, sq;
        if (rational_is_square(disc, sq)) {
            Rational z1 = (p + sq) / 2, z2 = (p - sq) / 2;
            candidates.push_back({Rational(0), z1, z2});
        }
        // (y^2 + u y + s)(y^2 - u y + s) with s^2 = r, u^2 = 2s - p.
        Rational s0;
        if (rational_is_square(r, s0)) {
            for (const Rational& s : {Rational(s0), Rational(-s0)}) {
                Rational u2 = 2 * s - p, u;
                if (rational_is_square(u2, u)) candidates.push_back({u, s, s});
            }
        }
    } else {
        // Resolvent cubic in U = u^2: U^3 + 2p U^2 + (p^2-4r) U - q^2.
        UPoly res({-q * q, p * p - 4 * r, 2 * p, Rational(1)});
        for (const auto& [U, mult] : rational_roots(res)) {
            (void)mult;
            Rational u;
            if (!rational_is_square(U, u) || is_zero(u)) continue;
            Rational s = (p + U - q / u) / 2;
            Rational t = (p + U + q / u) / 2;
            candidates.push_back({u, s, t});
        }
    }
    for (const auto& [u, s, t] : candidates) {
        UPoly g1, g2;
        build(u, s, t, g1, g2);
        if ((g1 * g2).scaled(f.coeff(4)) == f) {
            f1 = g1.normalized();
            f2 = g2.normalized();
            return true;
        }
    }
    return false;
}

// Irreducible (or cap-limited) factors of a squarefree primitive polynomial.
std::vector<UPoly> factor_squarefree(const UPoly& s)
{
    std::vector<UPoly> out;
    UPoly rest = s;
    for (const auto& [root, mult] : rational_roots(s)) {
        (void)mult; // squarefree: always 1
        UPoly lin = UPoly({-root, Rational(1)}).normalized();
        out.push_back(lin);
        rest = rest.divide_exact(UPoly({-root, Rational(1)}));
    }
    rest = rest.normalized();
    if (rest.degree() >= 1) {
        if (rest.degree() == 4) {
            UPoly f1, f2;
            if (split_quartic(rest, f1, f2)) {
                out.push_back(f1);
                out.push_back(f2);
            } else {
                out.push_back(rest);
            }
        } else {
            // Degrees 2 and 3 are irreducible once rational roots are gone;
            // degree >= 5 residuals are reported as single factors.
            out.push_back(rest);
        }
    }
    return out;
}

bool upoly_less(const UPoly& a, const UPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

} // namespace

std::vector<UFactor> factor_rational(const UPoly& f)
{
    if (f.is_zero()) throw MathError("factorization of zero");
    std::vector<UFactor> out;
    if (f.degree() < 1) return out;
    UPoly w = f.normalized();

    // Yun's squarefree decomposition.
    UPoly g = gcd(w, w.derivative());
    UPoly c1 = w.divide_exact(g);
    UPoly d1 = w.derivative().divide_exact(g) - c1.derivative();
    int mult = 1;
    while (true) {
        UPoly s = gcd(c1, d1);
        if (s.degree() >= 1)
            for (const UPoly& irr : factor_squarefree(s))
                out.push_back({irr, mult});
        UPoly c2 = c1.divide_exact(s);
        if (c2.degree() < 1) break;
        UPoly d2 = d1.divide_exact(s) - c2.derivative();
        c1 = c2;
        d1 = d2;
        ++mult;
    }
    std::sort(out.begin(), out.end(), [](const UFactor& a, const UFactor& b) {
        return upoly_less(a.factor, b.factor);
    });
    return out;
}

std::vector<HFactor> factor_rational(const HPoly& f)
{
    if (f.is_zero()) throw MathError("factorization of zero");
    std::vector<HFactor> out;
    if (f.degree() < 1) return out;
    int ypow = f.y_power();
    if (ypow > 0)
        out.push_back({HPoly::monomial(Rational(1), 0, 1), ypow}); // the form y
    for (const UFactor& uf : factor_rational(f.chart_x()))
        out.push_back({HPoly::homogenize(uf.factor, uf.factor.degree()).normalized(),
                       uf.multiplicity});
    return out;
}

std::vector<HPoly> gcd_free_basis(const std::vector<HPoly>& inputs)
{
    std::vector<HPoly> pool;
    std::function<void(HPoly)> insert = [&](HPoly g) {
        g = g.normalized();
        if (g.is_constant()) return;
        for (size_t i = 0; i < pool.size(); ++i) {
            HPoly c = gcd(pool[i], g);
            if (c.is_constant()) continue;
            if (c == g && c == pool[i]) return; // already present
            HPoly f = pool[i];
            pool.erase(pool.begin() + static_cast<long>(i));
            insert(c);
            if (f != c) insert(f.divide_exact(c));
            if (g != c) insert(g.divide_exact(c));
            return;
        }
        pool.push_back(std::move(g));
    };
    for (const HPoly& f : inputs) {
        if (f.is_zero()) throw MathError("gcd-free basis of zero");
        insert(f);
    }
    std::sort(pool.begin(), pool.end(), [](const HPoly& a, const HPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        return false;
    });
    return pool;
}

} // namespace rcs
