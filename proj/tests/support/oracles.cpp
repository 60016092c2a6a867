#include "support/oracles.hpp"

namespace rcs::test {

namespace {

template <typename Mat, typename Entry>
Entry laplace_det_impl(const Mat& m)
{
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Entry acc;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Entry term = m.at(0, j) * laplace_det_impl<Mat, Entry>(sub);
        if (j % 2 == 1) term = term.scaled(Rational(-1));
        acc = acc.is_zero() ? term : acc + term;
    }
    return acc;
}

template <typename Mat, typename Entry, typename GcdFn>
std::vector<Entry> minor_det_factors_impl(const Mat& m, GcdFn gcd_fn)
{
    int size = std::min(m.rows(), m.cols());
    std::vector<Entry> out;
    for (int k = 1; k <= size; ++k) {
        Entry g;
        bool any = false;
        std::vector<int> ri(k), ci(k);
        std::function<void(int, int)> pick_cols;
        std::function<void(int, int)> pick_rows = [&](int pos, int start) {
            if (pos == k) {
                pick_cols(0, 0);
                return;
            }
            for (int i = start; i <= m.rows() - (k - pos); ++i) {
                ri[pos] = i;
                pick_rows(pos + 1, i + 1);
            }
        };
        pick_cols = [&](int pos, int start) {
            if (pos == k) {
                Mat sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                Entry d = laplace_det_impl<Mat, Entry>(sub);
                if (d.is_zero()) return;
                g = any ? gcd_fn(g, d) : d.normalized();
                any = true;
                return;
            }
            for (int j = start; j <= m.cols() - (k - pos); ++j) {
                ci[pos] = j;
                pick_cols(pos + 1, j + 1);
            }
        };
        pick_rows(0, 0);
        if (!any) break;
        out.push_back(g);
    }
    return out;
}

} // namespace

UPoly laplace_det(const PolyMat& m) { return laplace_det_impl<PolyMat, UPoly>(m); }
HPoly laplace_det(const HPolyMat& m) { return laplace_det_impl<HPolyMat, HPoly>(m); }

std::vector<UPoly> minor_det_factors(const PolyMat& m)
{
    return minor_det_factors_impl<PolyMat, UPoly>(
        m, [](const UPoly& a, const UPoly& b) { return gcd(a, b); });
}

std::vector<HPoly> minor_det_factors(const HPolyMat& m)
{
    return minor_det_factors_impl<HPolyMat, HPoly>(
        m, [](const HPoly& a, const HPoly& b) { return gcd(a, b); });
}

Rational sylvester_resultant(const UPoly& f, const UPoly& g)
{
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rational(1);
    int size = m + n;
    PolyMat s(size, size);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            s.at(r, r + i) = UPoly::constant(f.coeff(m - i));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s.at(n + r, r + i) = UPoly::constant(g.coeff(n - i));
    UPoly d = laplace_det(s);
    return d.is_zero() ? Rational(0) : d.coeff(0);
}

HPoly monomial_gcd_bruteforce(const HPoly& f, const HPoly& g)
{
    auto monomial_exponent = [](const HPoly& h) {
        int e = -1;
        for (int i = 0; i <= h.degree(); ++i)
            if (!is_zero(h.coeff(i))) {
                if (e >= 0) throw MathError("not a monomial");
                e = i;
            }
        return e;
    };
    int ef = monomial_exponent(f), eg = monomial_exponent(g);
    HPoly best = HPoly::constant(Rational(1));
    for (int a = 0; a <= std::min(ef, eg); ++a)
        for (int b = 0; a + b <= std::min(f.degree(), g.degree()); ++b) {
            HPoly cand = HPoly::monomial(Rational(1), a, a + b);
            if (cand.divides(f) && cand.divides(g) && cand.degree() > best.degree())
                best = cand;
        }
    return best;
}

long Rng::pick(long lo, long hi)
{
    unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
}

Rational Rng::coeff(long bound) { return Rational(pick(-bound, bound)); }

UPoly Rng::upoly(int degree, long bound, bool exact_degree)
{
    std::vector<Rational> c(degree + 1);
    for (auto& q : c) q = coeff(bound);
    if (exact_degree)
        while (is_zero(c[degree])) c[degree] = coeff(bound);
    return UPoly(std::move(c));
}

HPoly Rng::hpoly(int degree, long bound)
{
    std::vector<Rational> c(degree + 1);
    bool nonzero = false;
    for (auto& q : c) {
        q = coeff(bound);
        nonzero = nonzero || !is_zero(q);
    }
    if (!nonzero) c[0] = Rational(1);
    return HPoly(degree, std::move(c));
}

BiHPoly Rng::bihpoly(int deg_su, int deg_tv, long bound)
{
    std::vector<Rational> c(static_cast<size_t>(deg_su + 1) * (deg_tv + 1));
    bool nonzero = false;
    for (auto& q : c) {
        q = coeff(bound);
        nonzero = nonzero || !is_zero(q);
    }
    if (!nonzero) c[0] = Rational(1);
    return BiHPoly(deg_su, deg_tv, std::move(c));
}

} // namespace rcs::test
