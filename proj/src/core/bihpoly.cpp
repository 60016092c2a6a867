#include "core/bihpoly.hpp"

#include <algorithm>
#include <sstream>

namespace rcs {

BiHPoly::BiHPoly(int deg_su, int deg_tv, std::vector<Rational> cells)
{
    if (deg_su < 0 || deg_tv < 0 ||
        cells.size() != static_cast<size_t>(deg_su + 1) * (deg_tv + 1))
        throw MathError("bihomogeneous polynomial needs a full coefficient grid");
    bool all_zero = std::all_of(cells.begin(), cells.end(),
                                [](const Rational& q) { return rcs::is_zero(q); });
    if (all_zero) return;
    ds_ = deg_su;
    dt_ = deg_tv;
    c_ = std::move(cells);
}

BiHPoly BiHPoly::from_su(const HPoly& f)
{
    if (f.is_zero()) return BiHPoly();
    return BiHPoly(f.degree(), 0, f.coeffs());
}

BiHPoly BiHPoly::from_tv(const HPoly& f)
{
    if (f.is_zero()) return BiHPoly();
    return BiHPoly(0, f.degree(), f.coeffs());
}

BiHPoly BiHPoly::cayley()
{
    // s*v - t*u on a 2x2 grid.
    BiHPoly r;
    r.ds_ = 1;
    r.dt_ = 1;
    r.c_ = {Rational(0), Rational(-1), Rational(1), Rational(0)};
    return r;
}

Rational BiHPoly::cell(int i, int j) const
{
    if (is_zero() || i < 0 || j < 0 || i > ds_ || j > dt_) return Rational(0);
    return at(i, j);
}

BiHPoly BiHPoly::operator-() const
{
    BiHPoly r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
}

BiHPoly BiHPoly::operator+(const BiHPoly& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (ds_ != o.ds_ || dt_ != o.dt_)
        throw MathError("bidegree mismatch in bihomogeneous addition");
    std::vector<Rational> r(c_);
    for (size_t k = 0; k < r.size(); ++k) r[k] += o.c_[k];
    return BiHPoly(ds_, dt_, std::move(r));
}

BiHPoly BiHPoly::operator-(const BiHPoly& o) const { return *this + (-o); }

BiHPoly BiHPoly::operator*(const BiHPoly& o) const
{
    if (is_zero() || o.is_zero()) return BiHPoly();
    int ds = ds_ + o.ds_, dt = dt_ + o.dt_;
    std::vector<Rational> r(static_cast<size_t>(ds + 1) * (dt + 1), Rational(0));
    for (int i = 0; i <= ds_; ++i)
        for (int j = 0; j <= dt_; ++j) {
            const Rational& q = at(i, j);
            if (rcs::is_zero(q)) continue;
            for (int a = 0; a <= o.ds_; ++a)
                for (int b = 0; b <= o.dt_; ++b)
                    r[static_cast<size_t>(i + a) * (dt + 1) + (j + b)] += q * o.at(a, b);
        }
    return BiHPoly(ds, dt, std::move(r));
}

BiHPoly BiHPoly::scaled(const Rational& q) const
{
    if (is_zero() || rcs::is_zero(q)) return BiHPoly();
    BiHPoly r(*this);
    for (auto& x : r.c_) x *= q;
    return r;
}

HPoly BiHPoly::tv_coeff(int j) const
{
    if (is_zero()) throw MathError("coefficient of zero bihomogeneous polynomial");
    std::vector<Rational> col(ds_ + 1);
    for (int i = 0; i <= ds_; ++i) col[i] = at(i, j);
    return HPoly(ds_, std::move(col)); // canonicalizes to zero if all zero
}

HPoly BiHPoly::su_coeff(int i) const
{
    if (is_zero()) throw MathError("coefficient of zero bihomogeneous polynomial");
    std::vector<Rational> row(dt_ + 1);
    for (int j = 0; j <= dt_; ++j) row[j] = at(i, j);
    return HPoly(dt_, std::move(row));
}

BiHPoly BiHPoly::divide_by_cayley() const
{
    if (is_zero()) return BiHPoly();
    if (ds_ < 1 || dt_ < 1)
        throw MathError("Cayley division: bidegree too small");
    if (!diagonal().is_zero())
        throw MathError("Cayley division: polynomial does not vanish on the diagonal");
    // f = (sv - tu) q  <=>  f[i][j] = q[i-1][j] - q[i][j-1].
    int qs = ds_ - 1, qt = dt_ - 1;
    std::vector<Rational> q(static_cast<size_t>(qs + 1) * (qt + 1), Rational(0));
    auto qat = [&](int i, int j) -> Rational& {
        return q[static_cast<size_t>(i) * (qt + 1) + j];
    };
    for (int j = 0; j <= qt; ++j)
        for (int i = 0; i <= qs; ++i) {
            Rational val = cell(i + 1, j);
            if (j > 0 && i + 1 <= qs) val += qat(i + 1, j - 1);
            qat(i, j) = val;
        }
    BiHPoly quot(qs, qt, std::move(q));
    if (cayley() * quot != *this)
        throw MathError("Cayley division failed the re-multiplication check");
    return quot;
}

HPoly BiHPoly::eval_su(const Rational& s0, const Rational& u0) const
{
    if (rcs::is_zero(s0) && rcs::is_zero(u0)) throw MathError("evaluation at (0,0)");
    if (is_zero()) return HPoly();
    std::vector<Rational> sp(ds_ + 1, Rational(1)), up(ds_ + 1, Rational(1));
    for (int i = 1; i <= ds_; ++i) {
        sp[i] = sp[i - 1] * s0;
        up[i] = up[i - 1] * u0;
    }
    std::vector<Rational> out(dt_ + 1, Rational(0));
    for (int j = 0; j <= dt_; ++j)
        for (int i = 0; i <= ds_; ++i)
            out[j] += at(i, j) * sp[i] * up[ds_ - i];
    return HPoly(dt_, std::move(out));
}

HPoly BiHPoly::eval_tv(const Rational& t0, const Rational& v0) const
{
    return swap_pairs().eval_su(t0, v0);
}

HPoly BiHPoly::diagonal() const
{
    if (is_zero()) return HPoly();
    int d = ds_ + dt_;
    std::vector<Rational> out(d + 1, Rational(0));
    for (int i = 0; i <= ds_; ++i)
        for (int j = 0; j <= dt_; ++j)
            out[i + j] += at(i, j);
    return HPoly(d, std::move(out));
}

BiHPoly BiHPoly::swap_pairs() const
{
    if (is_zero()) return BiHPoly();
    std::vector<Rational> r(c_.size());
    for (int i = 0; i <= ds_; ++i)
        for (int j = 0; j <= dt_; ++j)
            r[static_cast<size_t>(j) * (ds_ + 1) + i] = at(i, j);
    return BiHPoly(dt_, ds_, std::move(r));
}

BiHPoly BiHPoly::divide_exact(const BiHPoly& d) const
{
    if (d.is_zero()) throw MathError("division by zero polynomial");
    if (is_zero()) return BiHPoly();
    BiHPoly quot;
    if (d.deg_su() == 0) {
        // Divisor depends on (t,v) only: divide row by row.
        HPoly dtv = d.su_coeff(0);
        int qs = ds_, qt = dt_ - dtv.degree();
        std::vector<Rational> q(static_cast<size_t>(qs + 1) * (qt + 1), Rational(0));
        for (int i = 0; i <= ds_; ++i) {
            HPoly row = su_coeff(i);
            if (row.is_zero()) continue;
            HPoly qr = row.divide_exact(dtv);
            for (int j = 0; j <= qt; ++j)
                q[static_cast<size_t>(i) * (qt + 1) + j] = qr.coeff(j);
        }
        quot = BiHPoly(qs, qt, std::move(q));
    } else if (d.deg_tv() == 0) {
        return swap_pairs().divide_exact(d.swap_pairs()).swap_pairs();
    } else {
        throw MathError("bihomogeneous division supports one-pair divisors only");
    }
    if (quot * d != *this) throw MathError("inexact bihomogeneous division");
    return quot;
}

std::string BiHPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = ds_; i >= 0; --i)
        for (int j = dt_; j >= 0; --j) {
            const Rational& q = at(i, j);
            if (rcs::is_zero(q)) continue;
            Rational a = abs(q);
            if (first) {
                if (sign(q) < 0) os << "-";
                first = false;
            } else {
                os << (sign(q) < 0 ? " - " : " + ");
            }
            std::string vars;
            auto add = [&vars](const std::string& v, int e) {
                if (e == 0) return;
                if (!vars.empty()) vars += "*";
                vars += v;
                if (e > 1) vars += "^" + std::to_string(e);
            };
            add("s", i);
            add("u", ds_ - i);
            add("t", j);
            add("v", dt_ - j);
            if (vars.empty() || a != 1) os << rat_to_string(a);
            if (!vars.empty()) {
                if (a != 1) os << "*";
                os << vars;
            }
        }
    return os.str();
}

} // namespace rcs
