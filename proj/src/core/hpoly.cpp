#include "core/hpoly.hpp"

#include <algorithm>
#include <sstream>

namespace rcs {

HPoly::HPoly(int degree, std::vector<Rational> coeffs)
{
    if (degree < 0 || coeffs.size() != static_cast<size_t>(degree) + 1)
        throw MathError("homogeneous polynomial needs degree+1 coefficients");
    bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                [](const Rational& q) { return rcs::is_zero(q); });
    if (all_zero) return; // canonical zero
    deg_ = degree;
    c_ = std::move(coeffs);
}

HPoly HPoly::constant(const Rational& q)
{
    if (rcs::is_zero(q)) return HPoly();
    return HPoly(0, {q});
}

HPoly HPoly::monomial(const Rational& q, int i, int d)
{
    if (i < 0 || i > d) throw MathError("monomial exponent out of range");
    if (rcs::is_zero(q)) return HPoly();
    std::vector<Rational> c(d + 1, Rational(0));
    c[i] = q;
    return HPoly(d, std::move(c));
}

HPoly HPoly::homogenize(const UPoly& u, int d)
{
    if (u.is_zero()) return HPoly();
    if (u.degree() > d) throw MathError("homogenization degree too small");
    std::vector<Rational> c(d + 1, Rational(0));
    for (int i = 0; i <= u.degree(); ++i) c[i] = u.coeff(i);
    return HPoly(d, std::move(c));
}

Rational HPoly::coeff(int i) const
{
    if (is_zero() || i < 0 || i > deg_) return Rational(0);
    return c_[i];
}

UPoly HPoly::chart_x() const
{
    if (is_zero()) return UPoly();
    return UPoly(c_);
}

UPoly HPoly::chart_y() const
{
    if (is_zero()) return UPoly();
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UPoly(std::move(r));
}

int HPoly::y_power() const
{
    if (is_zero()) throw MathError("y_power of zero polynomial");
    return deg_ - chart_x().degree();
}

int HPoly::x_power() const
{
    if (is_zero()) throw MathError("x_power of zero polynomial");
    return deg_ - chart_y().degree();
}

HPoly HPoly::operator-() const
{
    HPoly r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
}

HPoly HPoly::operator+(const HPoly& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (deg_ != o.deg_)
        throw MathError("degree mismatch in homogeneous addition");
    std::vector<Rational> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return HPoly(deg_, std::move(r));
}

HPoly HPoly::operator-(const HPoly& o) const { return *this + (-o); }

HPoly HPoly::operator*(const HPoly& o) const
{
    if (is_zero() || o.is_zero()) return HPoly();
    std::vector<Rational> r(deg_ + o.deg_ + 1, Rational(0));
    for (int i = 0; i <= deg_; ++i) {
        if (rcs::is_zero(c_[i])) continue;
        for (int j = 0; j <= o.deg_; ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    return HPoly(deg_ + o.deg_, std::move(r));
}

HPoly HPoly::scaled(const Rational& q) const
{
    if (is_zero() || rcs::is_zero(q)) return HPoly();
    HPoly r(*this);
    for (auto& x : r.c_) x *= q;
    return r;
}

HPoly HPoly::pow(int e) const
{
    if (e < 0) throw MathError("negative power");
    HPoly r = HPoly::constant(Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Rational HPoly::eval(const Rational& x, const Rational& y) const
{
    if (rcs::is_zero(x) && rcs::is_zero(y))
        throw MathError("evaluation at (0,0)");
    if (is_zero()) return Rational(0);
    std::vector<Rational> xp(deg_ + 1, Rational(1)), yp(deg_ + 1, Rational(1));
    for (int i = 1; i <= deg_; ++i) {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    Rational v(0);
    for (int i = 0; i <= deg_; ++i)
        if (!rcs::is_zero(c_[i])) v += c_[i] * xp[i] * yp[deg_ - i];
    return v;
}

HPoly HPoly::substitute_linear(const Rational& a, const Rational& b,
                               const Rational& c, const Rational& d) const
{
    if (is_zero()) return HPoly();
    // HPoly(1, {c0, c1}) is c1*x + c0*y, so a*x + b*y stores as {b, a}.
    HPoly nx(1, {b, a});
    HPoly ny(1, {d, c});
    HPoly r;
    for (int i = 0; i <= deg_; ++i) {
        if (rcs::is_zero(c_[i])) continue;
        HPoly term = nx.pow(i) * ny.pow(deg_ - i);
        term = term.scaled(c_[i]);
        r = r.is_zero() ? term : r + term;
    }
    return r;
}

HPoly HPoly::divide_exact(const HPoly& d) const
{
    if (d.is_zero()) throw MathError("division by zero polynomial");
    if (is_zero()) return HPoly();
    if (deg_ < d.deg_) throw MathError("inexact homogeneous division");
    int yf = y_power(), yd = d.y_power();
    if (yf < yd) throw MathError("inexact homogeneous division");
    UPoly q = chart_x().divide_exact(d.chart_x());
    HPoly quot = HPoly::homogenize(q, deg_ - d.deg_);
    if (quot * d != *this) throw MathError("inexact homogeneous division");
    return quot;
}

bool HPoly::divides(const HPoly& f) const
{
    if (is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (f.deg_ < deg_) return false;
    if (f.y_power() < y_power()) return false;
    auto [q, r] = f.chart_x().divrem(chart_x());
    return r.is_zero();
}

Rational HPoly::content() const { return coeff_content(c_); }

HPoly HPoly::normalized() const
{
    if (is_zero()) return *this;
    Rational c = content();
    // Highest nonzero x-power coefficient decides the sign.
    for (int i = deg_; i >= 0; --i)
        if (!rcs::is_zero(c_[i])) {
            if (sign(c_[i]) < 0) c = -c;
            break;
        }
    return scaled(Rational(1) / c);
}

std::string HPoly::to_string(const std::string& x, const std::string& y) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg_; i >= 0; --i) {
        const Rational& q = c_[i];
        if (rcs::is_zero(q)) continue;
        Rational a = abs(q);
        if (first) {
            if (sign(q) < 0) os << "-";
            first = false;
        } else {
            os << (sign(q) < 0 ? " - " : " + ");
        }
        int ypow_ = deg_ - i;
        bool unit = (a == 1);
        bool has_var = (i > 0 || ypow_ > 0);
        if (!has_var || !unit) os << rat_to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << x;
            if (i > 1) os << "^" << i;
        }
        if (ypow_ > 0) {
            if (i > 0 || !unit) os << "*";
            os << y;
            if (ypow_ > 1) os << "^" << ypow_;
        }
    }
    return os.str();
}

HPoly gcd(const HPoly& f, const HPoly& g)
{
    if (f.is_zero() && g.is_zero()) throw MathError("gcd(0,0) undefined");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    // Shared pure-y factor from the x-chart, everything else univariate.
    int ymin = std::min(f.y_power(), g.y_power());
    UPoly u = gcd(f.chart_x(), g.chart_x());
    HPoly h = HPoly::homogenize(u, u.degree() + ymin);
    return h.normalized();
}

HPoly lcm(const HPoly& f, const HPoly& g)
{
    if (f.is_zero() || g.is_zero()) return HPoly();
    return (f * g).divide_exact(gcd(f, g)).normalized();
}

Rational resultant_h(const HPoly& f, const HPoly& g)
{
    if (f.is_zero() || g.is_zero())
        throw MathError("resultant with zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) { Rational v(1); for (int i = 0; i < n; ++i) v *= f.coeff(0); return v; }
    if (n == 0) { Rational v(1); for (int i = 0; i < m; ++i) v *= g.coeff(0); return v; }
    // Sylvester matrix built on the full homogeneous coefficient lists, so
    // roots at (1:0) are handled by the formal degrees.
    int size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
    Rational det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (!is_zero(s[r][col])) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) { std::swap(s[piv], s[col]); det = -det; }
        det *= s[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (is_zero(s[r][col])) continue;
            Rational fac = s[r][col] / s[col][col];
            for (int c = col; c < size; ++c) s[r][c] -= fac * s[col][c];
        }
    }
    return det;
}

int multiplicity(const HPoly& f, const HPoly& d)
{
    if (f.is_zero() || d.is_zero() || d.is_constant())
        throw MathError("multiplicity needs nonzero f and nonconstant divisor");
    int m = 0;
    HPoly rest = f;
    while (d.divides(rest) && !rest.is_constant()) {
        rest = rest.divide_exact(d);
        ++m;
    }
    return m;
}

} // namespace rcs
