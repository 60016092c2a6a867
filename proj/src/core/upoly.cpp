#include "core/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace rcs {

void UPoly::trim()
{
    while (!c_.empty() && rcs::is_zero(c_.back())) c_.pop_back();
}

UPoly UPoly::constant(const Rational& q)
{
    UPoly p;
    if (!rcs::is_zero(q)) p.c_.push_back(q);
    return p;
}

UPoly UPoly::monomial(const Rational& q, int power)
{
    UPoly p;
    if (!rcs::is_zero(q)) {
        p.c_.assign(power + 1, Rational(0));
        p.c_[power] = q;
    }
    return p;
}

Rational UPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

const Rational& UPoly::lc() const
{
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const
{
    UPoly r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const
{
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const
{
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (rcs::is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& q) const
{
    if (rcs::is_zero(q)) return UPoly();
    UPoly r(*this);
    for (auto& x : r.c_) x *= q;
    return r;
}

UPoly UPoly::shifted(int k) const
{
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> r(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const
{
    if (d.is_zero()) throw MathError("division by zero polynomial");
    UPoly q, r(*this);
    std::vector<Rational> qc;
    int dd = d.degree();
    if (r.degree() >= dd) qc.assign(r.degree() - dd + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rational f = r.lc() / d.lc();
        qc[k] = f;
        r = r - d.scaled(f).shifted(k);
    }
    return {UPoly(std::move(qc)), r};
}

UPoly UPoly::divide_exact(const UPoly& d) const
{
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& x) const
{
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rational UPoly::content() const { return coeff_content(c_); }

UPoly UPoly::normalized() const
{
    if (is_zero()) return *this;
    Rational c = content();
    if (sign(lc()) < 0) c = -c;
    return scaled(Rational(1) / c);
}

std::string UPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& q = c_[i];
        if (rcs::is_zero(q)) continue;
        Rational a = abs(q);
        if (first) {
            if (sign(q) < 0) os << "-";
            first = false;
        } else {
            os << (sign(q) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) os << rat_to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly gcd(const UPoly& f, const UPoly& g)
{
    if (f.is_zero() && g.is_zero()) throw MathError("gcd(0,0) undefined");
    UPoly a = f, b = g;
    while (!b.is_zero()) {
        UPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.normalized();
}

UPoly lcm(const UPoly& f, const UPoly& g)
{
    if (f.is_zero() || g.is_zero()) return UPoly();
    return (f * g).divide_exact(gcd(f, g)).normalized();
}

Rational resultant(const UPoly& f, const UPoly& g)
{
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw MathError("resultant with zero polynomial");
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) { Rational v(1); for (int i = 0; i < n; ++i) v *= f.coeff(0); return v; }
    if (n == 0) { Rational v(1); for (int i = 0; i < m; ++i) v *= g.coeff(0); return v; }

    // Sylvester matrix: n rows of f's coefficients, m rows of g's.
    int size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);

    // Exact Gaussian elimination; determinant is the product of pivots.
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

} // namespace rcs
