#include "core/tripoly.hpp"

#include <algorithm>
#include <sstream>

namespace rcs {

int TriPoly::idx(int i, int j) const
{
    // Row i of the triangle starts after sum_{k<i} (deg+1-k) entries.
    return i * (deg_ + 1) - i * (i - 1) / 2 + j;
}

TriPoly::TriPoly(int degree, std::vector<Rational> cells)
{
    if (degree < 0 || cells.size() != static_cast<size_t>(cell_count(degree)))
        throw MathError("trivariate polynomial needs a full triangular grid");
    bool all_zero = std::all_of(cells.begin(), cells.end(),
                                [](const Rational& q) { return rcs::is_zero(q); });
    if (all_zero) return;
    deg_ = degree;
    c_ = std::move(cells);
}

Rational TriPoly::coeff(int i, int j) const
{
    if (is_zero() || i < 0 || j < 0 || i + j > deg_) return Rational(0);
    return c_[idx(i, j)];
}

void TriPoly::set_coeff(int i, int j, const Rational& q)
{
    if (is_zero() || i < 0 || j < 0 || i + j > deg_)
        throw MathError("coefficient index out of range");
    c_[idx(i, j)] = q;
}

TriPoly TriPoly::operator+(const TriPoly& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (deg_ != o.deg_) throw MathError("degree mismatch in trivariate addition");
    std::vector<Rational> r(c_);
    for (size_t k = 0; k < r.size(); ++k) r[k] += o.c_[k];
    return TriPoly(deg_, std::move(r));
}

TriPoly TriPoly::operator-() const
{
    TriPoly r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
}

TriPoly TriPoly::scaled(const Rational& q) const
{
    if (is_zero() || rcs::is_zero(q)) return TriPoly();
    TriPoly r(*this);
    for (auto& x : r.c_) x *= q;
    return r;
}

Rational TriPoly::eval(const Rational& x, const Rational& y, const Rational& w) const
{
    if (is_zero()) return Rational(0);
    std::vector<Rational> xp(deg_ + 1, Rational(1)), yp(deg_ + 1, Rational(1)),
        wp(deg_ + 1, Rational(1));
    for (int k = 1; k <= deg_; ++k) {
        xp[k] = xp[k - 1] * x;
        yp[k] = yp[k - 1] * y;
        wp[k] = wp[k - 1] * w;
    }
    Rational v(0);
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) {
            const Rational& q = c_[idx(i, j)];
            if (rcs::is_zero(q)) continue;
            v += q * xp[i] * yp[j] * wp[deg_ - i - j];
        }
    return v;
}

TriPoly TriPoly::derivative(int var) const
{
    if (is_zero() || deg_ == 0) return TriPoly();
    int d = deg_ - 1;
    std::vector<Rational> r(cell_count(d), Rational(0));
    auto ridx = [d](int i, int j) { return i * (d + 1) - i * (i - 1) / 2 + j; };
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) {
            const Rational& q = c_[idx(i, j)];
            if (rcs::is_zero(q)) continue;
            int k = deg_ - i - j;
            if (var == 0 && i > 0)
                r[ridx(i - 1, j)] += q * Rational(i);
            else if (var == 1 && j > 0)
                r[ridx(i, j - 1)] += q * Rational(j);
            else if (var == 2 && k > 0)
                r[ridx(i, j)] += q * Rational(k);
        }
    return TriPoly(d, std::move(r));
}

HPoly TriPoly::compose(const HPoly& a, const HPoly& b, const HPoly& c) const
{
    if (is_zero()) return HPoly();
    std::vector<HPoly> ap(deg_ + 1), bp(deg_ + 1), cp(deg_ + 1);
    ap[0] = bp[0] = cp[0] = HPoly::constant(Rational(1));
    for (int k = 1; k <= deg_; ++k) {
        ap[k] = ap[k - 1] * a;
        bp[k] = bp[k - 1] * b;
        cp[k] = cp[k - 1] * c;
    }
    HPoly out;
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) {
            const Rational& q = c_[idx(i, j)];
            if (rcs::is_zero(q)) continue;
            HPoly term = (ap[i] * bp[j] * cp[deg_ - i - j]).scaled(q);
            out = out.is_zero() ? term : out + term;
        }
    return out;
}

UPoly TriPoly::restrict_to_line(const std::array<Rational, 3>& p,
                                const std::array<Rational, 3>& q) const
{
    if (is_zero()) return UPoly();
    std::array<UPoly, 3> lin;
    for (int k = 0; k < 3; ++k) lin[k] = UPoly({p[k], q[k]});
    std::vector<UPoly> xp(deg_ + 1), yp(deg_ + 1), wp(deg_ + 1);
    xp[0] = yp[0] = wp[0] = UPoly::constant(Rational(1));
    for (int k = 1; k <= deg_; ++k) {
        xp[k] = xp[k - 1] * lin[0];
        yp[k] = yp[k - 1] * lin[1];
        wp[k] = wp[k - 1] * lin[2];
    }
    UPoly out;
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) {
            const Rational& cq = c_[idx(i, j)];
            if (rcs::is_zero(cq)) continue;
            out = out + (xp[i] * yp[j] * wp[deg_ - i - j]).scaled(cq);
        }
    return out;
}

Rational TriPoly::content() const { return coeff_content(c_); }

TriPoly TriPoly::normalized() const
{
    if (is_zero()) return *this;
    Rational c = content();
    for (const Rational& q : c_)
        if (!rcs::is_zero(q)) {
            if (sign(q) < 0) c = -c;
            break;
        }
    return scaled(Rational(1) / c);
}

std::string TriPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg_; i >= 0; --i)
        for (int j = deg_ - i; j >= 0; --j) {
            const Rational& q = c_[idx(i, j)];
            if (rcs::is_zero(q)) continue;
            Rational a = abs(q);
            if (first) {
                if (sign(q) < 0) os << "-";
                first = false;
            } else {
                os << (sign(q) < 0 ? " - " : " + ");
            }
            std::string vars;
            auto add = [&vars](const char* v, int e) {
                if (e == 0) return;
                if (!vars.empty()) vars += "*";
                vars += v;
                if (e > 1) vars += "^" + std::to_string(e);
            };
            add("x", i);
            add("y", j);
            add("w", deg_ - i - j);
            if (vars.empty() || a != 1) os << rat_to_string(a);
            if (!vars.empty()) {
                if (a != 1) os << "*";
                os << vars;
            }
        }
    return os.str();
}

} // namespace rcs
