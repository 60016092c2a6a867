#ifndef RCS_TRIPOLY_HPP
#define RCS_TRIPOLY_HPP

#include "core/hpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace rcs {

/**
 * Homogeneous trivariate polynomial in (x, y, w), dense over the monomials
 * x^i y^j w^(d-i-j).  Used for implicit equations of curves.
 */
class TriPoly {
public:
    TriPoly() = default;
    TriPoly(int degree, std::vector<Rational> cells); // cells indexed by idx(i,j)

    static TriPoly zero() { return TriPoly(); }

    bool is_zero() const { return deg_ < 0; }
    int degree() const { return deg_; }
    Rational coeff(int i, int j) const; // of x^i y^j w^(deg-i-j)
    void set_coeff(int i, int j, const Rational& q);

    TriPoly operator+(const TriPoly& o) const;
    TriPoly operator-() const;
    TriPoly scaled(const Rational& q) const;
    bool operator==(const TriPoly& o) const { return deg_ == o.deg_ && c_ == o.c_; }

    Rational eval(const Rational& x, const Rational& y, const Rational& w) const;

    // Partial derivative along variable 0=x, 1=y, 2=w.
    TriPoly derivative(int var) const;

    // f(a(t,v), b(t,v), c(t,v)) for forms a,b,c of a common degree.
    HPoly compose(const HPoly& a, const HPoly& b, const HPoly& c) const;

    // Restriction to the line {P + lambda*Q} as a univariate in lambda.
    UPoly restrict_to_line(const std::array<Rational, 3>& p,
                           const std::array<Rational, 3>& q) const;

    Rational content() const;
    TriPoly normalized() const;

    std::string to_string() const;

    static int cell_count(int degree) { return (degree + 1) * (degree + 2) / 2; }
    // Triangular index of (i,j) with i+j <= degree.
    int idx(int i, int j) const;

private:
    int deg_ = -1;
    std::vector<Rational> c_;
};

} // namespace rcs

#endif
