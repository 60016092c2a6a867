#ifndef RCS_HPOLY_HPP
#define RCS_HPOLY_HPP

#include "core/upoly.hpp"

#include <string>
#include <vector>

namespace rcs {

/**
 * Homogeneous bivariate polynomial in a parameter pair (x:y).
 *
 * A degree-d form stores d+1 coefficients, index i holding the coefficient
 * of x^i y^(d-i).  The zero polynomial carries no degree (degree() == -1);
 * it acts as the additive identity for any degree.  Which letters the pair
 * uses — (t,v) for curve parameters, (s,u) for Smith variables — is purely
 * a printing concern.
 */
class HPoly {
public:
    HPoly() = default;
    HPoly(int degree, std::vector<Rational> coeffs);

    static HPoly zero() { return HPoly(); }
    static HPoly constant(const Rational& q);
    // x^i * y^(d-i) scaled by q.
    static HPoly monomial(const Rational& q, int i, int d);
    // Form of degree d with f(x,1) == u; requires deg(u) <= d.
    static HPoly homogenize(const UPoly& u, int d);

    bool is_zero() const { return deg_ < 0; }
    int degree() const { return deg_; }
    bool is_constant() const { return deg_ <= 0; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly chart_x() const; // f(x,1)
    UPoly chart_y() const; // f(1,y)
    // Exponent of the pure-y factor: degree() - deg(chart_x()).
    int y_power() const;
    int x_power() const;

    HPoly operator-() const;
    HPoly operator+(const HPoly& o) const; // equal degrees (or a zero side)
    HPoly operator-(const HPoly& o) const;
    HPoly operator*(const HPoly& o) const;
    bool operator==(const HPoly& o) const { return deg_ == o.deg_ && c_ == o.c_; }
    bool operator!=(const HPoly& o) const { return !(*this == o); }

    HPoly scaled(const Rational& q) const;
    HPoly pow(int e) const;

    Rational eval(const Rational& x, const Rational& y) const;

    // f(ax+by, cx+dy): linear parameter substitution.
    HPoly substitute_linear(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d) const;

    HPoly divide_exact(const HPoly& d) const;
    bool divides(const HPoly& f) const; // does *this divide f

    Rational content() const;
    HPoly normalized() const; // primitive, positive leading coefficient

    std::string to_string(const std::string& x = "t", const std::string& y = "v") const;

private:
    int deg_ = -1;
    std::vector<Rational> c_;
};

HPoly gcd(const HPoly& f, const HPoly& g);
HPoly lcm(const HPoly& f, const HPoly& g);

// Resultant of two forms of their stated degrees.
Rational resultant_h(const HPoly& f, const HPoly& g);

// Multiplicity of the (nonconstant, normally irreducible) divisor d in f.
int multiplicity(const HPoly& f, const HPoly& d);

} // namespace rcs

#endif
