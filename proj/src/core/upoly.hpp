#ifndef RCS_UPOLY_HPP
#define RCS_UPOLY_HPP

#include "core/rational.hpp"

#include <utility>
#include <vector>

namespace rcs {

/**
 * Dense univariate polynomial over the rationals.
 *
 * Coefficients are stored ascending by power with no trailing zeros; the
 * zero polynomial is the empty list and reports degree -1.
 */
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rational& q);
    static UPoly monomial(const Rational& q, int power);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of x^i, zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& lc() const; // leading coefficient, nonzero polynomial only

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly scaled(const Rational& q) const;
    UPoly shifted(int k) const; // * x^k

    // Euclidean division; divisor must be nonzero.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const;
    // Quotient of an exact division; throws MathError on a remainder.
    UPoly divide_exact(const UPoly& d) const;

    UPoly derivative() const;
    Rational eval(const Rational& x) const;

    // Positive rational c with *this/c primitive (integer, coprime coeffs).
    Rational content() const;
    // Primitive with positive leading coefficient; zero stays zero.
    UPoly normalized() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Monic-free polynomial gcd, normalized primitive with positive leading
// coefficient; gcd(0,0) is an error.
UPoly gcd(const UPoly& f, const UPoly& g);
UPoly lcm(const UPoly& f, const UPoly& g);

// Sylvester resultant of f and g (their true degrees).  Res of two
// constants is 1; Res(const c, g) = c^deg(g).
Rational resultant(const UPoly& f, const UPoly& g);

} // namespace rcs

#endif
