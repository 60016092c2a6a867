#ifndef RCS_RATIONAL_HPP
#define RCS_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcs {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as they are built through arithmetic or canonicalize().
using Int = mpz_class;
using Rational = mpq_class;

// Raised when an operation's precondition is violated (inexact division,
// degree mismatch, degenerate input, ...).  The C API maps these to codes.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long n, long d = 1)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Parses "p", "-p" or "p/q" in base 10.
inline Rational rat_from_string(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw MathError("invalid rational literal: '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw MathError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

// Positive rational c with (f_i / c) integral and collectively coprime.
// Defined for a nonempty list with at least one nonzero entry.
inline Rational coeff_content(const std::vector<Rational>& cs)
{
    Int num_gcd = 0, den_lcm = 1;
    for (const Rational& q : cs) {
        if (is_zero(q)) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (num_gcd == 0)
        throw MathError("content of the zero coefficient list");
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

} // namespace rcs

#endif
