#ifndef RCS_TEST_ORACLES_HPP
#define RCS_TEST_ORACLES_HPP

// Independent oracles for the test suites.  Everything here recomputes
// results through routes the library does not use: Laplace expansion
// instead of fraction-free elimination, divisor enumeration instead of
// Euclid, explicit Sylvester matrices instead of companion machinery.

#include "core/polymat.hpp"
#include "core/resultants.hpp"

#include <functional>
#include <random>

namespace rcs::test {

// Determinant by recursive cofactor expansion.
UPoly laplace_det(const PolyMat& m);
HPoly laplace_det(const HPolyMat& m);

// D_k = gcd of all k x k minors, via Laplace determinants.
std::vector<UPoly> minor_det_factors(const PolyMat& m);
std::vector<HPoly> minor_det_factors(const HPolyMat& m);

// Sylvester resultant of the stated formal degrees, by Laplace expansion
// of the explicit matrix.
Rational sylvester_resultant(const UPoly& f, const UPoly& g);

// gcd of two monomial-factorable homogeneous forms by brute-force divisor
// enumeration over t^a v^b candidates; requires both inputs to be
// monomials times rational units.
HPoly monomial_gcd_bruteforce(const HPoly& f, const HPoly& g);

// Deterministic random data.  The raw engine output is reduced modulo the
// range so results are identical across standard libraries.
class Rng {
public:
    explicit Rng(unsigned long long seed) : eng_(seed) {}
    long pick(long lo, long hi); // inclusive
    Rational coeff(long bound = 3);
    UPoly upoly(int degree, long bound = 3, bool exact_degree = true);
    HPoly hpoly(int degree, long bound = 3);
    BiHPoly bihpoly(int deg_su, int deg_tv, long bound = 2);

private:
    std::mt19937_64 eng_;
};

} // namespace rcs::test

#endif
