#ifndef RCS_FACTOR_HPP
#define RCS_FACTOR_HPP

#include "core/hpoly.hpp"
#include "core/upoly.hpp"

#include <utility>
#include <vector>

namespace rcs {

struct UFactor {
    UPoly factor; // primitive, positive leading coefficient
    int multiplicity;
};

struct HFactor {
    HPoly factor;
    int multiplicity;
};

// Squarefree parts.
UPoly squarefree_part(const UPoly& f);
HPoly squarefree_part(const HPoly& f);

/**
 * Factorization over the rationals: squarefree decomposition, rational
 * root extraction, full degree <= 3 handling by the rational root test,
 * and quartics split into quadratics via the resolvent cubic.  Squarefree
 * residuals of degree >= 5 are kept as single factors.
 *
 * The product of factor^multiplicity equals the input up to a positive
 * rational unit.
 */
std::vector<UFactor> factor_rational(const UPoly& f);
std::vector<HFactor> factor_rational(const HPoly& f);

// All rational roots with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& f);

// Pairwise-coprime (gcd-free) basis generating the same factors; inputs
// may repeat and may be reducible.  Constants are dropped.
std::vector<HPoly> gcd_free_basis(const std::vector<HPoly>& inputs);

struct Interval {
    Rational lo, hi; // lo < root <= hi, or lo == hi for an exact rational root
};

// Sturm-certified isolating intervals for the real roots of a squarefree
// polynomial; throws on non-squarefree input.
std::vector<Interval> isolate_real_roots(const UPoly& f);

} // namespace rcs

#endif
