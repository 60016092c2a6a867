#ifndef RCS_MUBASIS_HPP
#define RCS_MUBASIS_HPP

#include "core/polymat.hpp"
#include "core/tripoly.hpp"

#include <vector>

namespace rcs {

/**
 * Degree-n rational planar curve P(t,v) = (a, b, c) in homogeneous form.
 * The components must be relatively prime and linearly independent (the
 * parametrized curve is not a line).
 */
struct CurveSpec {
    int n = 0;
    HPoly a, b, c;
};

// Validates and builds a CurveSpec; throws MathError naming the violated
// invariant otherwise.
CurveSpec make_curve(const HPoly& a, const HPoly& b, const HPoly& c);

/// A polynomial vector L = (A,B,C) with L . P == 0.
struct Syzygy {
    HPoly A, B, C;
    int degree() const; // common formal degree
    HPoly dot(const HPoly& x, const HPoly& y, const HPoly& z) const;
};

Syzygy cross(const Syzygy& p, const Syzygy& q); // componentwise cross product

/// A basis (p, q) of the syzygy module, deg p = mu <= deg q = n - mu.
struct MuBasis {
    Syzygy p, q;
    int mu = 0;
    Rational k; // p x q = k P
};

// All syzygies of the given degree, as a deterministic basis.
std::vector<Syzygy> syzygy_space(const CurveSpec& curve, int degree);

// Lowest-degree construction via exact nullspaces of the syzygy systems.
MuBasis compute_mubasis(const CurveSpec& curve);

// Checks the three basis contracts exactly and reports k.
CheckReport verify_mubasis(const CurveSpec& curve, const MuBasis& basis);

// Implicit equation by the resultant of the two moving lines p.X and q.X,
// recovered exactly through evaluation and triangular interpolation.  The
// result is normalized and satisfies f(P(t,v)) == 0 identically.
TriPoly implicitize(const CurveSpec& curve, const MuBasis& basis);

// Degree of the reduced implicit curve, certified by sweeping enough lines
// through a point off the curve; equals n exactly for proper inputs.
int implicit_curve_degree(const CurveSpec& curve, const TriPoly& f);

// True iff the parametrization is generically one-to-one.
bool check_proper(const CurveSpec& curve, const MuBasis& basis);

} // namespace rcs

#endif
