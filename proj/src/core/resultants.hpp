#ifndef RCS_RESULTANTS_HPP
#define RCS_RESULTANTS_HPP

#include "core/bihpoly.hpp"
#include "core/polymat.hpp"
#include "core/qmat.hpp"

#include <vector>

namespace rcs {

/**
 * Symmetric Bezout matrix of two bihomogeneous polynomials of equal
 * (t,v)-degree m, eliminating (t,v).  Entry (i,j) is the coefficient of
 * t^i a^j in the Cayley quotient (F(t)G(a) - F(a)G(t)) / (t - a), a form
 * in (s,u); rows and columns are indexed by ascending powers.
 *
 * Built from the closed-form entry sums and cross-checked against an
 * explicit Cayley-quotient division on every call.
 */
struct BezoutMatrix {
    int size = 0;
    HPolyMat mat;
};

BezoutMatrix bezout_tv(const BiHPoly& F, const BiHPoly& G);
// Eliminates (s,u) instead; entries are forms in (t,v).
BezoutMatrix bezout_su(const BiHPoly& F, const BiHPoly& G);

// ---------------------------------------------------------------------
// Companion machinery over the rationals.

// Companion matrix Delta_P: subdiagonal p0, last column -(p_n,...,p_1).
QMat companion(const UPoly& P);
// Horner evaluation of Q at a square rational matrix.
QMat eval_poly_at_matrix(const UPoly& Q, const QMat& M);
// H(Q,P) = J Q(Delta_{P/p0}^T) J.
QMat companion_H(const UPoly& Q, const UPoly& P);
// Hybrid Bezout matrix B(Q,P) = T_m H(Q,P), deg Q = m <= deg P = n.
QMat hybrid_bezout(const UPoly& Q, const UPoly& P);

// ---------------------------------------------------------------------
// The same machinery over polynomial coefficient rings.  Polynomials in
// the eliminated variable are coefficient vectors, ascending power; the
// vector length fixes the formal degree.

// Coefficients in Q[x]:
PolyMat companion_x(const std::vector<UPoly>& P);
// p0^deg(Q) * H(Q,P), which is polynomial without any division.
PolyMat companion_H_scaled_x(const std::vector<UPoly>& Q, const std::vector<UPoly>& P);
PolyMat hybrid_bezout_x(const std::vector<UPoly>& Q, const std::vector<UPoly>& P);
// Sylvester resultant of Q and P over Q[x] at their formal degrees.
UPoly resultant_x(const std::vector<UPoly>& Q, const std::vector<UPoly>& P);

// Hybrid Bezout of bihomogeneous polynomials, eliminating (t,v); entries
// are forms in (s,u).  Requires deg_tv(Q) <= deg_tv(P) and a nonzero
// leading (t,v)-coefficient of P.
HPolyMat hybrid_bezout_tv(const BiHPoly& Q, const BiHPoly& P);
HPolyMat hybrid_bezout_su(const BiHPoly& Q, const BiHPoly& P);

// ---------------------------------------------------------------------
// Verification operations.

// Padding lemma: S(B((sv-tu)F,(sv-tu)G)) == diag(S(B(F,G)), 0).
CheckReport check_cayley_padding(const BiHPoly& F, const BiHPoly& G);

// Invariant factors of B(f,h), B(g,h), B(fg,h) over Q[x] satisfy
// a_{i1}..a_{ik} b_{j1}..b_{jk} | h0^l c_{i1+j1-1}..c_{ik+jk-k} with
// 0 <= l <= deg f + deg g.  Requires deg f + deg g <= deg h, h0 != 0.
CheckReport check_product_factor_divisibility(const std::vector<UPoly>& f,
                                              const std::vector<UPoly>& g,
                                              const std::vector<UPoly>& h,
                                              int max_tuple = 3);

} // namespace rcs

#endif
