#ifndef RCS_POLYMAT_HPP
#define RCS_POLYMAT_HPP

#include "core/hpoly.hpp"
#include "core/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rcs {

/// Rectangular matrix over Q[x].
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(int rows, int cols);
    static PolyMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    UPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * c_ + j]; }
    const UPoly& at(int i, int j) const { return e_[static_cast<size_t>(i) * c_ + j]; }
    bool is_zero() const;

    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat scaled(const UPoly& f) const;
    PolyMat transposed() const;
    bool operator==(const PolyMat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

    // Fraction-free (Bareiss) determinant; square only.
    UPoly det() const;
    // Rank over the rational function field.
    int rank() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<UPoly> e_;
};

/// Rectangular matrix over homogeneous bivariate forms (mixed degrees allowed).
class HPolyMat {
public:
    HPolyMat() = default;
    HPolyMat(int rows, int cols);

    int rows() const { return r_; }
    int cols() const { return c_; }
    HPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * c_ + j]; }
    const HPoly& at(int i, int j) const { return e_[static_cast<size_t>(i) * c_ + j]; }
    bool is_zero() const;

    HPolyMat operator*(const HPolyMat& o) const;
    HPolyMat transposed() const;
    bool operator==(const HPolyMat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

    // Chart specializations A(x,1) and A(1,y).
    PolyMat chart_x() const;
    PolyMat chart_y() const;

    HPoly det() const;
    int rank() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<HPoly> e_;
};

/// Invariant factors of a univariate polynomial matrix, trailing zeros for
/// rank deficiency, plus optional unimodular transforms.
struct SmithFormU {
    std::vector<UPoly> factors; // primitive, positive leading coefficient; 1s as constants
    std::optional<PolyMat> left, right;
    int rank() const;
};

struct SmithFormH {
    std::vector<HPoly> factors;
    int rank() const;
};

struct DetFactorsU {
    std::vector<UPoly> D; // D[k-1] = gcd of all k x k minors, up to rank
};

struct DetFactorsH {
    std::vector<HPoly> D;
};

/**
 * Smith normal form over Q[x]: gcd-pivot elimination with the fixed pivot
 * rule (lowest degree, then lowest position).  With track_transforms the
 * returned left/right are products of elementary matrices satisfying
 * left * A * right == diag(factors).
 */
SmithFormU snf_univariate(const PolyMat& a, bool track_transforms = false);

/**
 * Smith normal form of a homogeneous matrix, assembled from the Smith
 * forms of the two charts: the chart quotient chains are homogenized at
 * their own degrees and recombined factor-by-factor with LCMs.
 */
SmithFormH snf_homogeneous(const HPolyMat& a);

// Determinant factors D_k.  Exhaustive minor enumeration up to the cutoff
// size (default 6), successive products of invariant factors beyond it.
DetFactorsU det_factors(const PolyMat& a, int minor_cutoff = 6);
DetFactorsH det_factors(const HPolyMat& a, int minor_cutoff = 6);

// Exact rank after evaluating every entry at (x0, y0).
int rank_at(const HPolyMat& a, const Rational& x0, const Rational& y0);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> notes;
    void fail(const std::string& msg)
    {
        ok = false;
        notes.push_back(msg);
    }
    void note(const std::string& msg) { notes.push_back(msg); }
};

// Divisibility between invariant factors of A, B and AB:
// a_{i1}...a_{ik} b_{j1}...b_{jk} | c_{i1+j1-1}...c_{ik+jk-k}.
CheckReport check_product_divisibility(const PolyMat& a, const PolyMat& b,
                                       int max_tuple = 3);

} // namespace rcs

#endif
