#ifndef RCS_QMAT_HPP
#define RCS_QMAT_HPP

#include "core/rational.hpp"

#include <vector>

namespace rcs {

// Dense rational matrix with the exact linear algebra the rest of the
// library leans on: rank, determinant, nullspace, linear solve.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0))
    {
        if (rows <= 0 || cols <= 0) throw MathError("matrix dimensions must be positive");
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    QMat operator*(const QMat& o) const;

    int rank() const;
    Rational det() const; // square only

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref();

    // Basis of the right nullspace, one vector per column, deterministic
    // (standard free-variable construction from the RREF).
    std::vector<std::vector<Rational>> nullspace() const;

    // Solves A x = b; throws if inconsistent.  Underdetermined systems get
    // the particular solution with all free variables zero.
    std::vector<Rational> solve(const std::vector<Rational>& b) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

} // namespace rcs

#endif
