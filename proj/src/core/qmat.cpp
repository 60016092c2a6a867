#include "core/qmat.hpp"

#include <algorithm>

namespace rcs {

QMat QMat::operator*(const QMat& o) const
{
    if (c_ != o.r_) throw MathError("matrix product shape mismatch");
    QMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rational& v = at(i, k);
            if (is_zero(v)) continue;
            for (int j = 0; j < o.c_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

std::vector<int> QMat::rref()
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int piv = -1;
        for (int i = row; i < r_; ++i)
            if (!is_zero(at(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c_; ++j) std::swap(at(piv, j), at(row, j));
        Rational inv = Rational(1) / at(row, col);
        for (int j = col; j < c_; ++j) at(row, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == row || is_zero(at(i, col))) continue;
            Rational f = at(i, col);
            for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMat::rank() const
{
    QMat m(*this);
    return static_cast<int>(m.rref().size());
}

Rational QMat::det() const
{
    if (r_ != c_) throw MathError("determinant of a non-square matrix");
    QMat m(*this);
    Rational d(1);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (!is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int i = col + 1; i < r_; ++i) {
            if (is_zero(m.at(i, col))) continue;
            Rational f = m.at(i, col) / m.at(col, col);
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::vector<std::vector<Rational>> QMat::nullspace() const
{
    QMat m(*this);
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(c_, Rational(0));
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> QMat::solve(const std::vector<Rational>& b) const
{
    if (static_cast<int>(b.size()) != r_) throw MathError("rhs size mismatch");
    QMat aug(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_)
        throw MathError("inconsistent linear system");
    std::vector<Rational> x(c_, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<int>(r), c_);
    return x;
}

} // namespace rcs
