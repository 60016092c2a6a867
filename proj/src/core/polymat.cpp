#include "core/polymat.hpp"
#include "core/qmat.hpp"

#include <algorithm>
#include <functional>

namespace rcs {

// ---------------------------------------------------------------------
// PolyMat

PolyMat::PolyMat(int rows, int cols) : r_(rows), c_(cols)
{
    if (rows <= 0 || cols <= 0) throw MathError("matrix dimensions must be positive");
    e_.assign(static_cast<size_t>(rows) * cols, UPoly());
}

PolyMat PolyMat::identity(int n)
{
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = UPoly::constant(Rational(1));
    return m;
}

bool PolyMat::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const UPoly& p) { return p.is_zero(); });
}

PolyMat PolyMat::operator*(const PolyMat& o) const
{
    if (c_ != o.r_) throw MathError("matrix product shape mismatch");
    PolyMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const UPoly& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j)
                if (!o.at(k, j).is_zero()) out.at(i, j) = out.at(i, j) + v * o.at(k, j);
        }
    return out;
}

PolyMat PolyMat::operator+(const PolyMat& o) const
{
    if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix sum shape mismatch");
    PolyMat out(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

PolyMat PolyMat::scaled(const UPoly& f) const
{
    PolyMat out(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * f;
    return out;
}

PolyMat PolyMat::transposed() const
{
    PolyMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

namespace {

// Fraction-free (Bareiss) elimination over an exact domain with division.
// Returns the determinant for square inputs when want_det, else the rank.
template <typename Mat, typename Entry>
Entry bareiss_det(const Mat& m0, const Entry& one)
{
    Mat m = m0;
    int n = m.rows();
    Entry prev = one;
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) return Entry(); // zero determinant
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Entry num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.is_zero() ? Entry() : num.divide_exact(prev);
            }
            m.at(i, k) = Entry();
        }
        prev = m.at(k, k);
    }
    Entry d = m.at(n - 1, n - 1);
    if (negate && !d.is_zero()) {
        d = d.scaled(Rational(-1));
    }
    return d;
}

template <typename Mat, typename Entry>
int bareiss_rank(const Mat& m0, const Entry& one)
{
    Mat m = m0;
    int rows = m.rows(), cols = m.cols();
    Entry prev = one;
    int rank = 0;
    for (int k = 0; k < std::min(rows, cols); ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < rows && pi < 0; ++i)
            for (int j = k; j < cols; ++j)
                if (!m.at(i, j).is_zero()) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != k)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pi, j), m.at(k, j));
        if (pj != k)
            for (int i = 0; i < rows; ++i) std::swap(m.at(i, pj), m.at(i, k));
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                Entry num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.is_zero() ? Entry() : num.divide_exact(prev);
            }
            m.at(i, k) = Entry();
        }
        prev = m.at(k, k);
        ++rank;
    }
    return rank;
}

} // namespace

UPoly PolyMat::det() const
{
    if (r_ != c_) throw MathError("determinant of a non-square matrix");
    if (r_ == 1) return at(0, 0);
    return bareiss_det<PolyMat, UPoly>(*this, UPoly::constant(Rational(1)));
}

int PolyMat::rank() const
{
    return bareiss_rank<PolyMat, UPoly>(*this, UPoly::constant(Rational(1)));
}

// ---------------------------------------------------------------------
// HPolyMat

HPolyMat::HPolyMat(int rows, int cols) : r_(rows), c_(cols)
{
    if (rows <= 0 || cols <= 0) throw MathError("matrix dimensions must be positive");
    e_.assign(static_cast<size_t>(rows) * cols, HPoly());
}

bool HPolyMat::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const HPoly& p) { return p.is_zero(); });
}

HPolyMat HPolyMat::operator*(const HPolyMat& o) const
{
    if (c_ != o.r_) throw MathError("matrix product shape mismatch");
    HPolyMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const HPoly& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j)
                if (!o.at(k, j).is_zero()) out.at(i, j) = out.at(i, j) + v * o.at(k, j);
        }
    return out;
}

HPolyMat HPolyMat::transposed() const
{
    HPolyMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

PolyMat HPolyMat::chart_x() const
{
    PolyMat out(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j).chart_x();
    return out;
}

PolyMat HPolyMat::chart_y() const
{
    PolyMat out(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j).chart_y();
    return out;
}

HPoly HPolyMat::det() const
{
    if (r_ != c_) throw MathError("determinant of a non-square matrix");
    if (r_ == 1) return at(0, 0);
    return bareiss_det<HPolyMat, HPoly>(*this, HPoly::constant(Rational(1)));
}

int HPolyMat::rank() const
{
    return bareiss_rank<HPolyMat, HPoly>(*this, HPoly::constant(Rational(1)));
}

// ---------------------------------------------------------------------
// Smith normal form over Q[x]

int SmithFormU::rank() const
{
    int r = 0;
    for (const UPoly& f : factors)
        if (!f.is_zero()) ++r;
    return r;
}

int SmithFormH::rank() const
{
    int r = 0;
    for (const HPoly& f : factors)
        if (!f.is_zero()) ++r;
    return r;
}

SmithFormU snf_univariate(const PolyMat& a, bool track_transforms)
{
    if (a.is_zero()) throw MathError("Smith normal form of the zero matrix");
    PolyMat m = a;
    int rows = m.rows(), cols = m.cols(), size = std::min(rows, cols);
    PolyMat left, right;
    if (track_transforms) {
        left = PolyMat::identity(rows);
        right = PolyMat::identity(cols);
    }

    auto swap_rows = [&](int i, int k) {
        if (i == k) return;
        for (int j = 0; j < cols; ++j) std::swap(m.at(i, j), m.at(k, j));
        if (track_transforms)
            for (int j = 0; j < rows; ++j) std::swap(left.at(i, j), left.at(k, j));
    };
    auto swap_cols = [&](int j, int k) {
        if (j == k) return;
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, j), m.at(i, k));
        if (track_transforms)
            for (int i = 0; i < cols; ++i) std::swap(right.at(i, j), right.at(i, k));
    };
    // row_i -= q * row_k
    auto row_sub = [&](int i, int k, const UPoly& q) {
        if (q.is_zero()) return;
        for (int j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) - q * m.at(k, j);
        if (track_transforms)
            for (int j = 0; j < rows; ++j)
                left.at(i, j) = left.at(i, j) - q * left.at(k, j);
    };
    auto col_sub = [&](int j, int k, const UPoly& q) {
        if (q.is_zero()) return;
        for (int i = 0; i < rows; ++i) m.at(i, j) = m.at(i, j) - q * m.at(i, k);
        if (track_transforms)
            for (int i = 0; i < cols; ++i)
                right.at(i, j) = right.at(i, j) - q * right.at(i, k);
    };
    auto scale_row = [&](int i, const Rational& u) {
        for (int j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j).scaled(u);
        if (track_transforms)
            for (int j = 0; j < rows; ++j) left.at(i, j) = left.at(i, j).scaled(u);
    };

    for (int k = 0; k < size; ++k) {
        // Pivot: lowest degree, then lowest (row, col).
        auto find_pivot = [&](int& pi, int& pj) {
            pi = pj = -1;
            int best = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j) {
                    const UPoly& e = m.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        pi = i;
                        pj = j;
                    }
                }
            return pi >= 0;
        };

        int pi, pj;
        if (!find_pivot(pi, pj)) break; // all-zero tail
        swap_rows(pi, k);
        swap_cols(pj, k);

        while (true) {
            bool reduced_all = true;
            for (int i = k + 1; i < rows; ++i) {
                if (m.at(i, k).is_zero()) continue;
                UPoly q = m.at(i, k).divrem(m.at(k, k)).first;
                row_sub(i, k, q);
                if (!m.at(i, k).is_zero()) reduced_all = false;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (m.at(k, j).is_zero()) continue;
                UPoly q = m.at(k, j).divrem(m.at(k, k)).first;
                col_sub(j, k, q);
                if (!m.at(k, j).is_zero()) reduced_all = false;
            }
            if (!reduced_all) {
                // A remainder of smaller degree exists; promote it.
                if (!find_pivot(pi, pj)) throw MathError("pivot vanished");
                swap_rows(pi, k);
                swap_cols(pj, k);
                continue;
            }
            // Pivot must divide every remaining entry.
            int bi = -1, bj = -1;
            for (int i = k + 1; i < rows && bi < 0; ++i)
                for (int j = k + 1; j < cols; ++j) {
                    if (m.at(i, j).is_zero()) continue;
                    if (!m.at(i, j).divrem(m.at(k, k)).second.is_zero()) {
                        bi = i;
                        bj = j;
                        break;
                    }
                }
            if (bi < 0) break;
            // Fold the offending row into row k and restart the reduction.
            row_sub(k, bi, UPoly::constant(Rational(-1)));
        }
        // Primitive pivot with positive leading coefficient.
        Rational c = m.at(k, k).content();
        if (sign(m.at(k, k).lc()) < 0) c = -c;
        if (c != 1) scale_row(k, Rational(1) / c);
    }

    SmithFormU out;
    out.factors.reserve(size);
    for (int k = 0; k < size; ++k) out.factors.push_back(m.at(k, k));
    if (track_transforms) {
        out.left = std::move(left);
        out.right = std::move(right);
    }
    return out;
}

// ---------------------------------------------------------------------
// Homogeneous Smith normal form via the two charts.

namespace {

HPoly homogenize_chart_y(const UPoly& q)
{
    // Form f with f(1,y) == q, homogenized at deg(q).
    if (q.is_zero()) return HPoly();
    int d = q.degree();
    std::vector<Rational> c(d + 1);
    for (int j = 0; j <= d; ++j) c[d - j] = q.coeff(j);
    return HPoly(d, std::move(c));
}

std::vector<UPoly> quotient_chain(const std::vector<UPoly>& factors, int rank)
{
    std::vector<UPoly> q;
    UPoly prev = UPoly::constant(Rational(1));
    for (int i = 0; i < rank; ++i) {
        q.push_back(factors[i].divide_exact(prev).normalized());
        prev = factors[i];
    }
    return q;
}

} // namespace

SmithFormH snf_homogeneous(const HPolyMat& a)
{
    if (a.is_zero()) throw MathError("Smith normal form of the zero matrix");
    SmithFormU sx = snf_univariate(a.chart_x());
    SmithFormU sy = snf_univariate(a.chart_y());
    if (sx.rank() != sy.rank())
        throw MathError("chart rank mismatch in homogeneous Smith form");
    int rank = sx.rank();
    int size = std::min(a.rows(), a.cols());

    std::vector<UPoly> qx = quotient_chain(sx.factors, rank);
    std::vector<UPoly> qy = quotient_chain(sy.factors, rank);

    SmithFormH out;
    HPoly running = HPoly::constant(Rational(1));
    for (int i = 0; i < rank; ++i) {
        HPoly dx = HPoly::homogenize(qx[i], qx[i].degree());
        HPoly dy = homogenize_chart_y(qy[i]);
        HPoly d = lcm(dx, dy);
        running = (running * d).normalized();
        out.factors.push_back(running);
    }
    for (int i = rank; i < size; ++i) out.factors.push_back(HPoly());
    return out;
}

// ---------------------------------------------------------------------
// Determinant factors.

namespace {

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <typename Mat, typename Entry, typename GcdFn>
std::vector<Entry> minor_gcds(const Mat& a, int upto, GcdFn gcd_fn)
{
    std::vector<Entry> out;
    for (int k = 1; k <= upto; ++k) {
        Entry g;
        bool any = false;
        subsets(a.rows(), k, [&](const std::vector<int>& ri) {
            subsets(a.cols(), k, [&](const std::vector<int>& ci) {
                Mat sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
                Entry d = sub.det();
                if (d.is_zero()) return;
                g = any ? gcd_fn(g, d) : d.normalized();
                any = true;
            });
        });
        if (!any) break; // all k x k minors vanish; rank < k
        out.push_back(g);
    }
    return out;
}

} // namespace

DetFactorsU det_factors(const PolyMat& a, int minor_cutoff)
{
    if (a.is_zero()) throw MathError("determinant factors of the zero matrix");
    int size = std::min(a.rows(), a.cols());
    DetFactorsU out;
    if (size <= minor_cutoff) {
        out.D = minor_gcds<PolyMat, UPoly>(a, size,
                                           [](const UPoly& x, const UPoly& y) { return gcd(x, y); });
        return out;
    }
    SmithFormU s = snf_univariate(a);
    UPoly running = UPoly::constant(Rational(1));
    for (const UPoly& f : s.factors) {
        if (f.is_zero()) break;
        running = (running * f).normalized();
        out.D.push_back(running);
    }
    return out;
}

DetFactorsH det_factors(const HPolyMat& a, int minor_cutoff)
{
    if (a.is_zero()) throw MathError("determinant factors of the zero matrix");
    int size = std::min(a.rows(), a.cols());
    DetFactorsH out;
    if (size <= minor_cutoff) {
        out.D = minor_gcds<HPolyMat, HPoly>(a, size,
                                            [](const HPoly& x, const HPoly& y) { return gcd(x, y); });
        return out;
    }
    SmithFormH s = snf_homogeneous(a);
    HPoly running = HPoly::constant(Rational(1));
    for (const HPoly& f : s.factors) {
        if (f.is_zero()) break;
        running = (running * f).normalized();
        out.D.push_back(running);
    }
    return out;
}

int rank_at(const HPolyMat& a, const Rational& x0, const Rational& y0)
{
    if (is_zero(x0) && is_zero(y0)) throw MathError("evaluation at (0,0)");
    QMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j).eval(x0, y0);
    return m.rank();
}

// ---------------------------------------------------------------------
// Invariant-factor product divisibility.

CheckReport check_product_divisibility(const PolyMat& a, const PolyMat& b, int max_tuple)
{
    CheckReport rep;
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw MathError("product divisibility needs square matrices of one size");
    if (a.det().is_zero() || b.det().is_zero())
        throw MathError("product divisibility needs nonsingular matrices");
    int m = a.rows();
    SmithFormU sa = snf_univariate(a);
    SmithFormU sb = snf_univariate(b);
    SmithFormU sc = snf_univariate(a * b);

    int kmax = std::min(max_tuple, m);
    for (int k = 1; k <= kmax; ++k) {
        subsets(m, k, [&](const std::vector<int>& iv) {
            subsets(m, k, [&](const std::vector<int>& jv) {
                // 1-based tails must satisfy i_k + j_k <= k + m.
                if (iv[k - 1] + 1 + jv[k - 1] + 1 > k + m) return;
                UPoly lhs = UPoly::constant(Rational(1));
                UPoly rhs = UPoly::constant(Rational(1));
                for (int t = 0; t < k; ++t) {
                    lhs = lhs * sa.factors[iv[t]] * sb.factors[jv[t]];
                    rhs = rhs * sc.factors[iv[t] + jv[t] - t];
                }
                if (!rhs.divrem(lhs).second.is_zero())
                    rep.fail("invariant factor product divisibility violated at k=" +
                             std::to_string(k));
            });
        });
    }
    if (rep.ok) rep.note("all invariant-factor product divisibilities hold");
    return rep;
}

} // namespace rcs
