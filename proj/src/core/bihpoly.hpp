#ifndef RCS_BIHPOLY_HPP
#define RCS_BIHPOLY_HPP

#include "core/hpoly.hpp"

#include <string>
#include <vector>

namespace rcs {

/**
 * Bihomogeneous polynomial in two parameter pairs (s:u) and (t:v).
 *
 * Bidegree (ds, dt) stores a (ds+1) x (dt+1) grid; cell (i,j) is the
 * coefficient of s^i u^(ds-i) t^j v^(dt-j).  Zero is canonical with
 * bidegree (-1,-1).
 */
class BiHPoly {
public:
    BiHPoly() = default;
    BiHPoly(int deg_su, int deg_tv, std::vector<Rational> cells);

    static BiHPoly zero() { return BiHPoly(); }
    // Embeddings of one-pair forms.
    static BiHPoly from_su(const HPoly& f);
    static BiHPoly from_tv(const HPoly& f);
    // The Cayley factor s*v - t*u.
    static BiHPoly cayley();

    bool is_zero() const { return ds_ < 0; }
    int deg_su() const { return ds_; }
    int deg_tv() const { return dt_; }
    Rational cell(int i, int j) const;

    BiHPoly operator-() const;
    BiHPoly operator+(const BiHPoly& o) const;
    BiHPoly operator-(const BiHPoly& o) const;
    BiHPoly operator*(const BiHPoly& o) const;
    bool operator==(const BiHPoly& o) const
    {
        return ds_ == o.ds_ && dt_ == o.dt_ && c_ == o.c_;
    }
    bool operator!=(const BiHPoly& o) const { return !(*this == o); }
    BiHPoly scaled(const Rational& q) const;

    // Coefficient of t^j v^(dt-j) as a form in (s,u).
    HPoly tv_coeff(int j) const;
    // Coefficient of s^i u^(ds-i) as a form in (t,v).
    HPoly su_coeff(int i) const;

    // Quotient by (sv - tu); requires vanishing on the diagonal (s:u)=(t:v).
    BiHPoly divide_by_cayley() const;

    // Substitutions.
    HPoly eval_su(const Rational& s0, const Rational& u0) const; // form in (t,v)
    HPoly eval_tv(const Rational& t0, const Rational& v0) const; // form in (s,u)
    HPoly diagonal() const; // (s,u) := (t,v), a form of degree ds+dt
    BiHPoly swap_pairs() const;

    BiHPoly divide_exact(const BiHPoly& d) const;

    std::string to_string() const; // variables s,u;t,v

private:
    int ds_ = -1, dt_ = -1;
    std::vector<Rational> c_; // row-major: (ds+1) x (dt+1)
    Rational& at(int i, int j) { return c_[static_cast<size_t>(i) * (dt_ + 1) + j]; }
    const Rational& at(int i, int j) const
    {
        return c_[static_cast<size_t>(i) * (dt_ + 1) + j];
    }
};

} // namespace rcs

#endif
