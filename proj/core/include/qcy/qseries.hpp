#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcy/rational.hpp"

namespace qcy {

// Exact Laurent polynomials on the u = q^{1/2} lattice.  Exponents are
// counted in powers of u, so q^n sits at exponent 2n; this is the finest
// lattice any of the character formulas need.
class QPoly {
public:
    QPoly() = default;

    static QPoly one() { return q_pow(0); }
    static QPoly u_pow(int k, Rat c = Rat(1));
    static QPoly q_pow(int n, Rat c = Rat(1)) { return u_pow(2 * n, std::move(c)); }

    const std::map<int, Rat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff_u(int k) const;
    Rat coeff_q(int n) const { return coeff_u(2 * n); }
    int lowest() const;   // u exponent; 0 for the zero polynomial
    int highest() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rat& s);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(QPoly a, const Rat& s) { return a *= s; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly qinv() const;  // q -> q^{-1}
    Rat eval_q1() const;
    Rat eval_u(const Rat& u) const;

    // exact division; throws DivisionError-like domain_error when not exact
    QPoly div_exact(const QPoly& den) const;

    std::string str() const;  // in terms of q, with q^{1/2} where needed

private:
    std::map<int, Rat> c_;
    void add(int k, const Rat& v);
};

QPoly qpochhammer(int n);              // (q)_n
QPoly qbin(int n, int k);              // Gaussian binomial, 0 out of range

// Truncated power series in u: known coefficients for lo <= exponent < hi.
class QSeries {
public:
    QSeries() = default;
    QSeries(int lo, int hi);  // zero series known on [lo, hi)

    static QSeries from(const QPoly& p, int trunc);
    static QSeries one(int trunc);

    int trunc() const { return hi_; }
    Rat coeff_u(int k) const;  // asserts k < trunc
    Rat coeff_q(int n) const { return coeff_u(2 * n); }
    bool known_zero() const;   // all known coefficients vanish

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    QSeries operator*(const QSeries& o) const;
    QSeries mul(const QPoly& p) const;
    QSeries shift_u(int k) const;
    QSeries truncate(int new_hi) const;

    // inverse of a series whose lowest known coefficient is nonzero
    QSeries inverse() const;

    // lowest exponent with nonzero known coefficient; hi_ if none
    int lowest_nonzero() const;

    std::string str() const;

private:
    int lo_ = 0;
    int hi_ = 0;
    std::vector<Rat> a_;  // coefficients for exponents lo_..hi_-1
    void normalize();
};

QSeries inv_qpochhammer(int n, int trunc);    // 1/(q)_n
QSeries inv_qpochhammer_inf(int trunc);       // 1/(q)_infinity

}  // namespace qcy
