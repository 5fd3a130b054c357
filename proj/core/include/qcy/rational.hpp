#pragma once

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcy {

using Rat = mpq_class;
using Int = mpz_class;

inline Int binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    assert(n >= 0);
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Complex numbers with exact rational real and imaginary parts.  This is a
// field and it is all the cycle formulas ever need: the only irrationality
// that enters the polynomial side is a fourth root of unity.
struct GRat {
    Rat re, im;

    GRat() : re(0), im(0) {}
    GRat(int v) : re(v), im(0) {}
    GRat(long v) : re(v), im(0) {}
    GRat(Rat v) : re(std::move(v)), im(0) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GRat i() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    GRat& operator+=(const GRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GRat& operator*=(const GRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GRat& operator/=(const GRat& o) {
        Rat n = o.norm2();
        if (n == 0) throw std::domain_error("GRat: division by zero");
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GRat operator+(GRat a, const GRat& b) { return a += b; }
    friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
    friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
    friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
    friend GRat operator-(GRat a) {
        a.re = -a.re;
        a.im = -a.im;
        return a;
    }
    friend bool operator==(const GRat& a, const GRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

    GRat inv() const {
        GRat one(1);
        return one / *this;
    }

    GRat pow(long k) const {
        if (k < 0) return inv().pow(-k);
        GRat acc(1), base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (im == 0) return re.get_str();
        std::string s;
        if (re != 0) s += re.get_str();
        if (im > 0 && re != 0) s += "+";
        if (im == -1)
            s += "-";
        else if (im != 1)
            s += im.get_str() + "*";
        s += "i";
        return s;
    }
};

// i^k for any integer k
inline GRat ipow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GRat(1);
        case 1: return GRat::i();
        case 2: return GRat(-1);
        default: return -GRat::i();
    }
}

}  // namespace qcy
