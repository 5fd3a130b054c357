#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qcy/poly.hpp"
#include "qcy/qseries.hpp"

namespace qcy {

// Element of the Clifford algebra on psi_1..psi_N with polynomial
// coefficients.  Masks encode ordered products: bit a-1 set means psi_a is
// present, factors sorted by index.
class Ferm {
public:
    Ferm() = default;
    explicit Ferm(Ctx c) : ctx_(std::move(c)) {}

    static Ferm scalar(Ctx c, MPoly v);
    static Ferm psi(Ctx c, int a);

    const Ctx& ctx() const { return ctx_; }
    const std::map<uint32_t, MPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(uint32_t mask, const MPoly& coeff);
    MPoly coeff(uint32_t mask) const;

    Ferm& operator+=(const Ferm& o);
    Ferm& operator-=(const Ferm& o);
    Ferm& operator*=(const Ferm& o);
    Ferm& operator*=(const MPoly& s);
    Ferm& operator*=(const GRat& s);
    friend Ferm operator+(Ferm a, const Ferm& b) { return a += b; }
    friend Ferm operator-(Ferm a, const Ferm& b) { return a -= b; }
    friend Ferm operator*(Ferm a, const Ferm& b) { return a *= b; }
    friend Ferm operator*(Ferm a, const MPoly& s) { return a *= s; }
    friend Ferm operator*(Ferm a, const GRat& s) { return a *= s; }

    Ferm pow(int k) const;
    Ferm coeff_of(int var, int k) const;   // per-coefficient extraction
    Ferm negate_var(int var) const;
    int deg(int var) const;

private:
    Ctx ctx_;
    std::map<uint32_t, MPoly> t_;
};

// sign of reordering psi_A psi_B into the sorted product psi_{A u B}
int grassmann_sign(uint32_t a, uint32_t b);

// images of the zero modes
Ferm rho_xi0(const Ctx& c);
Ferm rho_eta0(const Ctx& c);

// coefficient functions cleared by D(w) = prod_j (1 - z_j w); the current
// parameter is the auxiliary variable named "w"
MPoly dc_single(const Ctx& c, int a);
MPoly dc_pair(const Ctx& c, int a, int b);
MPoly dc_set(const Ctx& c, const std::vector<int>& A);

// sum_{#A=2k} psi_A (D c_A) and sum_{#A=2k+1} psi_A (D c_A)
Ferm eh_sum(const Ctx& c, int k);
Ferm xih_sum(const Ctx& c, int k);

// rho'(I_mu(w)) for the cleared current I_mu = D(w) J_mu(w)
Ferm current_image(const Ctx& c, int mu);

// rho' applied to D(w)D(-w)(xi(w)xi(-w) + eta(w) - eta(-w))
Ferm kernel_quadratic(const Ctx& c);

// annihilation-type coefficient functions cleared by D, and their recursion
// checks, for the expansion of products of at most three currents
MPoly dc_B(const Ctx& c, int a, int b);
MPoly dc_C(const Ctx& c, int a, int b, int cc);

// Monomial in the free supercommutative algebra on xi_n (odd) and eta_n
// (even), deg xi_n = deg eta_n = n, wt xi_n = 1, wt eta_n = 2.
struct ZMono {
    uint32_t xi = 0;
    std::vector<uint16_t> eta;

    int degree() const;
    int weight() const;
    void trim();
    friend bool operator<(const ZMono& a, const ZMono& b) {
        if (a.xi != b.xi) return a.xi < b.xi;
        return a.eta < b.eta;
    }
    friend bool operator==(const ZMono& a, const ZMono& b) {
        return a.xi == b.xi && a.eta == b.eta;
    }
};

class ZPoly {
public:
    ZPoly() = default;
    static ZPoly one();
    static ZPoly xi(int n);
    static ZPoly eta(int n);

    const std::map<ZMono, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(ZMono m, const Rat& c);

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o);
    ZPoly& operator*=(const Rat& s);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(ZPoly a, const ZPoly& b) { return a *= b; }
    friend ZPoly operator*(ZPoly a, const Rat& s) { return a *= s; }

private:
    std::map<ZMono, Rat> t_;
};

// coefficient of w^n in xi(w)xi(-w) + eta(w) - eta(-w), nonzero for odd n
ZPoly quad_gen(int n);

// coefficient of w^m in the abstract current J_mu(w)
ZPoly current_gen(int mu, int m);

// monomials of the free algebra at the given bidegree
std::vector<ZMono> zmono_basis(int deg, int wt);

// Hilbert series in q of the weight-w piece of the quotient by the ideal
// generated by the quadratic relation and the truncated currents, up to and
// including degree dmax
QPoly zbar_char_ideal(int N, int w, int dmax);

}  // namespace qcy
