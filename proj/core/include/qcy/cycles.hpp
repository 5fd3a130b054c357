#pragma once

#include <vector>

#include "qcy/poly.hpp"
#include "qcy/symfn.hpp"

namespace qcy {

// The named symmetric/skew cycles attached to N = ctx->n_z spectral variables.
// Arguments are polynomials so the slots can be X variables, the current
// parameter, or negated copies of either.

MPoly theta(const Ctx& c, const MPoly& X);                    // prod_j (1 - z_j X)
MPoly theta2(const Ctx& c, const MPoly& X1, const MPoly& X2);
MPoly sigma1(const Ctx& c, const MPoly& X);
MPoly sigma2(const Ctx& c, const MPoly& X1, const MPoly& X2);
MPoly gamma1(const Ctx& c, const MPoly& X);
MPoly gamma2(const Ctx& c, const MPoly& X1, const MPoly& X2);

// G_m(X) = prod_{j<m}(1 + z_j X) prod_{j>m}(1 - z_j X), m in 1..N
MPoly gfun(const Ctx& c, int m, const MPoly& X);

// elementary symmetric polynomial e_j(z_1..z_N)
MPoly elementary_z(const Ctx& c, int j);

// monomial symmetric polynomial m_lambda(z_1..z_N)
MPoly mono_z(const Ctx& c, const Partition& lambda);

// Skew(X^J) = sum_{sigma} sgn(sigma) prod_p X_p^{J_sigma(p)}, J strictly
// decreasing of size ctx->n_x
MPoly skew_xJ(const Ctx& c, const std::vector<int>& J);

// wedge of a polynomial skew in X_1..X_la with one skew in X_1..X_lb,
// placed in a context with n_x = la + lb
MPoly wedge(const MPoly& a, int la, const MPoly& b, int lb, const Ctx& target);

// image of psi_{m_1}..psi_{m_l} v_+^N under the transfer-matrix map,
// computed from the closed product formula; M strictly increasing
MPoly cmap(const Ctx& c, const std::vector<int>& M);

// the same image computed by running the q = i transfer matrix itself;
// throws std::logic_error if the result fails to be real
MPoly bethe_cmap(const Ctx& c, const std::vector<int>& M);

}  // namespace qcy
