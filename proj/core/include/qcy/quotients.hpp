#pragma once

#include <vector>

#include "qcy/poly.hpp"
#include "qcy/qseries.hpp"
#include "qcy/symfn.hpp"

namespace qcy {

// Basis label Skew(X^J) m_lambda(z) for the graded polynomial spaces in
// ctx(n_x = l, n_z = N): J strictly decreasing, lambda at most N parts,
// degree |lambda| - |J|.
struct CycleCol {
    std::vector<int> J;
    Partition lam;
};

// all basis labels of degree d
std::vector<CycleCol> cycle_cols(int N, int l, int d);

// per-degree dimension of the minimal cycle space
int dim_w(int N, int l, int d);

// characters sum_d dim q^d up to and including degree dmax
QPoly ch_w(int N, int l, int dmax);
QPoly ch_m(int N, int l, int dmax);
QPoly ch_m_res(int N, int l, int r, int dmax);

// dimensions of the generic-point evaluation of the quotient spaces,
// with z evaluated at the first N primes
int dim_ec_m(int N, int l);
int dim_ec_m_res(int N, int l, int r);

// extract a free module basis degree by degree and check
// det(P_aJ) = C prod_{i<j}(z_i+z_j)^(binom(N-1,l-1)+binom(N-2,l-1)), C != 0
bool basis_det_check(int N, int l);

// character of the dual space cut out by the divisibility, coupling and
// degree-bound conditions (r = 0: no level truncation)
QPoly dual_char(int N, int l, int dmax, int r = 0);

// the same character from the ideal-rank side, zero modes removed
QPoly zbar_char(int N, int l, int dmax, int r = 0);

// Gordon specialization: on the intersection of the kernels of the higher
// specializations, phi_lambda images divide the predicted product exactly
bool gordon_check(int N, int l, int dmax, int r = 0);

}  // namespace qcy
