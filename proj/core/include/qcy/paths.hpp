#pragma once

#include <complex>
#include <vector>

namespace qcy {

using Cplx = std::complex<double>;

// Everything in this module is numeric: 3j symbols and root-of-unity
// module matrices involve square roots, so checks are residual-vs-tolerance.

// A lattice path (j_1,...,j_N), j_1 = 1/2, steps +-1/2, stored doubled so
// the entries are integers.  Weight = 2 j_N.
struct Path {
  std::vector<int> twoj;
  int length() const { return (int)twoj.size(); }
  int weight() const { return twoj.back(); }
};

// all paths of length N and weight m with j_n >= 0, ascending lex order
std::vector<Path> classical_paths(int N, int m);

// additionally 2 j_n <= r - 2
std::vector<Path> restricted_paths(int N, int m, int r);

// number of restricted paths by the height-counting recursion (no
// enumeration)
long long count_restricted(int r, int N, int m);

// q-integer [x] = (q^x - q^{-x})/(q - q^{-1}), principal powers
Cplx qint(Cplx q, Cplx x);

// deterministic generic q for the floating-point checks: exp(-i/6).  The
// angle is an irrational multiple of pi, so no q-integer vanishes, and [n]
// stays positive through n = 18, keeping square roots on one branch.
Cplx generic_q();

// dense complex matrix, row major
struct CMat {
  int nr = 0, nc = 0;
  std::vector<Cplx> a;
  CMat() = default;
  CMat(int r, int c) : nr(r), nc(c), a((size_t)r * c) {}
  Cplx& at(int i, int j) { return a[(size_t)i * nc + j]; }
  const Cplx& at(int i, int j) const { return a[(size_t)i * nc + j]; }
  static CMat eye(int n);
};

CMat mul(const CMat& a, const CMat& b);
CMat add(const CMat& a, const CMat& b, Cplx cb = 1.0);
double max_abs(const CMat& a);
double max_abs_diff(const CMat& a, const CMat& b);

// 3j symbol for fusing spin j with spin 1/2 into j + dj/2; de = +-1 is the
// spin-1/2 weight.  Arguments j, m are doubled.  Zero when a selection rule
// fails; throws std::domain_error if [2j+1] vanishes.
Cplx q3j(int twoj, int dj, int twom, int de, Cplx q);

// u_{J,m}: vector in C^{2^N}.  Component index has bit n-1 set when tensor
// factor n is v_-.  twom is the doubled final weight.
std::vector<Cplx> path_vector(const Path& J, int twom, Cplx q);

// coefficient of v_M in u_{J, j_N}; M is the 1-based set of minus positions
Cplx path_coeff(const Path& J, const std::vector<int>& M, Cplx q);

// the special path (1/2,0,...,1/2,0, 1/2,1,...,(N-2l)/2) with l dips
Path zigzag_path(int N, int l);

// total raising/lowering/grading operators on C^{2^n} for the coproduct
// D(E) = E ox T + 1 ox E, D(F) = F ox 1 + T^{-1} ox F, D(T) = T ox T
CMat e_total(int n, Cplx q);
CMat f_total(int n, Cplx q);
CMat t_total(int n, Cplx q);

// basis of Ker E inside the weight-l subspace (l minus signs), as vectors
// in C^{2^n}
std::vector<std::vector<Cplx>> omega_basis(int n, int l, Cplx q);

// face Boltzmann weight W(a,b,c,d | beta) at eps = exp(-pi i/r), heights
// doubled, u = -beta/(pi i); throws std::domain_error on an inadmissible
// quadruple
Cplx rsos_weight(int r, int twoa, int twob, int twoc, int twod, double beta);

// max residual of the face Yang-Baxter equation over all admissible height
// quadruples at the given rapidity pair
double rsos_ybe_residual(int r, double beta1, double beta2);

// W(beta = 0) as a matrix on the admissible middle heights; identity check
// is exact because the formulas collapse to 1 and 0
bool rsos_zero_is_identity(int r);

// E, F, T matrices of the indecomposable modules at eps = exp(-pi i/r)
struct RootModule {
  int dim = 0;
  CMat E, F, T;
};

RootModule module_v(int r, int s, int alpha);  // dim s+1, 0 <= s <= r-2
RootModule module_w(int r, int s, int alpha);  // dim r,   0 <= s <= r-1
RootModule module_x(int r, int s, int alpha);  // dim 2r,  0 <= s <= r-2

// max residual of T E T^{-1} = eps^2 E, T F T^{-1} = eps^{-2} F,
// [E,F] = (T - T^{-1})/(eps - eps^{-1})
double module_residual(const RootModule& m, int r);

// multiplicities of V^s in the good part of V^{ox n}, plus dimensions of
// the good and bad parts
struct GoodBad {
  std::vector<long long> mult;  // index s = 0..r-2
  long long dim_good = 0, dim_bad = 0;
};

GoodBad goodbad_dims(int r, int n);

// R^+ on factors (i, i+1) of C^{2^n}, i 1-based
CMat rplus_op(int n, int i, int r);

// Pi_{n,l} = rotation sending factor 1 to the end, after D_1^{l-n/2-1}
CMat pi_op(int n, int l, int r);

}  // namespace qcy
