#include "qcy/paths.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcy {

namespace {

constexpr double kPi = 3.14159265358979323846;

void extend(std::vector<int>& cur, int N, int m, int cap,
            std::vector<Path>& out) {
  int n = (int)cur.size();
  if (std::abs(cur.back() - m) > N - n) return;
  if (n == N) {
    out.push_back(Path{cur});
    return;
  }
  for (int d : {-1, 1}) {
    int next = cur.back() + d;
    if (next < 0 || (cap >= 0 && next > cap)) continue;
    cur.push_back(next);
    extend(cur, N, m, cap, out);
    cur.pop_back();
  }
}

std::vector<Path> paths_capped(int N, int m, int cap) {
  std::vector<Path> out;
  if (N < 1 || m < 0 || (cap >= 0 && (cap < 1 || m > cap))) return out;
  std::vector<int> cur{1};
  extend(cur, N, m, cap, out);
  return out;
}

Cplx qpow(Cplx q, Cplx x) { return std::exp(x * std::log(q)); }

// q-integer with the exponent given doubled, so half-integer brackets
// stay exact
Cplx qint2(Cplx q, Cplx twox) {
  Cplx h = 0.5 * twox;
  return (qpow(q, h) - qpow(q, -h)) / (q - 1.0 / q);
}

std::vector<int> weight_indices(int n, int l) {
  std::vector<int> out;
  for (int x = 0; x < (1 << n); ++x)
    if (std::popcount((unsigned)x) == l) out.push_back(x);
  return out;
}

// nullspace of an nr x nc complex matrix by row reduction with partial
// pivoting; the scale-relative threshold decides rank
std::vector<std::vector<Cplx>> kernel(CMat A) {
  double scale = std::max(1.0, max_abs(A));
  double tol = 1e-8 * scale;
  int m = A.nr, k = A.nc, row = 0;
  std::vector<int> pivot(k, -1);
  for (int col = 0; col < k && row < m; ++col) {
    int best = -1;
    double bv = tol;
    for (int i = row; i < m; ++i)
      if (std::abs(A.at(i, col)) > bv) {
        bv = std::abs(A.at(i, col));
        best = i;
      }
    if (best < 0) continue;
    for (int j = 0; j < k; ++j) std::swap(A.at(best, j), A.at(row, j));
    Cplx inv = 1.0 / A.at(row, col);
    for (int j = 0; j < k; ++j) A.at(row, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      Cplx f = A.at(i, col);
      if (std::abs(f) == 0.0) continue;
      for (int j = 0; j < k; ++j) A.at(i, j) -= f * A.at(row, j);
    }
    pivot[col] = row;
    ++row;
  }
  std::vector<std::vector<Cplx>> basis;
  for (int col = 0; col < k; ++col) {
    if (pivot[col] >= 0) continue;
    std::vector<Cplx> v(k, 0.0);
    v[col] = 1.0;
    for (int c = 0; c < k; ++c)
      if (pivot[c] >= 0) v[c] = -A.at(pivot[c], col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Cplx eps_root(int r) { return std::exp(Cplx(0.0, -kPi / r)); }

bool rsos_admissible(int r, int twoj) { return twoj >= 0 && twoj <= r - 2; }

// bracket [x] at eps_root(r) computed as sin(pi x / r)/sin(pi / r), argument
// doubled; equal arguments divide to exactly 1 and [0] is exactly 0, which
// keeps W(beta = 0) an exact identity matrix
Cplx rbr(int r, Cplx twox) {
  return std::sin(kPi / (2.0 * r) * twox) / std::sin(kPi / r);
}

// weight argument doubled heights; beta enters through u = -beta/(pi i)
Cplx rsos_w(int r, int ta, int tb, int tc, int td, double beta) {
  Cplx u(0.0, beta / kPi);
  if (ta != td) return 1.0;
  if (tb == tc) {
    double s = tb - ta;
    return rbr(r, Cplx(2 * (ta + 1), 0) - 2.0 * s * u) /
           (rbr(r, Cplx(2 * (ta + 1), 0)) * rbr(r, 2.0 + 2.0 * u));
  }
  return std::sqrt(rbr(r, Cplx(2 * ta, 0)) * rbr(r, Cplx(2 * ta + 4, 0))) /
         rbr(r, Cplx(2 * ta + 2, 0)) * rbr(r, 2.0 * u) /
         rbr(r, 2.0 + 2.0 * u);
}

// admissible height sequences (h0,h1,h2,h3), doubled
std::vector<std::array<int, 4>> height_quads(int r);

}  // namespace

std::vector<Path> classical_paths(int N, int m) {
  return paths_capped(N, m, -1);
}

std::vector<Path> restricted_paths(int N, int m, int r) {
  return paths_capped(N, m, r - 2);
}

long long count_restricted(int r, int N, int m) {
  int cap = r - 2;
  if (N < 1 || m < 0 || cap < 1 || m > cap) return 0;
  std::vector<long long> g(cap + 1, 0);
  g[1] = 1;
  for (int n = 2; n <= N; ++n) {
    std::vector<long long> h(cap + 1, 0);
    for (int s = 0; s <= cap; ++s) {
      if (s >= 1) h[s] += g[s - 1];
      if (s + 1 <= cap) h[s] += g[s + 1];
    }
    g = h;
  }
  return g[m];
}

Cplx qint(Cplx q, Cplx x) { return qint2(q, 2.0 * x); }

Cplx generic_q() { return std::exp(Cplx(0.0, -1.0 / 6.0)); }

CMat CMat::eye(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMat mul(const CMat& a, const CMat& b) {
  CMat c(a.nr, b.nc);
  for (int i = 0; i < a.nr; ++i)
    for (int k = 0; k < a.nc; ++k) {
      Cplx f = a.at(i, k);
      if (std::abs(f) == 0.0) continue;
      for (int j = 0; j < b.nc; ++j) c.at(i, j) += f * b.at(k, j);
    }
  return c;
}

CMat add(const CMat& a, const CMat& b, Cplx cb) {
  CMat c = a;
  for (size_t i = 0; i < c.a.size(); ++i) c.a[i] += cb * b.a[i];
  return c;
}

double max_abs(const CMat& a) {
  double m = 0.0;
  for (const Cplx& v : a.a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.a.size(); ++i)
    m = std::max(m, std::abs(a.a[i] - b.a[i]));
  return m;
}

Cplx q3j(int twoj, int dj, int twom, int de, Cplx q) {
  if (twoj < 0 || std::abs(twom) > twoj || (twoj - twom) % 2 != 0) return 0.0;
  int twojn = twoj + dj, twomn = twom + de;
  if (twojn < 0 || std::abs(twomn) > twojn) return 0.0;
  Cplx den = qint2(q, Cplx(2 * (twoj + 1), 0));
  if (std::abs(den) < 1e-12)
    throw std::domain_error("q3j: [2j+1] vanishes at this q");
  if (dj == 1) {
    int tb = de == 1 ? twoj + twom + 2 : twoj - twom + 2;
    Cplx e = de == 1 ? Cplx(twoj - twom, 0) : Cplx(-twoj - twom, 0);
    return qpow(q, 0.25 * e) * std::sqrt(qint2(q, Cplx(tb, 0)) / den);
  }
  int tb = de == 1 ? twoj - twom : twoj + twom;
  Cplx e = de == 1 ? Cplx(-twoj - 2 - twom, 0) : Cplx(twoj + 2 - twom, 0);
  double sg = de == 1 ? 1.0 : -1.0;
  return sg * qpow(q, 0.25 * e) * std::sqrt(qint2(q, Cplx(tb, 0)) / den);
}

std::vector<Cplx> path_vector(const Path& J, int twom, Cplx q) {
  int N = J.length();
  std::vector<Cplx> out((size_t)1 << N, 0.0);
  for (int sgn = 0; sgn < (1 << N); ++sgn) {
    int tm = 0;
    Cplx c = 1.0;
    for (int n = 1; n <= N; ++n) {
      int de = (sgn >> (n - 1)) & 1 ? -1 : 1;
      if (n >= 2)
        c *= q3j(J.twoj[n - 2], J.twoj[n - 1] - J.twoj[n - 2], tm, de, q);
      tm += de;
      if (std::abs(tm) > J.twoj[n - 1]) {
        c = 0.0;
        break;
      }
    }
    if (tm != twom || std::abs(c) == 0.0) continue;
    out[(size_t)sgn] += c;
  }
  return out;
}

Cplx path_coeff(const Path& J, const std::vector<int>& M, Cplx q) {
  int N = J.length();
  int tm = 0;
  Cplx c = 1.0;
  size_t p = 0;
  for (int n = 1; n <= N; ++n) {
    int de = p < M.size() && M[p] == n ? (++p, -1) : 1;
    if (n >= 2)
      c *= q3j(J.twoj[n - 2], J.twoj[n - 1] - J.twoj[n - 2], tm, de, q);
    tm += de;
    if (std::abs(tm) > J.twoj[n - 1]) return 0.0;
  }
  return tm == J.weight() ? c : 0.0;
}

Path zigzag_path(int N, int l) {
  Path J;
  for (int p = 0; p < l; ++p) {
    J.twoj.push_back(1);
    J.twoj.push_back(0);
  }
  for (int k = 1; k <= N - 2 * l; ++k) J.twoj.push_back(k);
  return J;
}

CMat e_total(int n, Cplx q) {
  CMat m(1 << n, 1 << n);
  for (int x = 0; x < (1 << n); ++x)
    for (int i = 1; i <= n; ++i) {
      if (!((x >> (i - 1)) & 1)) continue;
      Cplx c = 1.0;
      for (int k = i + 1; k <= n; ++k)
        c *= (x >> (k - 1)) & 1 ? 1.0 / q : q;
      m.at(x ^ (1 << (i - 1)), x) += c;
    }
  return m;
}

CMat f_total(int n, Cplx q) {
  CMat m(1 << n, 1 << n);
  for (int x = 0; x < (1 << n); ++x)
    for (int i = 1; i <= n; ++i) {
      if ((x >> (i - 1)) & 1) continue;
      Cplx c = 1.0;
      for (int k = 1; k < i; ++k) c *= (x >> (k - 1)) & 1 ? q : 1.0 / q;
      m.at(x | (1 << (i - 1)), x) += c;
    }
  return m;
}

CMat t_total(int n, Cplx q) {
  CMat m(1 << n, 1 << n);
  for (int x = 0; x < (1 << n); ++x)
    m.at(x, x) = qpow(q, Cplx(n - 2 * std::popcount((unsigned)x), 0));
  return m;
}

std::vector<std::vector<Cplx>> omega_basis(int n, int l, Cplx q) {
  std::vector<int> cols = weight_indices(n, l);
  std::vector<int> rows = l >= 1 ? weight_indices(n, l - 1) : std::vector<int>();
  CMat e = e_total(n, q);
  CMat block((int)rows.size(), (int)cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      block.at((int)i, (int)j) = e.at(rows[i], cols[j]);
  std::vector<std::vector<Cplx>> out;
  for (const auto& v : kernel(block)) {
    std::vector<Cplx> full((size_t)1 << n, 0.0);
    for (size_t j = 0; j < cols.size(); ++j) full[(size_t)cols[j]] = v[j];
    out.push_back(std::move(full));
  }
  return out;
}

Cplx rsos_weight(int r, int twoa, int twob, int twoc, int twod, double beta) {
  bool ok = rsos_admissible(r, twoa) && rsos_admissible(r, twob) &&
            rsos_admissible(r, twoc) && rsos_admissible(r, twod) &&
            std::abs(twoa - twob) == 1 && std::abs(twob - twod) == 1 &&
            std::abs(twoa - twoc) == 1 && std::abs(twoc - twod) == 1;
  if (!ok) throw std::domain_error("rsos_weight: inadmissible heights");
  return rsos_w(r, twoa, twob, twoc, twod, beta);
}

namespace {

std::vector<std::array<int, 4>> height_quads(int r) {
  std::vector<std::array<int, 4>> out;
  for (int h0 = 0; h0 <= r - 2; ++h0)
    for (int d1 : {-1, 1})
      for (int d2 : {-1, 1})
        for (int d3 : {-1, 1}) {
          int h1 = h0 + d1, h2 = h1 + d2, h3 = h2 + d3;
          if (rsos_admissible(r, h1) && rsos_admissible(r, h2) &&
              rsos_admissible(r, h3))
            out.push_back({h0, h1, h2, h3});
        }
  return out;
}

// weight matrix acting on the middle height at position pos (1 or 2)
CMat face_op(int r, const std::vector<std::array<int, 4>>& quads, int pos,
             double beta) {
  int n = (int)quads.size();
  CMat m(n, n);
  for (int j = 0; j < n; ++j) {
    const auto& s = quads[j];
    for (int i = 0; i < n; ++i) {
      const auto& t = quads[i];
      bool match = true;
      for (int k = 0; k < 4; ++k)
        if (k != pos && s[k] != t[k]) match = false;
      if (!match) continue;
      m.at(i, j) =
          rsos_w(r, s[pos - 1], s[pos], t[pos], s[pos + 1], beta);
    }
  }
  return m;
}

}  // namespace

double rsos_ybe_residual(int r, double beta1, double beta2) {
  auto quads = height_quads(r);
  CMat l = mul(face_op(r, quads, 1, beta2),
               mul(face_op(r, quads, 2, beta1 + beta2),
                   face_op(r, quads, 1, beta1)));
  CMat rhs = mul(face_op(r, quads, 2, beta1),
                 mul(face_op(r, quads, 1, beta1 + beta2),
                     face_op(r, quads, 2, beta2)));
  return max_abs_diff(l, rhs);
}

bool rsos_zero_is_identity(int r) {
  auto quads = height_quads(r);
  for (const auto& s : quads)
    for (int tc = 0; tc <= r - 2; ++tc) {
      if (std::abs(s[0] - tc) != 1 || std::abs(tc - s[2]) != 1) continue;
      Cplx w = rsos_w(r, s[0], s[1], tc, s[2], 0.0);
      if (w != (tc == s[1] ? Cplx(1.0) : Cplx(0.0))) return false;
    }
  return true;
}

RootModule module_v(int r, int s, int alpha) {
  if (s < 0 || s > r - 2) throw std::invalid_argument("module_v: s range");
  Cplx eps = eps_root(r);
  int d = s + 1;
  RootModule m{d, CMat(d, d), CMat(d, d), CMat(d, d)};
  for (int k = 1; k <= s; ++k)
    m.E.at(k - 1, k) = (double)alpha * qint(eps, k) * qint(eps, s + 1 - k);
  for (int k = 0; k < s; ++k) m.F.at(k + 1, k) = 1.0;
  for (int k = 0; k <= s; ++k)
    m.T.at(k, k) = (double)alpha * qpow(eps, Cplx(s - 2 * k, 0));
  return m;
}

RootModule module_w(int r, int s, int alpha) {
  if (s < 0 || s > r - 1) throw std::invalid_argument("module_w: s range");
  Cplx eps = eps_root(r);
  int d = r;
  RootModule m{d, CMat(d, d), CMat(d, d), CMat(d, d)};
  for (int k = 1; k <= r - 1; ++k)
    m.E.at(k - 1, k) = (double)alpha * qint(eps, k) * qint(eps, s + 1 - k);
  for (int k = 0; k < r - 1; ++k) m.F.at(k + 1, k) = 1.0;
  for (int k = 0; k <= r - 1; ++k)
    m.T.at(k, k) = (double)alpha * qpow(eps, Cplx(s - 2 * k, 0));
  return m;
}

RootModule module_x(int r, int s, int alpha) {
  if (s < 0 || s > r - 2) throw std::invalid_argument("module_x: s range");
  Cplx eps = eps_root(r);
  int p = r - 2 - s, d = 2 * r;
  auto X = [&](int k) { return k; };
  auto Y = [&](int k) { return s + 1 + k; };
  auto A = [&](int k) { return 2 * s + 2 + k; };
  auto B = [&](int k) { return r + s + 1 + k; };
  RootModule m{d, CMat(d, d), CMat(d, d), CMat(d, d)};
  double al = alpha;
  for (int k = 1; k <= s; ++k) {
    Cplx c = al * qint(eps, k) * qint(eps, s + 1 - k);
    m.E.at(X(k - 1), X(k)) = c;
    m.E.at(Y(k - 1), Y(k)) = c;
  }
  m.E.at(A(p), Y(0)) = 1.0;
  for (int k = 1; k <= p; ++k) {
    Cplx c = -al * qint(eps, k) * qint(eps, p + 1 - k);
    m.E.at(A(k - 1), A(k)) = c;
    m.E.at(B(k - 1), B(k)) = c;
    m.E.at(A(k - 1), B(k)) += 1.0;
  }
  m.E.at(X(s), B(0)) = 1.0;
  for (int k = 0; k <= s; ++k) {
    m.F.at(k == s ? A(0) : X(k + 1), X(k)) = 1.0;
    if (k < s) m.F.at(Y(k + 1), Y(k)) = 1.0;
  }
  for (int k = 0; k <= p; ++k) {
    if (k < p) m.F.at(A(k + 1), A(k)) = 1.0;
    m.F.at(k == p ? Y(0) : B(k + 1), B(k)) = 1.0;
  }
  for (int k = 0; k <= s; ++k) {
    Cplx c = al * qpow(eps, Cplx(s - 2 * k, 0));
    m.T.at(X(k), X(k)) = c;
    m.T.at(Y(k), Y(k)) = c;
  }
  for (int k = 0; k <= p; ++k) {
    Cplx c = -al * qpow(eps, Cplx(p - 2 * k, 0));
    m.T.at(A(k), A(k)) = c;
    m.T.at(B(k), B(k)) = c;
  }
  return m;
}

double module_residual(const RootModule& m, int r) {
  Cplx eps = eps_root(r);
  int d = m.dim;
  CMat tinv(d, d);
  for (int i = 0; i < d; ++i) tinv.at(i, i) = 1.0 / m.T.at(i, i);
  double res = max_abs(add(mul(m.T, m.E), mul(m.E, m.T), -eps * eps));
  res = std::max(res,
                 max_abs(add(mul(m.T, m.F), mul(m.F, m.T), -1.0 / (eps * eps))));
  CMat lhs = add(mul(m.E, m.F), mul(m.F, m.E), -1.0);
  CMat rhs = add(m.T, tinv, -1.0);
  for (Cplx& v : rhs.a) v /= eps - 1.0 / eps;
  return std::max(res, max_abs_diff(lhs, rhs));
}

GoodBad goodbad_dims(int r, int n) {
  if (r < 3 || n < 1) throw std::invalid_argument("goodbad_dims: range");
  GoodBad gb;
  gb.mult.assign(r - 1, 0);
  gb.mult[1] = 1;
  for (int step = 2; step <= n; ++step) {
    std::vector<long long> next(r - 1, 0);
    for (int s = 0; s <= r - 2; ++s) {
      if (s >= 1) next[s] += gb.mult[s - 1];
      if (s + 1 <= r - 2) next[s] += gb.mult[s + 1];
    }
    gb.dim_bad = 2 * gb.dim_bad + (long long)r * gb.mult[r - 2];
    gb.mult = next;
  }
  gb.dim_good = 0;
  for (int s = 0; s <= r - 2; ++s) gb.dim_good += (s + 1) * gb.mult[s];
  return gb;
}

CMat rplus_op(int n, int i, int r) {
  if (i < 1 || i >= n) throw std::invalid_argument("rplus_op: position");
  Cplx eps = eps_root(r);
  CMat m(1 << n, 1 << n);
  for (int x = 0; x < (1 << n); ++x) {
    int b1 = (x >> (i - 1)) & 1, b2 = (x >> i) & 1;
    if (b1 == b2) {
      m.at(x, x) += eps;
    } else if (b1 == 0) {
      m.at(x ^ (3 << (i - 1)), x) += 1.0;
    } else {
      m.at(x, x) += eps - 1.0 / eps;
      m.at(x ^ (3 << (i - 1)), x) += 1.0;
    }
  }
  return m;
}

CMat pi_op(int n, int l, int r) {
  CMat m(1 << n, 1 << n);
  int e = 2 * l - n - 2;
  for (int x = 0; x < (1 << n); ++x) {
    double sg = (x & 1) ? 1.0 : -1.0;
    Cplx c = std::exp(Cplx(0.0, sg * e * kPi / (2 * r)));
    int y = (x >> 1) | ((x & 1) << (n - 1));
    m.at(y, x) = c;
  }
  return m;
}

}  // namespace qcy
