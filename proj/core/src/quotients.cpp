// Characters and generic evaluations of the quotients of the minimal cycle
// spaces, the dual-space and ideal-rank characters of the same series, the
// free-basis determinant, and the Gordon specialization checks.

#include "qcy/quotients.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qcy/cycles.hpp"
#include "qcy/fermions.hpp"
#include "qcy/linalg.hpp"

namespace qcy {

namespace {

using Key = std::vector<int>;

void for_each_perm(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx[static_cast<size_t>(i)] > idx[static_cast<size_t>(j)]) ++inv;
        fn(idx, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

std::vector<int> distinct_vals(const Partition& p) {
    std::vector<int> out;
    for (int v : p)
        if (out.empty() || out.back() != v) out.push_back(v);
    return out;
}

Partition remove_one(const Partition& p, int val) {
    Partition out;
    bool done = false;
    for (int v : p) {
        if (!done && v == val) {
            done = true;
            continue;
        }
        out.push_back(v);
    }
    assert(done);
    return out;
}

// ---------------------------------------------------------------------------
// column bookkeeping

Key col_key(const std::vector<int>& J, const Partition& lam) {
    Key k = J;
    k.push_back(-1);
    k.insert(k.end(), lam.begin(), lam.end());
    return k;
}

struct ColIndex {
    std::vector<CycleCol> cols;
    std::map<Key, int> pos;

    int find(const std::vector<int>& J, const Partition& lam) const {
        auto it = pos.find(col_key(J, lam));
        return it == pos.end() ? -1 : it->second;
    }
};

void desc_subsets(int N, int l, int maxval, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == l) {
        out.push_back(cur);
        return;
    }
    for (int v = maxval; v >= l - 1 - static_cast<int>(cur.size()); --v) {
        cur.push_back(v);
        desc_subsets(N, l, v - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_subsets(int N, int l) {
    std::vector<std::vector<int>> out;
    if (l < 0 || l > N) return out;
    std::vector<int> cur;
    desc_subsets(N, l, N - 1, cur, out);
    return out;
}

ColIndex col_index(int N, int l, int d) {
    ColIndex ix;
    ix.cols = cycle_cols(N, l, d);
    for (size_t i = 0; i < ix.cols.size(); ++i)
        ix.pos.emplace(col_key(ix.cols[i].J, ix.cols[i].lam), static_cast<int>(i));
    return ix;
}

// ---------------------------------------------------------------------------
// minimality rows: z_1 = t, z_2 = -t, X_1 = 1/t, cleared by t^{N-1}

std::vector<SparseVec> min_rows(int N, int l, const ColIndex& ix) {
    std::vector<SparseVec> out;
    if (N < 2 || l < 1) return out;
    std::map<Key, std::map<int, GRat>> rows;
    for (size_t ci = 0; ci < ix.cols.size(); ++ci) {
        const auto& J = ix.cols[ci].J;
        const auto& lam = ix.cols[ci].lam;
        for (size_t q = 0; q < J.size(); ++q) {
            std::vector<int> Jrest;
            for (size_t p = 0; p < J.size(); ++p)
                if (p != q) Jrest.push_back(J[p]);
            int sign1 = q % 2 == 0 ? 1 : -1;
            std::vector<int> alphas = distinct_vals(lam);
            alphas.push_back(0);
            for (int alpha : alphas) {
                Partition rest1 = alpha == 0 ? lam : remove_one(lam, alpha);
                std::vector<int> betas = distinct_vals(rest1);
                betas.push_back(0);
                for (int beta : betas) {
                    Partition nu = beta == 0 ? rest1 : remove_one(rest1, beta);
                    if (static_cast<int>(nu.size()) > N - 2) continue;
                    int k = N - 1 - J[q] + alpha + beta;
                    int sgn = sign1 * (beta % 2 == 0 ? 1 : -1);
                    Key key{k};
                    key.insert(key.end(), Jrest.begin(), Jrest.end());
                    key.push_back(-1);
                    key.insert(key.end(), nu.begin(), nu.end());
                    rows[key][static_cast<int>(ci)] += GRat(sgn);
                }
            }
        }
    }
    for (auto& [key, m] : rows) {
        SparseVec v;
        for (auto& [c, val] : m)
            if (!val.is_zero()) v.emplace_back(c, val);
        if (!v.empty()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVec> w_nullspace(int N, int l, int d, const ColIndex& ix) {
    Rref rr(static_cast<int>(ix.cols.size()));
    auto rows = min_rows(N, l, ix);
    std::sort(rows.begin(), rows.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    for (auto& r : rows) rr.add_row(std::move(r));
    (void)d;
    return rr.nullspace();
}

// ---------------------------------------------------------------------------
// skew decomposition and basis-level wedges

struct SkewComp {
    std::vector<int> J;
    Partition mu;
    GRat c;
};

std::vector<SkewComp> decompose(const MPoly& P, int b, int N) {
    std::vector<SkewComp> out;
    for (const auto& [m, c] : P.terms()) {
        bool keep = true;
        std::vector<int> J(static_cast<size_t>(b));
        for (int p = 0; p < b; ++p) {
            J[static_cast<size_t>(p)] = m.e[static_cast<size_t>(p)];
            if (p > 0 && J[static_cast<size_t>(p - 1)] <= J[static_cast<size_t>(p)]) keep = false;
        }
        if (!keep) continue;
        Partition mu;
        for (int j = 0; j < N; ++j) {
            int e = m.e[static_cast<size_t>(b + j)];
            if (j > 0 && m.e[static_cast<size_t>(b + j - 1)] < e) {
                keep = false;
                break;
            }
            if (e > 0) mu.push_back(e);
        }
        if (keep) out.push_back({std::move(J), std::move(mu), c});
    }
    return out;
}

// both inputs strictly decreasing; -1 sign per crossing pair
bool merge_desc(const std::vector<int>& A, const std::vector<int>& B, std::vector<int>& out,
                int& sign) {
    int cross = 0;
    for (int a : A)
        for (int b : B) {
            if (a == b) return false;
            if (b > a) ++cross;
        }
    out.clear();
    out.reserve(A.size() + B.size());
    std::merge(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out),
               std::greater<int>());
    sign = cross % 2 == 0 ? 1 : -1;
    return true;
}

void wedge_into(const SkewComp& comp, const std::vector<int>& J2, const Partition& lam2, int N,
                const ColIndex& target, const GRat& scale, std::map<int, GRat>& acc) {
    std::vector<int> merged;
    int sign = 1;
    if (!merge_desc(comp.J, J2, merged, sign)) return;
    GRat base = scale * comp.c * GRat(sign);
    for (const auto& [kappa, cnt] : mono_mul(comp.mu, lam2, N)) {
        int idx = target.find(merged, kappa);
        if (idx < 0) throw std::logic_error("wedge_into: label out of range");
        acc[idx] += base * GRat(Rat(cnt));
    }
}

struct Piece {
    MPoly block;  // ctx(b, N), q-homogeneous
    int b = 0;
    int qdeg = 0;
};

Piece make_piece(MPoly block, int b) {
    int d = 0;
    bool ok = block.qhomogeneous(&d);
    if (!ok) throw std::logic_error("make_piece: block not homogeneous");
    return {std::move(block), b, d};
}

// rows spanning sum_i piece_i ^ W_{N, l - b_i} at degree d, in the
// coordinates of target
std::vector<SparseVec> piece_rows(int N, int l, int d, const std::vector<Piece>& pieces,
                                  const ColIndex& target) {
    std::vector<SparseVec> rows;
    for (const auto& pc : pieces) {
        int sub_l = l - pc.b;
        int sub_d = d - pc.qdeg;
        if (sub_l < 0 || sub_d < 0) continue;
        auto comps = decompose(pc.block, pc.b, N);
        ColIndex sub = col_index(N, sub_l, sub_d);
        if (sub.cols.empty()) continue;
        auto null = w_nullspace(N, sub_l, sub_d, sub);
        for (const auto& v : null) {
            std::map<int, GRat> acc;
            for (const auto& [sci, coeff] : v) {
                const auto& scol = sub.cols[static_cast<size_t>(sci)];
                for (const auto& comp : comps)
                    wedge_into(comp, scol.J, scol.lam, N, target, coeff, acc);
            }
            SparseVec row;
            for (auto& [c, val] : acc)
                if (!val.is_zero()) row.emplace_back(c, val);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    return rows;
}

MPoly sigma1_block(int N) {
    Ctx c = make_ctx(1, N);
    return sigma1(c, MPoly::var(c, c->x_index(1)));
}

MPoly sigma2_block(int N) {
    Ctx c = make_ctx(2, N);
    return sigma2(c, MPoly::var(c, c->x_index(1)), MPoly::var(c, c->x_index(2)));
}

MPoly gamma1_block(int N) {
    Ctx c = make_ctx(1, N);
    return gamma1(c, MPoly::var(c, c->x_index(1)));
}

MPoly gamma2_block(int N) {
    Ctx c = make_ctx(2, N);
    return gamma2(c, MPoly::var(c, c->x_index(1)), MPoly::var(c, c->x_index(2)));
}

// nu-fold wedge of the two-variable block with itself, then optionally one
// extra one-variable factor in front
MPoly gamma_wedge(int N, bool with_g1, int nu) {
    MPoly acc;
    int width = 0;
    if (nu > 0) {
        acc = gamma2_block(N);
        width = 2;
        MPoly g2 = acc;
        for (int k = 1; k < nu; ++k) {
            acc = wedge(g2, 2, acc, width, make_ctx(width + 2, N));
            width += 2;
        }
    }
    if (with_g1) {
        MPoly g1 = gamma1_block(N);
        if (width == 0) return g1;
        acc = wedge(g1, 1, acc, width, make_ctx(width + 1, N));
        width += 1;
    }
    return acc;
}

std::vector<Piece> quotient_pieces(int N, int l, int r) {
    std::vector<Piece> pieces;
    if (l >= 1) pieces.push_back(make_piece(sigma1_block(N), 1));
    if (l >= 2) pieces.push_back(make_piece(sigma2_block(N), 2));
    if (r > 0) {
        int mu = r - 1 - (N - 2 * l);
        if (mu % 2 == 1) {
            int nu = (mu - 1) / 2;
            if (mu <= l) pieces.push_back(make_piece(gamma_wedge(N, true, nu), mu));
            if (mu + 1 <= l) pieces.push_back(make_piece(gamma_wedge(N, false, nu + 1), mu + 1));
        } else {
            int nu = mu / 2;
            if (mu <= l) pieces.push_back(make_piece(gamma_wedge(N, false, nu), mu));
        }
    }
    return pieces;
}

QPoly quotient_char(int N, int l, int r, int dmax) {
    if (r > 0 && r - 1 - (N - 2 * l) < 1) return QPoly();
    auto pieces = quotient_pieces(N, l, r);
    QPoly out;
    for (int d = 0; d <= dmax; ++d) {
        ColIndex ix = col_index(N, l, d);
        int dw = static_cast<int>(ix.cols.size()) - sparse_rank(min_rows(N, l, ix));
        int dd = sparse_rank(piece_rows(N, l, d, pieces, ix));
        if (dw != dd) out += QPoly::q_pow(d, Rat(dw - dd));
    }
    return out;
}

// ---------------------------------------------------------------------------
// generic evaluation: z frozen at the first N primes, spans generated by
// wedges of the evaluated current coefficients

std::vector<GRat> prime_point(int N) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    assert(N <= 8);
    std::vector<GRat> c;
    for (int j = 0; j < N; ++j) c.emplace_back(primes[j]);
    return c;
}

MPoly subst_z(MPoly p, const std::vector<GRat>& c) {
    const Ctx& ctx = p.ctx();
    for (size_t j = 0; j < c.size(); ++j)
        p = p.subst_value(ctx->z_index(static_cast<int>(j) + 1), c[j]);
    return p;
}

// coefficients of num/den as a power series in var, divisions exact
std::vector<MPoly> series_coeffs(const MPoly& num, const MPoly& den, int var, int nmax) {
    MPoly den0 = den.coeff_of(var, 0);
    std::vector<MPoly> R;
    for (int n = 0; n <= nmax; ++n) {
        MPoly rhs = num.coeff_of(var, n);
        for (int k = 0; k < n; ++k) rhs -= R[static_cast<size_t>(k)] * den.coeff_of(var, n - k);
        R.push_back(exact_divide(rhs, den0));
    }
    return R;
}

// wedge element over the exterior basis: descending exponent tuple -> coeff
using EvalElt = std::map<std::vector<int>, GRat>;

EvalElt eval_wedge(const EvalElt& a, const EvalElt& b) {
    EvalElt out;
    for (const auto& [ja, ca] : a)
        for (const auto& [jb, cb] : b) {
            std::vector<int> merged;
            int sign = 1;
            if (!merge_desc(ja, jb, merged, sign)) continue;
            GRat v = ca * cb * GRat(sign);
            auto [it, fresh] = out.emplace(std::move(merged), v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

EvalElt one_var_elt(const MPoly& p) {
    EvalElt out;
    for (const auto& [m, c] : p.terms()) out[{m.e[0]}] = c;
    return out;
}

EvalElt two_var_elt(const MPoly& p) {
    EvalElt out;
    for (const auto& [m, c] : p.terms())
        if (m.e[0] > m.e[1]) out[{m.e[0], m.e[1]}] = c;
    return out;
}

struct EvalFamily {
    std::vector<EvalElt> xi;   // xi[n], n = 0..cap
    std::vector<EvalElt> eta;  // eta[n]
};

EvalFamily eval_family(int N, int cap) {
    EvalFamily fam;
    auto cval = prime_point(N);

    Ctx c1 = make_ctx(1, N, {"w"});
    MPoly X = MPoly::var(c1, c1->x_index(1));
    MPoly w = MPoly::var(c1, c1->aux_index("w"));
    MPoly num1 = subst_z(w * theta2(c1, w, -X), cval);
    MPoly den1 = subst_z((X - w) * theta(c1, w) * GRat(2), cval);
    auto xi_series = series_coeffs(num1, den1, c1->aux_index("w"), cap);

    fam.xi.push_back(one_var_elt(subst_z(sigma1(c1, X), cval)));
    for (int n = 1; n <= cap; ++n)
        fam.xi.push_back(one_var_elt(xi_series[static_cast<size_t>(n)]));

    Ctx c2 = make_ctx(2, N, {"w"});
    MPoly X1 = MPoly::var(c2, c2->x_index(1));
    MPoly X2 = MPoly::var(c2, c2->x_index(2));
    MPoly w2 = MPoly::var(c2, c2->aux_index("w"));
    MPoly th_w = theta(c2, w2);
    MPoly num2 = (X1 - X2) * w2 * w2 * (X1 - w2) * (X2 - w2) * th_w * theta2(c2, X1, X2) +
                 ((X1 + X2) * (X1 + w2) * (X2 - w2) * w2 * w2 * theta(c2, -X2) *
                  theta2(c2, w2, -X1))
                     .skew_x();
    MPoly den2 = (X1 + X2) * (X1 + w2) * (X2 + w2) * (X1 - w2) * (X2 - w2) * th_w * GRat(4);
    auto eta_series =
        series_coeffs(subst_z(num2, cval), subst_z(den2, cval), c2->aux_index("w"), cap);

    fam.eta.push_back(two_var_elt(subst_z(sigma2(c2, X1, X2), cval)));
    for (int n = 1; n <= cap; ++n)
        fam.eta.push_back(two_var_elt(eta_series[static_cast<size_t>(n)]));
    return fam;
}

int count_val(const std::vector<int>& v, int val) {
    return static_cast<int>(std::count(v.begin(), v.end(), val));
}

// rank of the full evaluated span minus the rank of the quotient-ideal part
int ec_dim(int N, int l, int r) {
    if (l < 0 || l > N) return 0;
    int mu = r > 0 ? r - 1 - (N - 2 * l) : 0;
    if (r > 0 && mu < 1) return 0;
    int cap = l * (N - l);
    EvalFamily fam = eval_family(N, cap);

    std::map<std::vector<int>, int> jpos;
    {
        auto subs = all_subsets(N, l);
        for (size_t i = 0; i < subs.size(); ++i) jpos.emplace(subs[i], static_cast<int>(i));
    }

    auto in_ideal = [&](const std::vector<int>& xiset, const std::vector<int>& etams) {
        if (count_val(xiset, 0) > 0 || count_val(etams, 0) > 0) return true;
        if (r > 0) {
            int twos = count_val(etams, 2);
            if (mu % 2 == 0) return twos >= mu / 2;
            int nu = (mu - 1) / 2;
            return (count_val(xiset, 1) > 0 && twos >= nu) || twos >= nu + 1;
        }
        return false;
    };

    RowSpan all, sub;
    std::vector<int> xiset, etams;

    std::function<void(int, int)> pick_eta;
    auto emit = [&]() {
        EvalElt wdg;
        wdg[{}] = GRat(1);
        for (int n : xiset) {
            wdg = eval_wedge(wdg, fam.xi[static_cast<size_t>(n)]);
            if (wdg.empty()) return;
        }
        for (int m : etams) {
            wdg = eval_wedge(wdg, fam.eta[static_cast<size_t>(m)]);
            if (wdg.empty()) return;
        }
        std::map<int, GRat> acc;
        for (const auto& [J, c] : wdg) acc[jpos.at(J)] += c;
        SparseVec v;
        for (auto& [i, c] : acc)
            if (!c.is_zero()) v.emplace_back(i, c);
        if (v.empty()) return;
        bool ideal = in_ideal(xiset, etams);
        all.add(v);
        if (ideal) sub.add(std::move(v));
    };
    pick_eta = [&](int count, int budget) {
        if (count == 0) {
            emit();
            return;
        }
        int hi = etams.empty() ? budget : std::min(budget, etams.back());
        for (int m = hi; m >= 0; --m) {
            etams.push_back(m);
            pick_eta(count - 1, budget - m);
            etams.pop_back();
        }
    };
    std::function<void(int, int, int)> pick_xi = [&](int count, int maxval, int budget) {
        if (count == 0) {
            int t = (l - static_cast<int>(xiset.size())) / 2;
            pick_eta(t, budget);
            return;
        }
        for (int n = std::min(maxval, budget); n >= count - 1; --n) {
            xiset.push_back(n);
            pick_xi(count - 1, n - 1, budget - n);
            xiset.pop_back();
        }
    };
    for (int t = 0; 2 * t <= l; ++t) {
        int s = l - 2 * t;
        pick_xi(s, cap, cap);
    }
    return all.rank() - sub.rank();
}

// ---------------------------------------------------------------------------
// free-basis extraction and the determinant test

struct GenElt {
    int deg = 0;
    std::vector<SkewComp> comps;
};

bool extract_basis(int N, int l, std::vector<GenElt>& gens) {
    Int target = binom(N, l);
    int dcap = l * (N - l) + 2;
    for (int d = 0; d <= dcap && Int(gens.size()) < target; ++d) {
        ColIndex ix = col_index(N, l, d);
        RowSpan span;
        for (const auto& g : gens) {
            for (const auto& nu : partitions(d - g.deg, N)) {
                std::map<int, GRat> acc;
                for (const auto& comp : g.comps) {
                    for (const auto& [kappa, cnt] : mono_mul(comp.mu, nu, N)) {
                        int idx = ix.find(comp.J, kappa);
                        if (idx < 0) throw std::logic_error("extract_basis: label out of range");
                        acc[idx] += comp.c * GRat(Rat(cnt));
                    }
                }
                SparseVec row;
                for (auto& [c, val] : acc)
                    if (!val.is_zero()) row.emplace_back(c, val);
                if (!row.empty()) span.add(std::move(row));
            }
        }
        for (const auto& v : w_nullspace(N, l, d, ix)) {
            if (!span.add(v)) continue;
            GenElt g;
            g.deg = d;
            for (const auto& [ci, coeff] : v)
                g.comps.push_back(
                    {ix.cols[static_cast<size_t>(ci)].J, ix.cols[static_cast<size_t>(ci)].lam, coeff});
            gens.push_back(std::move(g));
            if (Int(gens.size()) == target) break;
        }
    }
    return Int(gens.size()) == target;
}

MPoly laplace_det(const std::vector<std::vector<MPoly>>& m, std::vector<int> cols, size_t row,
                  const Ctx& ctx) {
    if (cols.empty()) return MPoly::constant(ctx, GRat(1));
    MPoly out(ctx);
    for (size_t k = 0; k < cols.size(); ++k) {
        const MPoly& entry = m[row][static_cast<size_t>(cols[k])];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        MPoly minor = laplace_det(m, std::move(rest), row + 1, ctx);
        minor *= entry;
        if (k % 2 == 1) minor *= GRat(-1);
        out += minor;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<CycleCol> cycle_cols(int N, int l, int d) {
    std::vector<CycleCol> out;
    if (d < 0) return out;
    for (const auto& J : all_subsets(N, l)) {
        int js = std::accumulate(J.begin(), J.end(), 0);
        for (auto& lam : partitions(d + js, N)) out.push_back({J, lam});
    }
    return out;
}

int dim_w(int N, int l, int d) {
    if (l < 0 || l > N || d < 0) return 0;
    ColIndex ix = col_index(N, l, d);
    return static_cast<int>(ix.cols.size()) - sparse_rank(min_rows(N, l, ix));
}

QPoly ch_w(int N, int l, int dmax) {
    QPoly out;
    for (int d = 0; d <= dmax; ++d) {
        int dim = dim_w(N, l, d);
        if (dim != 0) out += QPoly::q_pow(d, Rat(dim));
    }
    return out;
}

QPoly ch_m(int N, int l, int dmax) { return quotient_char(N, l, 0, dmax); }

QPoly ch_m_res(int N, int l, int r, int dmax) { return quotient_char(N, l, r, dmax); }

int dim_ec_m(int N, int l) { return ec_dim(N, l, 0); }

int dim_ec_m_res(int N, int l, int r) { return ec_dim(N, l, r); }

bool basis_det_check(int N, int l) {
    if (l < 0 || l > N) return false;
    std::vector<GenElt> gens;
    if (!extract_basis(N, l, gens)) return false;

    auto subs = all_subsets(N, l);
    std::map<std::vector<int>, int> jpos;
    for (size_t i = 0; i < subs.size(); ++i) jpos.emplace(subs[i], static_cast<int>(i));

    Ctx cz = make_ctx(0, N);
    size_t n = gens.size();
    std::vector<std::vector<MPoly>> mat(n, std::vector<MPoly>(n, MPoly(cz)));
    for (size_t g = 0; g < n; ++g)
        for (const auto& comp : gens[g].comps)
            mat[g][static_cast<size_t>(jpos.at(comp.J))] += comp.c * mono_z(cz, comp.mu);

    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    MPoly det = laplace_det(mat, cols, 0, cz);

    MPoly div = MPoly::constant(cz, GRat(1));
    long e = Int(binom(N - 1, l - 1) + binom(N - 2, l - 1)).get_si();
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            MPoly f = MPoly::var(cz, cz->z_index(i)) + MPoly::var(cz, cz->z_index(j));
            for (long k = 0; k < e; ++k) div *= f;
        }
    try {
        MPoly quot = exact_divide(det, div);
        return !quot.is_zero() && quot.total_deg() == 0;
    } catch (const DivisionError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// dual space

namespace {

struct DElt {
    int s = 0;
    int t = 0;
    std::vector<int> a;  // strictly decreasing, parts >= 1
    Partition mu;        // exactly t parts, all >= 2
};

void distinct_parts_rec(int n, int k, int maxpart, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(maxpart, n - k * (k - 1) / 2); p >= k; --p) {
        cur.push_back(p);
        distinct_parts_rec(n - p, k - 1, p - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> distinct_partitions(int n, int k) {
    std::vector<std::vector<int>> out;
    if (n < 0 || k < 0) return out;
    std::vector<int> cur;
    distinct_parts_rec(n, k, n, cur, out);
    return out;
}

int level_mu(int N, int l, int r) { return r - 1 - (N - 2 * l); }

bool excluded(const DElt& e, int mu_lvl) {
    int twos = count_val(e.mu, 2);
    if (mu_lvl % 2 == 0) return twos >= mu_lvl / 2;
    int nu = (mu_lvl - 1) / 2;
    if (e.s >= 1 && e.a.back() == 1 && twos >= nu) return true;
    return twos >= nu + 1;
}

std::vector<DElt> dual_elts(int N, int l, int d, int r) {
    std::vector<DElt> out;
    for (int s = l; s >= 0; s -= 2) {
        int t = (l - s) / 2;
        for (int sa = s * (s + 1) / 2; sa <= d - 2 * t; ++sa) {
            if (s == 0 && sa > 0) break;
            for (auto& a : distinct_partitions(sa, s)) {
                for (auto& kap : partitions(d - sa - 2 * t, t)) {
                    Partition mu(static_cast<size_t>(t), 2);
                    for (size_t i = 0; i < kap.size(); ++i) mu[i] += kap[i];
                    DElt e{s, t, a, mu};
                    if (r > 0 && excluded(e, level_mu(N, l, r))) continue;
                    out.push_back(std::move(e));
                }
            }
        }
    }
    return out;
}

// distinct sub-multisets of the partition with the given size, with the
// multinomial collision count attached
void submultisets(const Partition& mu, int size,
                  const std::function<void(const Partition&, const Partition&, const Rat&)>& fn) {
    std::vector<std::pair<int, int>> vals;  // value, multiplicity
    for (int v : mu) {
        if (!vals.empty() && vals.back().first == v)
            ++vals.back().second;
        else
            vals.emplace_back(v, 1);
    }
    std::vector<int> take(vals.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (left == 0 || pos == vals.size()) {
            if (left != 0) return;
            Partition S, rest;
            Rat pc(factorial(size));
            for (size_t i = 0; i < vals.size(); ++i) {
                for (int k = 0; k < take[i]; ++k) S.push_back(vals[i].first);
                for (int k = take[i]; k < vals[i].second; ++k) rest.push_back(vals[i].first);
                pc /= Rat(factorial(take[i]));
            }
            fn(S, rest, pc);
            return;
        }
        for (int k = 0; k <= std::min(left, vals[pos].second); ++k) {
            take[pos] = k;
            rec(pos + 1, left - k);
            take[pos] = 0;
        }
    };
    rec(0, size);
}

// rows of the coupling and degree conditions over the element list
std::vector<SparseVec> dual_rows(int N, int l, const std::vector<DElt>& elts) {
    std::map<Key, std::map<int, GRat>> rows;
    auto put = [&](Key key, int col, const GRat& v) { rows[std::move(key)][col] += v; };

    for (size_t ei = 0; ei < elts.size(); ++ei) {
        const DElt& e = elts[ei];
        int col = static_cast<int>(ei);

        // coupling, contribution of the (s, t) component at base (s - 2, t)
        if (e.s >= 2) {
            for_each_perm(e.s, [&](const std::vector<int>& sg, int sign) {
                int a1 = e.a[static_cast<size_t>(sg[0])];
                int a2 = e.a[static_cast<size_t>(sg[1])];
                Key key{3, e.s - 2, a1 + a2};
                for (int p = 2; p < e.s; ++p)
                    key.push_back(e.a[static_cast<size_t>(sg[static_cast<size_t>(p)])]);
                key.push_back(-1);
                key.insert(key.end(), e.mu.begin(), e.mu.end());
                put(std::move(key), col, GRat(sign * (a2 % 2 == 0 ? 1 : -1)));
            });
        }
        // coupling, contribution of the (s, t) component at base (s, t - 1)
        if (e.t >= 1) {
            for (int alpha : distinct_vals(e.mu)) {
                if (alpha % 2 == 0) continue;
                Partition kap = remove_one(e.mu, alpha);
                for_each_perm(e.s, [&](const std::vector<int>& sg, int sign) {
                    Key key{3, e.s, alpha};
                    for (int p = 0; p < e.s; ++p)
                        key.push_back(e.a[static_cast<size_t>(sg[static_cast<size_t>(p)])]);
                    key.push_back(-1);
                    key.insert(key.end(), kap.begin(), kap.end());
                    put(std::move(key), col, GRat(2 * sign));
                });
            }
        }
        // degree bound on the symmetric variables
        for (int nu = 1; nu <= e.t; ++nu) {
            submultisets(e.mu, nu, [&](const Partition& S, const Partition& kap, const Rat& pc) {
                int zk = std::accumulate(S.begin(), S.end(), 0);
                if (zk <= N - 2 * nu) return;
                for_each_perm(e.s, [&](const std::vector<int>& sg, int sign) {
                    Key key{1, e.s, nu, zk};
                    for (int p = 0; p < e.s; ++p)
                        key.push_back(e.a[static_cast<size_t>(sg[static_cast<size_t>(p)])]);
                    key.push_back(-1);
                    key.insert(key.end(), kap.begin(), kap.end());
                    put(std::move(key), col, GRat(Rat(sign) * pc));
                });
            });
        }
        // degree bound with the first skew variable joining the diagonal
        if (e.s >= 1) {
            for (int nu = 1; nu <= e.t + 1; ++nu) {
                submultisets(e.mu, nu - 1,
                             [&](const Partition& S, const Partition& kap, const Rat& pc) {
                    int base = std::accumulate(S.begin(), S.end(), 0);
                    for (size_t q = 0; q < e.a.size(); ++q) {
                        int zk = base + e.a[q];
                        if (zk <= N - 2 * nu + 1) continue;
                        std::vector<int> arest;
                        for (size_t p = 0; p < e.a.size(); ++p)
                            if (p != q) arest.push_back(e.a[p]);
                        int qsign = q % 2 == 0 ? 1 : -1;
                        for_each_perm(e.s - 1, [&](const std::vector<int>& sg, int sign) {
                            Key key{2, e.s, nu, zk};
                            for (int p = 0; p + 1 < e.s; ++p)
                                key.push_back(arest[static_cast<size_t>(sg[static_cast<size_t>(p)])]);
                            key.push_back(-1);
                            key.insert(key.end(), kap.begin(), kap.end());
                            put(std::move(key), col, GRat(Rat(qsign * sign) * pc));
                        });
                    }
                });
            }
        }
    }

    std::vector<SparseVec> out;
    for (auto& [key, m] : rows) {
        SparseVec v;
        for (auto& [c, val] : m)
            if (!val.is_zero()) v.emplace_back(c, val);
        if (!v.empty()) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

QPoly dual_char(int N, int l, int dmax, int r) {
    if (r > 0 && level_mu(N, l, r) < 1) return QPoly();
    QPoly out;
    for (int d = 0; d <= dmax; ++d) {
        auto elts = dual_elts(N, l, d, r);
        if (elts.empty()) continue;
        int dim = static_cast<int>(elts.size()) - sparse_rank(dual_rows(N, l, elts));
        if (dim != 0) out += QPoly::q_pow(d, Rat(dim));
    }
    return out;
}

// ---------------------------------------------------------------------------
// ideal-rank route with the zero modes removed

namespace {

bool has_zero_mode(const ZMono& m) {
    if ((m.xi & 1u) != 0) return true;
    return !m.eta.empty() && m.eta[0] > 0;
}

ZPoly drop_zero(const ZPoly& p) {
    ZPoly out;
    for (const auto& [m, c] : p.terms())
        if (!has_zero_mode(m)) out.add_term(m, c);
    return out;
}

std::vector<ZMono> zfree_basis(int deg, int wt) {
    std::vector<ZMono> out;
    if (deg < 0 || wt < 0) return out;
    for (auto& m : zmono_basis(deg, wt))
        if (!has_zero_mode(m)) out.push_back(std::move(m));
    return out;
}

ZPoly zmono_poly(const ZMono& m) {
    ZPoly out = ZPoly::one();
    for (int n = 0; n < 32; ++n)
        if ((m.xi >> n) & 1u) out *= ZPoly::xi(n);
    for (size_t n = 0; n < m.eta.size(); ++n)
        for (int k = 0; k < m.eta[n]; ++k) out *= ZPoly::eta(static_cast<int>(n));
    return out;
}

struct ZGen {
    ZPoly p;
    int deg = 0;
    int wt = 0;
};

std::vector<ZGen> zfree_gens(int N, int l, int dmax, int r) {
    std::vector<ZGen> gens;
    auto push = [&](ZPoly p, int deg, int wt) {
        if (!p.is_zero() && wt <= l) gens.push_back({std::move(p), deg, wt});
    };
    for (int n = 1; n <= dmax; n += 2) push(drop_zero(quad_gen(n)), n, 2);
    for (int mu = 1; mu <= l; ++mu)
        for (int m = std::max(N - mu + 1, 1); m <= dmax; ++m)
            push(drop_zero(current_gen(mu, m)), m, mu);
    if (r > 0) {
        int mu = level_mu(N, l, r);
        ZPoly eta2 = ZPoly::eta(2);
        auto eta2_pow = [&](int k) {
            ZPoly p = ZPoly::one();
            for (int i = 0; i < k; ++i) p *= eta2;
            return p;
        };
        if (mu % 2 == 0) {
            push(eta2_pow(mu / 2), mu, mu);
        } else {
            int nu = (mu - 1) / 2;
            push(ZPoly::xi(1) * eta2_pow(nu), mu, mu);
            push(eta2_pow(nu + 1), mu + 1, mu + 1);
        }
    }
    return gens;
}

}  // namespace

QPoly zbar_char(int N, int l, int dmax, int r) {
    if (r > 0 && level_mu(N, l, r) < 1) return QPoly();
    auto gens = zfree_gens(N, l, dmax, r);
    QPoly out;
    for (int d = 0; d <= dmax; ++d) {
        auto basis = zfree_basis(d, l);
        if (basis.empty()) continue;
        std::map<ZMono, int> pos;
        for (size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], static_cast<int>(i));
        std::vector<SparseVec> rows;
        for (const auto& g : gens) {
            if (g.deg > d || g.wt > l) continue;
            for (const auto& m : zfree_basis(d - g.deg, l - g.wt)) {
                ZPoly prod = zmono_poly(m) * g.p;
                std::map<int, GRat> acc;
                for (const auto& [zm, c] : prod.terms()) acc[pos.at(zm)] += GRat(c);
                SparseVec v;
                for (auto& [i, c] : acc)
                    if (!c.is_zero()) v.emplace_back(i, c);
                if (!v.empty()) rows.push_back(std::move(v));
            }
        }
        int dim = static_cast<int>(basis.size()) - sparse_rank(std::move(rows));
        if (dim != 0) out += QPoly::q_pow(d, Rat(dim));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gordon specialization

namespace {

// image of a single dual element under the specialization attached to lambda
MPoly phi_elt(const Partition& lam, const std::vector<int>& odd_pos,
              const std::vector<int>& yblocks, const DElt& e, const Ctx& cv) {
    MPoly xpart(cv);
    if (e.s == 0) {
        xpart = MPoly::constant(cv, GRat(1));
    } else {
        for_each_perm(e.s, [&](const std::vector<int>& sg, int sign) {
            MPoly term = MPoly::constant(cv, GRat(sign));
            for (int p = 0; p < e.s; ++p)
                term *= MPoly::var(cv, cv->z_index(odd_pos[static_cast<size_t>(p)]),
                                   e.a[static_cast<size_t>(sg[static_cast<size_t>(p)])]);
            xpart += term;
        });
    }
    MPoly ypart(cv);
    if (e.t == 0) {
        ypart = MPoly::constant(cv, GRat(1));
    } else {
        for (const auto& perm : distinct_perms(e.mu, e.t)) {
            MPoly term = MPoly::constant(cv, GRat(1));
            for (int k = 0; k < e.t; ++k)
                if (perm[static_cast<size_t>(k)] > 0)
                    term *= MPoly::var(cv, cv->z_index(yblocks[static_cast<size_t>(k)]),
                                       perm[static_cast<size_t>(k)]);
            ypart += term;
        }
    }
    (void)lam;
    return xpart * ypart;
}

MPoly phi_vec(const Partition& lam, const std::vector<DElt>& elts, const SparseVec& vec,
              int s, int t, const Ctx& cv) {
    std::vector<int> odd_pos, yblocks;
    for (size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] % 2 == 1) odd_pos.push_back(static_cast<int>(i) + 1);
        for (int k = 0; k < lam[i] / 2; ++k) yblocks.push_back(static_cast<int>(i) + 1);
    }
    MPoly out(cv);
    for (const auto& [ei, c] : vec) {
        const DElt& e = elts[static_cast<size_t>(ei)];
        if (e.s != s || e.t != t) continue;
        out += c * phi_elt(lam, odd_pos, yblocks, e, cv);
    }
    return out;
}

}  // namespace

bool gordon_check(int N, int l, int dmax, int r) {
    int mu_lvl = r > 0 ? level_mu(N, l, r) : 0;
    if (r > 0 && mu_lvl < 1) return true;

    auto plist = partitions(l, l);
    std::sort(plist.begin(), plist.end(),
              [](const Partition& a, const Partition& b) { return partition_lex_less(b, a); });

    for (int d = 0; d <= dmax; ++d) {
        auto elts = dual_elts(N, l, d, r);
        if (elts.empty()) continue;
        Rref rr(static_cast<int>(elts.size()));
        for (auto& row : dual_rows(N, l, elts)) rr.add_row(std::move(row));
        auto vecs = rr.nullspace();
        if (vecs.empty()) continue;

        for (size_t li = 0; li < plist.size(); ++li) {
            const Partition& lam = plist[li];
            int n = static_cast<int>(lam.size());
            int s = 0;
            for (int part : lam)
                if (part % 2 == 1) ++s;
            int t = (l - s) / 2;
            Ctx cv = make_ctx(0, n);

            // combinations killed by every earlier specialization
            Rref cons(static_cast<int>(vecs.size()));
            for (size_t lj = 0; lj < li; ++lj) {
                const Partition& lam2 = plist[lj];
                int s2 = 0;
                for (int part : lam2)
                    if (part % 2 == 1) ++s2;
                int t2 = (l - s2) / 2;
                Ctx cv2 = make_ctx(0, static_cast<int>(lam2.size()));
                std::map<Mono, std::map<int, GRat>, MonoLess> coef;
                for (size_t k = 0; k < vecs.size(); ++k) {
                    MPoly img = phi_vec(lam2, elts, vecs[k], s2, t2, cv2);
                    for (const auto& [m, c] : img.terms()) coef[m][static_cast<int>(k)] += c;
                }
                for (auto& [m, row] : coef) {
                    SparseVec v;
                    for (auto& [k, c] : row)
                        if (!c.is_zero()) v.emplace_back(k, c);
                    if (!v.empty()) cons.add_row(std::move(v));
                }
            }

            MPoly div = MPoly::constant(cv, GRat(1));
            for (int a = 1; a <= n; ++a) {
                int ea = lam[static_cast<size_t>(a - 1)];
                if (r > 0) ea += std::max(lam[static_cast<size_t>(a - 1)] - mu_lvl + 1, 0);
                if (ea > 0) div *= MPoly::var(cv, cv->z_index(a), ea);
                for (int b = 1; b < a; ++b) {
                    MPoly va = MPoly::var(cv, cv->z_index(a), 2);
                    MPoly vb = MPoly::var(cv, cv->z_index(b), 2);
                    MPoly f = va - vb;
                    for (int k = 0; k < lam[static_cast<size_t>(a - 1)]; ++k) div *= f;
                }
            }

            for (const auto& combo : cons.nullspace()) {
                MPoly F(cv);
                for (const auto& [k, c] : combo)
                    F += c * phi_vec(lam, elts, vecs[static_cast<size_t>(k)], s, t, cv);
                if (F.is_zero()) continue;
                try {
                    (void)exact_divide(F, div);
                } catch (const DivisionError&) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace qcy
