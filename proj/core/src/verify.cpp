#include "qcy/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

#include "qcy/cycles.hpp"
#include "qcy/fermions.hpp"
#include "qcy/paths.hpp"
#include "qcy/qchar.hpp"
#include "qcy/qseries.hpp"
#include "qcy/quotients.hpp"

namespace qcy {

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

using Params = std::vector<std::pair<std::string, std::string>>;

Params ps(std::initializer_list<std::pair<const char*, long long>> xs) {
    Params out;
    for (const auto& [k, v] : xs) out.emplace_back(k, std::to_string(v));
    return out;
}

// records one result per call, timing everything since the previous call
struct Rec {
    Report& rep;
    double t0 = now_ms();

    void add(std::string check, Params params, bool ok, std::string expected = "",
             std::string computed = "") {
        CheckResult c;
        c.check = std::move(check);
        c.params = std::move(params);
        c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        c.expected = std::move(expected);
        c.computed = std::move(computed);
        double t1 = now_ms();
        c.elapsed_ms = t1 - t0;
        t0 = t1;
        rep.add(std::move(c));
    }
};

QPoly trunc_poly(const QPoly& p, int dmax) {
    QPoly out;
    for (int d = 0; d <= dmax; ++d) {
        Rat c = p.coeff_q(d);
        if (c != 0) out += QPoly::q_pow(d, c);
    }
    return out;
}

QPoly trunc_series(const QSeries& s, int dmax) {
    QPoly out;
    for (int d = 0; d <= dmax; ++d) {
        Rat c = s.coeff_q(d);
        if (c != 0) out += QPoly::q_pow(d, c);
    }
    return out;
}

std::string fnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// ---- graded characters of the cycle spaces ---------------------------------

void suite_charW(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    int dmax = o.full() ? 8 : 6;
    for (int N = 1; N <= 5; ++N)
        for (int l = 0; l <= N; ++l) {
            QPoly want = trunc_series(inv_qpochhammer(N, 2 * dmax + 1).mul(qbin(N, l)), dmax);
            QPoly got = trunc_poly(ch_w(N, l, dmax), dmax);
            rc.add("charW", ps({{"N", N}, {"l", l}}), got == want, want.str(), got.str());
        }
}

void suite_charM(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    int dmax = o.full() ? 8 : 6;
    for (int N = 1; N <= 5; ++N)
        for (int l = 0; 2 * l <= N; ++l) {
            QPoly want = trunc_poly(kostka_closed(N - 2 * l, N), dmax);
            QPoly got = trunc_poly(ch_m(N, l, dmax) * qpochhammer(N), dmax);
            rc.add("charM", ps({{"N", N}, {"l", l}}), got == want, want.str(), got.str());
        }
}

void suite_charMres(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    int dmax = o.full() ? 8 : 6;
    for (int r = 3; r <= 5; ++r)
        for (int N = 1; N <= 5; ++N)
            for (int l = 0; 2 * l <= N; ++l) {
                int m = N - 2 * l;
                int mu = r - 1 - m;
                if (m > r - 2) {
                    QPoly got = ch_m_res(N, l, r, dmax);
                    rc.add("charMresNull", ps({{"r", r}, {"N", N}, {"l", l}}), got.is_zero(),
                           "0", got.str());
                    continue;
                }
                QPoly want = trunc_poly(restricted_kostka(r - 2, m, Partition(N, 1)), dmax);
                QPoly got = trunc_poly(ch_m_res(N, l, r, dmax) * qpochhammer(N), dmax);
                rc.add("charMres", ps({{"r", r}, {"N", N}, {"l", l}}), got == want, want.str(),
                       got.str());
                if (mu > l) {
                    QPoly unres = ch_m(N, l, dmax);
                    QPoly res = ch_m_res(N, l, r, dmax);
                    rc.add("charMresDegenerate", ps({{"r", r}, {"N", N}, {"l", l}}),
                           res == unres, unres.str(), res.str());
                }
            }
}

// ---- quotient dimensions at a generic evaluation point ---------------------

void suite_evalDims(const VerifyOptions&, Report& rep) {
    Rec rc{rep};
    for (int N = 1; N <= 6; ++N)
        for (int l = 0; 2 * l <= N; ++l) {
            Int want = binom(N, l) - binom(N, l - 1);
            int got = dim_ec_m(N, l);
            rc.add("evalDim", ps({{"N", N}, {"l", l}}), Int(got) == want, want.get_str(),
                   std::to_string(got));
        }
    for (int r = 3; r <= 5; ++r)
        for (int N = 1; N <= 6; ++N)
            for (int l = 0; 2 * l <= N; ++l) {
                int m = N - 2 * l;
                if (m > r - 2) continue;
                Rat want = restricted_kostka(r - 2, m, Partition(N, 1)).eval_q1();
                int got = dim_ec_m_res(N, l, r);
                rc.add("evalDimRes", ps({{"r", r}, {"N", N}, {"l", l}}), Rat(got) == want,
                       rat_str(want), std::to_string(got));
            }
}

// ---- Kostka polynomial routes and path counts -------------------------------

void suite_kostka(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    int nmax = o.full() ? 14 : 12;
    for (int N = 1; N <= nmax; ++N) {
        bool ok = true;
        std::string exp, got;
        for (int m = N % 2; m <= N; m += 2) {
            QPoly a = kostka_fermionic(m, Partition(N, 1));
            QPoly b = kostka_closed(m, N);
            if (!(a == b) && ok) {
                ok = false;
                exp = "m=" + std::to_string(m) + ": " + b.str();
                got = a.str();
            }
        }
        rc.add("kostkaClosed", ps({{"N", N}}), ok, exp, got);
    }
    int rnmax = o.full() ? 12 : 10;
    for (int k = 1; k <= 4; ++k)
        for (int N = 1; N <= rnmax; ++N) {
            bool ok = true;
            std::string exp, got;
            for (int m = 0; m <= k; ++m) {
                QPoly a = restricted_kostka(k, m, Partition(N, 1));
                QPoly b = restricted_kostka_altsum(k, m, Partition(N, 1));
                if (!(a == b) && ok) {
                    ok = false;
                    exp = "m=" + std::to_string(m) + ": " + b.str();
                    got = a.str();
                }
            }
            rc.add("kostkaRestrictedAltsum", ps({{"k", k}, {"N", N}}), ok, exp, got);
        }
    int cnmax = o.full() ? 14 : 12;
    for (int r = 3; r <= 6; ++r)
        for (int N = 1; N <= cnmax; ++N) {
            bool ok = true;
            std::string exp, got;
            for (int m = 0; m <= r - 2; ++m) {
                long long tm = count_restricted(r, N, m);
                long long en = static_cast<long long>(restricted_paths(N, m, r).size());
                Rat kq = restricted_kostka(r - 2, m, Partition(N, 1)).eval_q1();
                if ((tm != en || Rat(static_cast<long>(tm)) != kq) && ok) {
                    ok = false;
                    exp = "m=" + std::to_string(m) + ": K(1)=" + rat_str(kq);
                    got = "transfer=" + std::to_string(tm) + " enum=" + std::to_string(en);
                }
            }
            rc.add("pathCountTriple", ps({{"r", r}, {"N", N}}), ok, exp, got);
        }
}

// ---- kernel relations of the fermionic representation -----------------------

void suite_kernels(const VerifyOptions&, Report& rep) {
    Rec rc{rep};
    for (int N = 1; N <= 6; ++N) {
        Ctx c = make_ctx(0, N, {"w"});
        int w = c->aux_index("w");

        rc.add("kernelQuadratic", ps({{"N", N}}), kernel_quadratic(c).is_zero(), "0", "");

        Ferm E = eh_sum(c, 1);
        Ferm eta1 = E.coeff_of(w, 1) + E.coeff_of(w, 0) * elementary_z(c, 1);
        rc.add("kernelEta1", ps({{"N", N}}), eta1.is_zero(), "0", "");

        for (int mu = 1; mu <= N + 2; ++mu) {
            Ferm F = current_image(c, mu);
            bool ok = true;
            int worst = -1;
            for (const auto& [mask, coeff] : F.terms())
                if (coeff.deg(w) > N - mu) {
                    ok = false;
                    worst = std::max(worst, coeff.deg(w));
                }
            rc.add("currentWindow", ps({{"N", N}, {"mu", mu}}), ok,
                   "degree <= " + std::to_string(N - mu),
                   ok ? "" : "degree " + std::to_string(worst));
        }
    }
}

// ---- images of the current algebra generators in the cycle spaces ----------

void suite_correspondence(const VerifyOptions&, Report& rep) {
    Rec rc{rep};
    GRat half(Rat(1, 2));
    GRat quarter(Rat(1, 4));
    GRat quarter_i = GRat::i() * quarter;
    for (int N = 1; N <= 5; ++N) {
        Ctx c1 = make_ctx(1, N, {"w"});
        int w1 = c1->aux_index("w");
        MPoly X1 = MPoly::var(c1, c1->x_index(1));
        MPoly W1 = MPoly::var(c1, w1);

        {
            MPoly lhs(c1);
            for (int a = 1; a <= N; ++a) {
                MPoly t = cmap(c1, {a});
                if ((N - a) % 2) t = -t;
                lhs += t;
            }
            rc.add("zeroMode", ps({{"N", N}}), lhs == half * sigma1(c1, X1), "Sigma1/2", "");
        }
        MPoly H(c1);
        for (int a = 1; a <= N; ++a) H += dc_single(c1, a) * cmap(c1, {a});
        rc.add("currentFormula", ps({{"N", N}}),
               GRat(2) * (X1 - W1) * H == W1 * theta2(c1, W1, -X1),
               "w Theta2(w,-X) / (2(X-w) Theta(w))", "");
        {
            MPoly lhs = H.coeff_of(w1, 1) + elementary_z(c1, 1) * H.coeff_of(w1, 0);
            rc.add("firstMode", ps({{"N", N}}), lhs == -half * gamma1(c1, X1), "-Gamma1/2", "");
        }

        if (N < 2) continue;
        Ctx c2 = make_ctx(2, N, {"w"});
        int w2 = c2->aux_index("w");
        MPoly Y1 = MPoly::var(c2, c2->x_index(1));
        MPoly Y2 = MPoly::var(c2, c2->x_index(2));
        MPoly W2 = MPoly::var(c2, w2);

        {
            MPoly lhs(c2);
            for (int a = 1; a <= N; ++a)
                for (int b = a + 1; b <= N; ++b) {
                    MPoly t = cmap(c2, {a, b});
                    if ((a + b) % 2) t = -t;
                    lhs += t;
                }
            rc.add("zeroModeSquare", ps({{"N", N}}),
                   -GRat::i() * lhs == quarter_i * sigma2(c2, Y1, Y2), "i Sigma2/4", "");
        }
        MPoly K(c2);
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b) K += dc_pair(c2, a, b) * cmap(c2, {a, b});
        {
            MPoly s12 = Y1 + Y2;
            MPoly lhs = GRat::i() * K * s12 * (Y1 + W2) * (Y2 + W2) * (Y1 - W2) * (Y2 - W2);
            MPoly rhs =
                (Y1 - Y2) * W2 * W2 * theta2(c2, Y1, Y2) * theta(c2, W2) * (Y1 - W2) *
                    (Y2 - W2) +
                theta(c2, -Y2) * W2 * W2 * theta2(c2, W2, -Y1) * s12 * (Y1 + W2) * (Y2 - W2) -
                theta(c2, -Y1) * W2 * W2 * theta2(c2, W2, -Y2) * s12 * (Y2 + W2) * (Y1 - W2);
            rc.add("currentSquareFormula", ps({{"N", N}}), lhs == quarter_i * rhs,
                   "three-term Theta expression / 4i", "");
        }
        {
            MPoly e1 = elementary_z(c2, 1);
            MPoly h2 = e1 * e1 - elementary_z(c2, 2);
            MPoly lhs =
                K.coeff_of(w2, 2) + e1 * K.coeff_of(w2, 1) + h2 * K.coeff_of(w2, 0);
            rc.add("secondMode", ps({{"N", N}}), lhs == quarter * gamma2(c2, Y1, Y2),
                   "Gamma2/4", "");
        }
    }
}

// ---- bigraded algebra character, three routes --------------------------------

void suite_supernomial(const VerifyOptions&, Report& rep) {
    Rec rc{rep};
    int dmax = 6;
    for (int N = 1; N <= 4; ++N)
        for (int l = 0; l <= N; ++l) {
            QPoly want = trunc_poly(qbin(N, l), dmax);
            QPoly got = trunc_poly(zbar_char_ideal(N, l, dmax), dmax);
            rc.add("idealRank", ps({{"N", N}, {"l", l}}), got == want, want.str(), got.str());
        }
    for (int N = 1; N <= 4; ++N)
        for (int l = 0; l <= N; ++l) {
            QPoly a = dual_char(N, l, dmax);
            QPoly b = zbar_char(N, l, dmax);
            rc.add("dualOracle", ps({{"N", N}, {"l", l}}), a == b, b.str(), a.str());
        }
    for (int N = 1; N <= 4; ++N)
        for (int l = 0; l <= N; ++l) {
            QPoly sum;
            for (int lp = 0; lp <= std::min(l, N - l); ++lp) sum += dual_char(N, lp, dmax);
            QPoly want = trunc_poly(qbin(N, l), dmax);
            rc.add("weightSum", ps({{"N", N}, {"l", l}}), trunc_poly(sum, dmax) == want,
                   want.str(), sum.str());
        }
}

// ---- chiral decomposition of the minimal-model characters --------------------

void suite_virasoro(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    int order = o.full() ? 16 : 10;
    int lmax = o.full() ? 4 : 3;
    for (int r = 3; r <= 4; ++r)
        for (int m = 0; m <= r - 2; ++m) {
            for (int L = 0; L <= lmax; ++L) {
                bool ok = verify_vir_identity(r, m, L, 2 * order);
                rc.add("chiralIdentity", ps({{"r", r}, {"m", m}, {"L", L}}), ok,
                       "match to q^" + std::to_string(order), "");
            }
            Rat off;
            QSeries s = rsg_sector_char(r, m, 0, 2 * order + 1, &off);
            Rat woff = conf_weight(r, m + 1, 1);
            rc.add("sectorOffset", ps({{"r", r}, {"m", m}}), off == woff, rat_str(woff),
                   rat_str(off));
            QSeries v = virasoro_char(r, m + 1, 1, 2 * order + 1);
            bool same = true;
            for (int n = 0; n <= order; ++n)
                if (s.coeff_q(n) != v.coeff_q(n)) same = false;
            rc.add("sectorSeries", ps({{"r", r}, {"m", m}}), same,
                   trunc_series(v, order).str(), trunc_series(s, order).str());
        }
}

// ---- the finite series identity behind the decomposition ---------------------

void suite_seriesLemma(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    int nmax = o.full() ? 10 : 8;
    for (int N = 1; N <= nmax; ++N) {
        bool ok = true;
        std::string exp, got;
        for (int s = 0; s <= N + 2; ++s) {
            QPoly a = series_lemma_lhs(N, s);
            QPoly b = series_lemma_rhs(N, s);
            if (!(a == b) && ok) {
                ok = false;
                exp = "s=" + std::to_string(s) + ": " + b.str();
                got = a.str();
            }
        }
        rc.add("seriesLemma", ps({{"N", N}}), ok, exp, got);
    }
}

// ---- recursions for the current coefficient functions ------------------------

void suite_recursions(const VerifyOptions&, Report& rep) {
    Rec rc{rep};
    for (int N = 1; N <= 5; ++N) {
        Ctx c = make_ctx(0, N, {"w"});
        MPoly W = MPoly::var(c, c->aux_index("w"));
        MPoly D = dc_set(c, {});
        MPoly one = MPoly::constant(c, GRat(1));
        auto Z = [&](int j) { return MPoly::var(c, c->z_index(j)); };

        bool ok = true;
        for (int a = 1; a <= N && ok; ++a) {
            MPoly rhs = D;
            for (int b = a + 1; b <= N; ++b) rhs += GRat(2) * dc_single(c, b);
            ok = (one - Z(a) * W) * dc_single(c, a) == Z(a) * W * rhs;
        }
        rc.add("coeffRecA", ps({{"N", N}}), ok, "recursion holds", "");

        if (N >= 2) {
            ok = true;
            for (int a = 1; a <= N && ok; ++a)
                for (int b = a + 1; b <= N && ok; ++b) {
                    MPoly s(c);
                    for (int p = a + 1; p < b; ++p) s += dc_B(c, p, b);
                    MPoly lhs = Z(b) * (one - Z(a) * W) * dc_B(c, a, b);
                    MPoly rhs = GRat(2) * Z(a) * W * Z(b) * s +
                                Z(a) * (one - Z(b) * W) * dc_single(c, b);
                    ok = lhs == rhs;
                }
            rc.add("coeffRecB", ps({{"N", N}}), ok, "recursion holds", "");
        }
        if (N >= 3) {
            ok = true;
            for (int a = 1; a <= N && ok; ++a)
                for (int b = a + 1; b <= N && ok; ++b)
                    for (int cc = b + 1; cc <= N && ok; ++cc) {
                        MPoly lhs =
                            (one - Z(a) * W - Z(b) * W + Z(cc) * W) * dc_C(c, a, b, cc);
                        MPoly rhs =
                            GRat(4) * Z(a) * W * (dc_single(c, b) + dc_B(c, b, cc)) +
                            GRat(4) * Z(b) * W * (dc_B(c, a, b) - dc_B(c, a, cc));
                        for (int p = a + 1; p < b; ++p)
                            rhs += GRat(2) * Z(a) * W * dc_C(c, p, b, cc);
                        for (int p = b + 1; p < cc; ++p) {
                            rhs -= GRat(2) * Z(a) * W * dc_C(c, b, p, cc);
                            rhs += GRat(2) * Z(b) * W * dc_C(c, a, p, cc);
                            rhs -= GRat(2) * Z(p) * W * dc_C(c, a, b, p);
                        }
                        ok = lhs == rhs;
                    }
            rc.add("coeffRecC", ps({{"N", N}}), ok, "recursion holds", "");
        }
    }
    for (int N = 1; N <= 4; ++N)
        for (int l = 0; l <= N; ++l) {
            bool ok = true;
            std::vector<int> M(l);
            for (int i = 0; i < l; ++i) M[i] = i + 1;
            while (ok) {
                Ctx c = make_ctx(l, N);
                ok = bethe_cmap(c, M) == cmap(c, M);
                int i = l - 1;
                while (i >= 0 && M[i] == N - (l - 1 - i)) --i;
                if (i < 0) break;
                ++M[i];
                for (int j = i + 1; j < l; ++j) M[j] = M[j - 1] + 1;
            }
            rc.add("betheOracle", ps({{"N", N}, {"l", l}}), ok, "closed form", "");
        }
}

// ---- quantum group modules at the root of unity -------------------------------

void suite_rootModules(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    double mtol = 0.1 * o.tolerance;
    for (int r = 3; r <= 6; ++r) {
        double worst = 0;
        bool dims = true;
        for (int al : {1, -1})
            for (int s = 0; s <= r - 2; ++s) {
                auto v = module_v(r, s, al);
                dims = dims && v.dim == s + 1;
                worst = std::max(worst, module_residual(v, r));
            }
        rc.add("moduleRelations", {{"r", std::to_string(r)}, {"kind", "V"}},
               dims && worst < mtol, "< " + fnum(mtol), fnum(worst));
        worst = 0;
        dims = true;
        for (int al : {1, -1})
            for (int s = 0; s <= r - 1; ++s) {
                auto w = module_w(r, s, al);
                dims = dims && w.dim == r;
                worst = std::max(worst, module_residual(w, r));
            }
        rc.add("moduleRelations", {{"r", std::to_string(r)}, {"kind", "W"}},
               dims && worst < mtol, "< " + fnum(mtol), fnum(worst));
        worst = 0;
        dims = true;
        for (int al : {1, -1})
            for (int s = 0; s <= r - 2; ++s) {
                auto x = module_x(r, s, al);
                dims = dims && x.dim == 2 * r;
                worst = std::max(worst, module_residual(x, r));
            }
        rc.add("moduleRelations", {{"r", std::to_string(r)}, {"kind", "X"}},
               dims && worst < mtol, "< " + fnum(mtol), fnum(worst));

        auto v1 = module_v(r, 1, 1);
        rc.add("moduleShape", ps({{"r", r}}),
               v1.dim == 2 && std::abs(v1.E.at(0, 1) - 1.0) < o.tolerance, "E v1 = v0", "");

        bool ok = true;
        for (int n = 1; n <= 12 && ok; ++n) {
            auto gb = goodbad_dims(r, n);
            ok = gb.dim_good + gb.dim_bad == (1LL << n);
        }
        rc.add("stateCount", ps({{"r", r}}), ok, "good + bad = 2^n", "");

        ok = true;
        for (int n = 1; n <= 12 && ok; ++n) {
            auto gb = goodbad_dims(r, n);
            for (int s = 0; s <= r - 2 && ok; ++s)
                ok = gb.mult[static_cast<size_t>(s)] == count_restricted(r, n, s);
        }
        rc.add("sectorMult", ps({{"r", r}}), ok, "multiplicity = path count", "");
    }
}

// ---- floating-point path vectors, RSOS weights, braid action ------------------

double vec_norm(const std::vector<Cplx>& v) {
    double m = 0;
    for (const Cplx& c : v) m = std::max(m, std::abs(c));
    return m;
}

std::vector<Cplx> matvec(const CMat& m, const std::vector<Cplx>& v) {
    std::vector<Cplx> out(static_cast<size_t>(m.nr), 0.0);
    for (int i = 0; i < m.nr; ++i)
        for (int j = 0; j < m.nc; ++j)
            out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

void suite_pathNumerics(const VerifyOptions& o, Report& rep) {
    Rec rc{rep};
    Cplx q = generic_q();
    double tol = o.tolerance;

    for (int N = 1; N <= 6; ++N) {
        std::vector<std::vector<Cplx>> all;
        for (int m = N % 2; m <= N; m += 2)
            for (const Path& J : classical_paths(N, m))
                for (int tm = -m; tm <= m; tm += 2) all.push_back(path_vector(J, tm, q));
        rc.add("familySize", ps({{"N", N}}), static_cast<int>(all.size()) == (1 << N),
               std::to_string(1 << N), std::to_string(all.size()));

        double worst = 0;
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i; j < all.size(); ++j) {
                Cplx g = 0;
                for (size_t k = 0; k < all[i].size(); ++k) g += all[i][k] * all[j][k];
                worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
            }
        rc.add("orthonormal", ps({{"N", N}}), worst < tol, "< " + fnum(tol), fnum(worst));

        CMat e = e_total(N, q);
        worst = 0;
        for (int m = N % 2; m <= N; m += 2)
            for (const Path& J : classical_paths(N, m))
                worst = std::max(worst, vec_norm(matvec(e, path_vector(J, m, q))));
        rc.add("annihilator", ps({{"N", N}}), worst < tol, "< " + fnum(tol), fnum(worst));

        bool ok = true;
        for (int l = 0; 2 * l <= N; ++l) {
            auto om = omega_basis(N, l, q);
            ok = ok && om.size() == classical_paths(N, N - 2 * l).size();
        }
        rc.add("weightDim", ps({{"N", N}}), ok, "path count", "");
    }

    for (int N = 2; N <= 6; ++N)
        for (int l = 1; 2 * l <= N; ++l) {
            Path J = zigzag_path(N, l);
            bool ok = J.length() == N && J.weight() == N - 2 * l;
            Cplx two = qint(q, 2);
            for (int s = 0; s < (1 << l) && ok; ++s) {
                std::vector<int> M;
                int se = 0, plus = 0;
                for (int p = 1; p <= l; ++p) {
                    int ep = (s >> (p - 1)) & 1 ? -1 : 1;
                    se += ep;
                    if (ep == 1) ++plus;
                    M.push_back(ep == -1 ? 2 * p - 1 : 2 * p);
                }
                Cplx expect = (plus % 2 ? -1.0 : 1.0) * std::exp(0.5 * se * std::log(q)) /
                              std::pow(two, 0.5 * l);
                ok = std::abs(path_coeff(J, M, q) - expect) < tol;
            }
            auto u = path_vector(J, J.weight(), q);
            Cplx norm = 0;
            long supp = 0;
            for (const Cplx& x : u) {
                norm += x * x;
                if (std::abs(x) > 1e-13) ++supp;
            }
            ok = ok && supp == (1L << l) && std::abs(norm - 1.0) < tol;
            rc.add("zigzagCoeff", ps({{"N", N}, {"l", l}}), ok, "closed form", "");
        }

    for (int r = 3; r <= 6; ++r)
        rc.add("rsosIdentity", ps({{"r", r}}), rsos_zero_is_identity(r), "W(0) = Id", "");
    rc.add("rsosType1", ps({{"r", 4}}),
           std::abs(rsos_weight(4, 0, 1, 1, 2, 0.7) - 1.0) == 0.0, "1", "");
    {
        std::mt19937 rng(o.seed);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        int rmax = o.full() ? 6 : 5;
        for (int r = 4; r <= rmax; ++r) {
            double worst = 0;
            for (int t = 0; t < 20; ++t)
                worst = std::max(worst, rsos_ybe_residual(r, dist(rng), dist(rng)));
            rc.add("rsosYbe", ps({{"r", r}}), worst < tol, "< " + fnum(tol), fnum(worst));
        }
    }

    int nb = o.full() ? 7 : 6;
    const double pi = std::acos(-1.0);
    for (int r = 3; r <= 6; ++r) {
        Cplx eps = std::exp(Cplx(0.0, -pi / r));
        for (int n = 2; n <= nb; ++n) {
            CMat e = e_total(n, eps), f = f_total(n, eps), t = t_total(n, eps);
            double worst = 0;
            for (int i = 1; i < n; ++i) {
                CMat rp = rplus_op(n, i, r);
                worst = std::max(worst, max_abs_diff(mul(rp, e), mul(e, rp)));
                worst = std::max(worst, max_abs_diff(mul(rp, f), mul(f, rp)));
                worst = std::max(worst, max_abs_diff(mul(rp, t), mul(t, rp)));
            }
            rc.add("braidCommute", ps({{"r", r}, {"n", n}}), worst < tol, "< " + fnum(tol),
                   fnum(worst));

            worst = 0;
            for (int l = 0; 2 * l <= n; ++l) {
                auto om = omega_basis(n, l, eps);
                CMat pi = pi_op(n, l, r);
                for (const auto& v : om) {
                    for (int i = 1; i < n; ++i) {
                        auto wv = matvec(rplus_op(n, i, r), v);
                        worst = std::max(
                            worst, vec_norm(matvec(e, wv)) / std::max(1.0, vec_norm(wv)));
                    }
                    auto wv = matvec(pi, v);
                    worst = std::max(worst,
                                     vec_norm(matvec(e, wv)) / std::max(1.0, vec_norm(wv)));
                }
            }
            rc.add("braidPreserve", ps({{"r", r}, {"n", n}}), worst < tol, "< " + fnum(tol),
                   fnum(worst));
        }
    }
}

// ---- Gordon filtration divisibility ------------------------------------------

void suite_divisibility(const VerifyOptions&, Report& rep) {
    Rec rc{rep};
    for (int N = 1; N <= 3; ++N)
        for (int l = 0; l <= 2 && 2 * l <= N + 1; ++l)
            rc.add("gordonFactor", ps({{"N", N}, {"l", l}}), gordon_check(N, l, 5),
                   "exact division", "");
    rc.add("gordonFactorRes", ps({{"N", 3}, {"l", 1}, {"r", 3}}), gordon_check(3, 1, 5, 3),
           "exact division", "");
}

const std::vector<Suite>& suite_registry() {
    static const std::vector<Suite> reg = {
        {"charW", "graded character of the minimal cycle spaces", suite_charW},
        {"charM", "graded character of the quotient spaces vs Kostka polynomials",
         suite_charM},
        {"charMres", "restricted quotient characters vs level-restricted Kostka",
         suite_charMres},
        {"evalDims", "quotient dimensions at a generic evaluation point", suite_evalDims},
        {"kostka", "Kostka polynomial routes and restricted path counts", suite_kostka},
        {"kernels", "kernel relations of the fermionic current representation",
         suite_kernels},
        {"correspondence", "current generators mapped to named symmetric cycles",
         suite_correspondence},
        {"supernomial", "bigraded algebra character, ideal-rank and dual-space routes",
         suite_supernomial},
        {"virasoro", "chiral decomposition of minimal-model characters", suite_virasoro},
        {"seriesLemma", "finite series identity behind the decomposition",
         suite_seriesLemma},
        {"recursions", "closed-form current coefficients satisfy their recursions",
         suite_recursions},
        {"rootModules", "quantum group modules and sector multiplicities at a root of unity",
         suite_rootModules},
        {"pathNumerics", "path vectors, RSOS weights and braid operators numerically",
         suite_pathNumerics},
        {"divisibility", "Gordon specialization divisibility of dual-space elements",
         suite_divisibility},
    };
    return reg;
}

}  // namespace

const std::vector<Suite>& suites() { return suite_registry(); }

const Suite* find_suite(const std::string& name) {
    for (const Suite& s : suites())
        if (s.name == name) return &s;
    return nullptr;
}

Report run_verification(const VerifyOptions& opt, const std::vector<std::string>& names) {
    std::vector<const Suite*> sel;
    if (names.empty()) {
        for (const Suite& s : suites()) sel.push_back(&s);
    } else {
        for (const std::string& n : names) {
            const Suite* s = find_suite(n);
            if (!s) throw std::invalid_argument("unknown suite: " + n);
            sel.push_back(s);
        }
    }

    double t0 = now_ms();
    std::vector<Report> parts(sel.size());
    auto run_one = [&](size_t i) {
        try {
            sel[i]->run(opt, parts[i]);
        } catch (const std::exception& e) {
            CheckResult c;
            c.check = "exception";
            c.params = {{"suite", sel[i]->name}};
            c.status = CheckStatus::Fail;
            c.computed = e.what();
            parts[i].add(std::move(c));
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || sel.size() <= 1) {
        for (size_t i = 0; i < sel.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        size_t nt = std::min<size_t>(static_cast<size_t>(jobs), sel.size());
        for (size_t t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                for (size_t i; (i = next.fetch_add(1)) < sel.size();) run_one(i);
            });
        for (std::thread& th : pool) th.join();
    }

    Report rep;
    char tolbuf[32];
    std::snprintf(tolbuf, sizeof tolbuf, "%g", opt.tolerance);
    rep.config = {{"level", opt.level},
                  {"seed", std::to_string(opt.seed)},
                  {"tolerance", tolbuf}};
    std::string joined;
    for (const Suite* s : sel) {
        if (!joined.empty()) joined += ",";
        joined += s->name;
    }
    rep.config.emplace_back("suites", names.empty() ? "all" : joined);
    for (Report& p : parts)
        for (CheckResult& c : p.checks) rep.add(std::move(c));
    rep.wall_ms = now_ms() - t0;
    return rep;
}

}  // namespace qcy
