#include "qcy/fermions.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>

#include "qcy/linalg.hpp"
#include "qcy/symfn.hpp"

namespace qcy {

Ferm Ferm::scalar(Ctx c, MPoly v) {
    Ferm f(std::move(c));
    if (!v.is_zero()) f.t_.emplace(0u, std::move(v));
    return f;
}

Ferm Ferm::psi(Ctx c, int a) {
    Ferm f(c);
    f.t_.emplace(1u << (a - 1), MPoly::constant(c, GRat(1)));
    return f;
}

void Ferm::add_term(uint32_t mask, const MPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = t_.find(mask);
    if (it == t_.end()) {
        t_.emplace(mask, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MPoly Ferm::coeff(uint32_t mask) const {
    auto it = t_.find(mask);
    return it == t_.end() ? MPoly(ctx_) : it->second;
}

Ferm& Ferm::operator+=(const Ferm& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, v] : o.t_) add_term(m, v);
    return *this;
}

Ferm& Ferm::operator-=(const Ferm& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, v] : o.t_) add_term(m, MPoly(v) * GRat(-1));
    return *this;
}

int grassmann_sign(uint32_t a, uint32_t b) {
    int inv = 0;
    for (uint32_t rest = b; rest;) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        inv += std::popcount(a >> (p + 1));
    }
    return inv % 2 ? -1 : 1;
}

Ferm& Ferm::operator*=(const Ferm& o) {
    Ferm out(ctx_ ? ctx_ : o.ctx_);
    for (const auto& [ma, va] : t_) {
        for (const auto& [mb, vb] : o.t_) {
            if (ma & mb) continue;
            MPoly prod = va * vb;
            if (grassmann_sign(ma, mb) < 0) prod *= GRat(-1);
            out.add_term(ma | mb, prod);
        }
    }
    return *this = std::move(out);
}

Ferm& Ferm::operator*=(const MPoly& s) {
    Ferm out(ctx_);
    for (const auto& [m, v] : t_) out.add_term(m, v * s);
    return *this = std::move(out);
}

Ferm& Ferm::operator*=(const GRat& s) {
    Ferm out(ctx_);
    for (const auto& [m, v] : t_) out.add_term(m, MPoly(v) * s);
    return *this = std::move(out);
}

Ferm Ferm::pow(int k) const {
    assert(k >= 0);
    Ferm out = scalar(ctx_, MPoly::constant(ctx_, GRat(1)));
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
}

Ferm Ferm::coeff_of(int var, int k) const {
    Ferm out(ctx_);
    for (const auto& [m, v] : t_) out.add_term(m, v.coeff_of(var, k));
    return out;
}

Ferm Ferm::negate_var(int var) const {
    Ferm out(ctx_);
    for (const auto& [m, v] : t_) out.add_term(m, v.negate_var(var));
    return out;
}

int Ferm::deg(int var) const {
    int d = -1;
    for (const auto& [m, v] : t_) d = std::max(d, v.deg(var));
    return d;
}

Ferm rho_xi0(const Ctx& c) {
    Ferm out(c);
    for (int a = 1; a <= c->n_z; ++a) {
        GRat s((c->n_z - a) % 2 ? Rat(-1) : Rat(1));
        out.add_term(1u << (a - 1), MPoly::constant(c, s));
    }
    return out;
}

Ferm rho_eta0(const Ctx& c) {
    Ferm out(c);
    for (int a = 1; a <= c->n_z; ++a) {
        for (int b = a + 1; b <= c->n_z; ++b) {
            GRat s((a + b) % 2 ? Rat(-1) : Rat(1));
            out.add_term((1u << (a - 1)) | (1u << (b - 1)), MPoly::constant(c, s));
        }
    }
    return out;
}

MPoly dc_set(const Ctx& c, const std::vector<int>& A) {
    int N = c->n_z;
    int w = c->aux_index("w");
    // factor type per site: 0 outside all intervals, 1 strictly inside, 2 endpoint
    std::vector<int> kind(static_cast<size_t>(N) + 1, 0);
    size_t i = 0;
    while (i + 1 < A.size()) {
        kind[static_cast<size_t>(A[i])] = 2;
        kind[static_cast<size_t>(A[i + 1])] = 2;
        for (int j = A[i] + 1; j < A[i + 1]; ++j) kind[static_cast<size_t>(j)] = 1;
        i += 2;
    }
    if (i < A.size()) {
        kind[static_cast<size_t>(A[i])] = 2;
        for (int j = A[i] + 1; j <= N; ++j) kind[static_cast<size_t>(j)] = 1;
    }
    MPoly out = MPoly::constant(c, GRat(1));
    MPoly wv = MPoly::var(c, w);
    for (int j = 1; j <= N; ++j) {
        MPoly zw = MPoly::var(c, c->z_index(j)) * wv;
        switch (kind[static_cast<size_t>(j)]) {
            case 0: out *= MPoly::constant(c, GRat(1)) - zw; break;
            case 1: out *= MPoly::constant(c, GRat(1)) + zw; break;
            default: out *= zw; break;
        }
    }
    return out;
}

MPoly dc_single(const Ctx& c, int a) { return dc_set(c, {a}); }

MPoly dc_pair(const Ctx& c, int a, int b) { return dc_set(c, {a, b}); }

namespace {

void for_each_subset(int N, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> sel;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(sel.size()) == k) {
            f(sel);
            return;
        }
        if (N - next + 1 < k - static_cast<int>(sel.size())) return;
        for (int a = next; a <= N; ++a) {
            sel.push_back(a);
            rec(a + 1);
            sel.pop_back();
        }
    };
    rec(1);
}

Ferm set_sum(const Ctx& c, int size) {
    Ferm out(c);
    for_each_subset(c->n_z, size, [&](const std::vector<int>& A) {
        uint32_t mask = 0;
        for (int a : A) mask |= 1u << (a - 1);
        out.add_term(mask, dc_set(c, A));
    });
    return out;
}

}  // namespace

Ferm eh_sum(const Ctx& c, int k) { return set_sum(c, 2 * k); }

Ferm xih_sum(const Ctx& c, int k) { return set_sum(c, 2 * k + 1); }

Ferm current_image(const Ctx& c, int mu) {
    assert(mu >= 1);
    Ferm rx0 = rho_xi0(c);
    Ferm re0 = rho_eta0(c);
    Ferm out(c);
    if (mu % 2) {
        int nu = (mu - 1) / 2;
        for (int k = 0; k <= nu; ++k) {
            GRat coef(Rat(binom(nu, k) * factorial(k)));
            out += (rx0 * re0.pow(nu - k) * eh_sum(c, k)) * coef;
            out += (re0.pow(nu - k) * xih_sum(c, k)) * coef;
        }
    } else {
        int nu = mu / 2;
        for (int k = 0; k <= nu; ++k) {
            GRat coef(Rat(binom(nu, k) * factorial(k)));
            out += (re0.pow(nu - k) * eh_sum(c, k)) * coef;
        }
        for (int k = 0; k + 1 <= nu; ++k) {
            GRat coef(Rat(nu) * Rat(binom(nu - 1, k) * factorial(k)));
            out += (rx0 * re0.pow(nu - 1 - k) * xih_sum(c, k)) * coef;
        }
    }
    return out;
}

Ferm kernel_quadratic(const Ctx& c) {
    int w = c->aux_index("w");
    MPoly D = dc_set(c, {});
    MPoly Dm = D.negate_var(w);
    Ferm x0 = xih_sum(c, 0);
    Ferm e1 = eh_sum(c, 1);
    Ferm out = x0 * x0.negate_var(w);
    out += e1 * Dm;
    out -= e1.negate_var(w) * D;
    return out;
}

MPoly dc_B(const Ctx& c, int a, int b) {
    assert(a < b);
    int N = c->n_z;
    MPoly wv = MPoly::var(c, c->aux_index("w"));
    MPoly out = MPoly::var(c, c->z_index(a)) * wv;
    for (int j = 1; j < a; ++j)
        out *= MPoly::constant(c, GRat(1)) - MPoly::var(c, c->z_index(j)) * wv;
    out *= MPoly::constant(c, GRat(1)) - MPoly::var(c, c->z_index(b)) * wv;
    for (int j = a + 1; j <= N; ++j) {
        if (j == b) continue;
        out *= MPoly::constant(c, GRat(1)) + MPoly::var(c, c->z_index(j)) * wv;
    }
    return out;
}

MPoly dc_C(const Ctx& c, int a, int b, int cc) {
    assert(a < b && b < cc);
    int N = c->n_z;
    MPoly wv = MPoly::var(c, c->aux_index("w"));
    MPoly out = MPoly::constant(c, GRat(8));
    out *= MPoly::var(c, c->z_index(a)) * wv;
    out *= MPoly::var(c, c->z_index(b)) * wv;
    for (int j = 1; j < a; ++j)
        out *= MPoly::constant(c, GRat(1)) - MPoly::var(c, c->z_index(j)) * wv;
    for (int j = a + 1; j < b; ++j)
        out *= MPoly::constant(c, GRat(1)) + MPoly::var(c, c->z_index(j)) * wv;
    for (int j = b + 1; j < cc; ++j)
        out *= MPoly::constant(c, GRat(1)) - MPoly::var(c, c->z_index(j)) * wv;
    for (int j = cc + 1; j <= N; ++j)
        out *= MPoly::constant(c, GRat(1)) + MPoly::var(c, c->z_index(j)) * wv;
    return out;
}

int ZMono::degree() const {
    int d = 0;
    for (uint32_t rest = xi; rest;) {
        d += std::countr_zero(rest);
        rest &= rest - 1;
    }
    for (size_t n = 0; n < eta.size(); ++n) d += static_cast<int>(n) * eta[n];
    return d;
}

int ZMono::weight() const {
    int w = std::popcount(xi);
    for (uint16_t e : eta) w += 2 * e;
    return w;
}

void ZMono::trim() {
    while (!eta.empty() && eta.back() == 0) eta.pop_back();
}

ZPoly ZPoly::one() {
    ZPoly p;
    p.t_.emplace(ZMono{}, Rat(1));
    return p;
}

ZPoly ZPoly::xi(int n) {
    ZPoly p;
    ZMono m;
    m.xi = 1u << n;
    p.t_.emplace(std::move(m), Rat(1));
    return p;
}

ZPoly ZPoly::eta(int n) {
    ZPoly p;
    ZMono m;
    m.eta.assign(static_cast<size_t>(n) + 1, 0);
    m.eta[static_cast<size_t>(n)] = 1;
    p.t_.emplace(std::move(m), Rat(1));
    return p;
}

void ZPoly::add_term(ZMono m, const Rat& c) {
    if (c == 0) return;
    m.trim();
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    for (const auto& [m, v] : o.t_) add_term(m, v);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    for (const auto& [m, v] : o.t_) add_term(m, -v);
    return *this;
}

ZPoly& ZPoly::operator*=(const ZPoly& o) {
    ZPoly out;
    for (const auto& [ma, va] : t_) {
        for (const auto& [mb, vb] : o.t_) {
            if (ma.xi & mb.xi) continue;
            ZMono m;
            m.xi = ma.xi | mb.xi;
            m.eta.assign(std::max(ma.eta.size(), mb.eta.size()), 0);
            for (size_t n = 0; n < ma.eta.size(); ++n) m.eta[n] += ma.eta[n];
            for (size_t n = 0; n < mb.eta.size(); ++n) m.eta[n] += mb.eta[n];
            Rat prod = va * vb;
            if (grassmann_sign(ma.xi, mb.xi) < 0) prod = -prod;
            out.add_term(std::move(m), prod);
        }
    }
    return *this = std::move(out);
}

ZPoly& ZPoly::operator*=(const Rat& s) {
    if (s == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, v] : t_) v *= s;
    return *this;
}

ZPoly quad_gen(int n) {
    ZPoly out;
    for (int j = 1; j < n; ++j) {
        int k = n - j;
        ZPoly term = ZPoly::xi(j) * ZPoly::xi(k);
        if (k % 2) term *= Rat(-1);
        out += term;
    }
    if (n % 2) out += ZPoly::eta(n) * Rat(2);
    return out;
}

namespace {

using ZSeries = std::vector<ZPoly>;  // index = power of the parameter

ZSeries zs_mul(const ZSeries& a, const ZSeries& b, int cap) {
    ZSeries out(static_cast<size_t>(cap) + 1);
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= cap; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= cap; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

ZSeries zs_pow(const ZSeries& a, int k, int cap) {
    ZSeries out(static_cast<size_t>(cap) + 1);
    out[0] = ZPoly::one();
    for (int i = 0; i < k; ++i) out = zs_mul(out, a, cap);
    return out;
}

}  // namespace

ZPoly current_gen(int mu, int m) {
    assert(mu >= 1 && m >= 0);
    int cap = m;
    ZSeries xis(static_cast<size_t>(cap) + 1), etas(static_cast<size_t>(cap) + 1);
    xis[0] = ZPoly::xi(0);
    etas[0] = ZPoly::eta(0);
    for (int n = 1; n <= cap; ++n) {
        xis[static_cast<size_t>(n)] = ZPoly::xi(n);
        etas[static_cast<size_t>(n)] = ZPoly::eta(n);
    }
    if (mu % 2) {
        int nu = (mu - 1) / 2;
        ZSeries J = zs_mul(xis, zs_pow(etas, nu, cap), cap);
        return J[static_cast<size_t>(m)];
    }
    int nu = mu / 2;
    ZSeries J = zs_pow(etas, nu, cap);
    ZSeries x0xi(static_cast<size_t>(cap) + 1);
    for (int n = 1; n <= cap; ++n) x0xi[static_cast<size_t>(n)] = ZPoly::xi(0) * ZPoly::xi(n);
    ZSeries corr = zs_mul(x0xi, zs_pow(etas, nu - 1, cap), cap);
    for (int n = 0; n <= cap; ++n) J[static_cast<size_t>(n)] += corr[static_cast<size_t>(n)] * Rat(nu);
    return J[static_cast<size_t>(m)];
}

std::vector<ZMono> zmono_basis(int deg, int wt) {
    std::vector<ZMono> out;
    if (deg < 0 || wt < 0) return out;
    for (int s = wt % 2; s <= wt; s += 2) {
        int t = (wt - s) / 2;
        // distinct xi indices, ascending
        std::vector<std::vector<int>> xisets;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int next, int rem) {
            if (static_cast<int>(cur.size()) == s) {
                if (rem >= 0) xisets.push_back(cur);
                return;
            }
            for (int n = next; n <= rem; ++n) {
                cur.push_back(n);
                rec(n + 1, rem - n);
                cur.pop_back();
            }
            // the remaining slots need strictly increasing indices, so stop here
        };
        if (s == 0) {
            xisets.push_back({});
        } else {
            rec(0, deg);
        }
        for (const auto& xs : xisets) {
            int dxi = 0;
            for (int n : xs) dxi += n;
            int rem = deg - dxi;
            if (rem < 0) continue;
            for (const auto& lam : partitions(rem, t, rem)) {
                ZMono m;
                for (int n : xs) m.xi |= 1u << n;
                int maxpart = lam.empty() ? 0 : lam.front();
                m.eta.assign(static_cast<size_t>(maxpart) + 1, 0);
                for (int p : lam) m.eta[static_cast<size_t>(p)] += 1;
                m.eta[0] = static_cast<uint16_t>(m.eta[0] + (t - static_cast<int>(lam.size())));
                m.trim();
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

QPoly zbar_char_ideal(int N, int w, int dmax) {
    QPoly out;
    for (int d = 0; d <= dmax; ++d) {
        auto basis = zmono_basis(d, w);
        std::map<ZMono, int> index;
        for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
        std::vector<SparseVec> rows;
        auto add_products = [&](const ZPoly& g, int dg, int wg) {
            if (g.is_zero()) return;
            for (const auto& u : zmono_basis(d - dg, w - wg)) {
                ZPoly up;
                up.add_term(u, Rat(1));
                ZPoly prod = up * g;
                SparseVec row;
                for (const auto& [m, v] : prod.terms())
                    row.emplace_back(index.at(m), GRat(v));
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                if (!row.empty()) rows.push_back(std::move(row));
            }
        };
        for (int n = 1; n <= d; n += 2) add_products(quad_gen(n), n, 2);
        for (int mu = 1; mu <= w; ++mu) {
            for (int m = std::max(N - mu + 1, 0); m <= d; ++m)
                add_products(current_gen(mu, m), m, mu);
        }
        int dim = static_cast<int>(basis.size()) - sparse_rank(rows);
        if (dim) out += QPoly::q_pow(d, Rat(dim));
    }
    return out;
}

}  // namespace qcy
