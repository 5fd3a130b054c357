#include "qcy/cycles.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace qcy {

MPoly theta(const Ctx& c, const MPoly& X) {
    MPoly out = MPoly::constant(c, GRat(1));
    for (int j = 1; j <= c->n_z; ++j)
        out *= MPoly::constant(c, GRat(1)) - MPoly::var(c, c->z_index(j)) * X;
    return out;
}

MPoly theta2(const Ctx& c, const MPoly& X1, const MPoly& X2) {
    MPoly m1 = X1 * GRat(-1), m2 = X2 * GRat(-1);
    return theta(c, X1) * theta(c, X2) - theta(c, m1) * theta(c, m2);
}

MPoly sigma1(const Ctx& c, const MPoly& X) {
    MPoly out = theta(c, X * GRat(-1));
    MPoly t = theta(c, X);
    if (c->n_z % 2) return out + t;
    return out - t;
}

MPoly sigma2(const Ctx& c, const MPoly& X1, const MPoly& X2) {
    MPoly ratio = exact_divide(theta2(c, X1, X2), X1 + X2) * (X1 - X2);
    MPoly cross = theta2(c, X1, X2 * GRat(-1));
    if (c->n_z % 2) return ratio - cross;
    return ratio + cross;
}

MPoly gamma1(const Ctx& c, const MPoly& X) {
    return exact_divide(theta(c, X) - theta(c, X * GRat(-1)), X);
}

MPoly gamma2(const Ctx& c, const MPoly& X1, const MPoly& X2) {
    MPoly ratio = exact_divide(theta2(c, X1, X2), X1 + X2) * (X1 - X2);
    MPoly num = ratio - theta2(c, X1, X2 * GRat(-1));
    return exact_divide(num, X1 * X2);
}

MPoly gfun(const Ctx& c, int m, const MPoly& X) {
    assert(1 <= m && m <= c->n_z);
    MPoly out = MPoly::constant(c, GRat(1));
    for (int j = 1; j < m; ++j)
        out *= MPoly::constant(c, GRat(1)) + MPoly::var(c, c->z_index(j)) * X;
    for (int j = m + 1; j <= c->n_z; ++j)
        out *= MPoly::constant(c, GRat(1)) - MPoly::var(c, c->z_index(j)) * X;
    return out;
}

MPoly elementary_z(const Ctx& c, int j) {
    assert(j >= 0);
    if (j > c->n_z) return MPoly(c);
    return mono_z(c, Partition(static_cast<size_t>(j), 1));
}

MPoly mono_z(const Ctx& c, const Partition& lambda) {
    MPoly out(c);
    if (static_cast<int>(lambda.size()) > c->n_z) return out;
    for (const auto& expo : distinct_perms(lambda, c->n_z)) {
        Mono m;
        for (int j = 1; j <= c->n_z; ++j)
            m.bump(c->z_index(j), expo[static_cast<size_t>(j - 1)]);
        out.add_term(m, GRat(1));
    }
    return out;
}

MPoly skew_xJ(const Ctx& c, const std::vector<int>& J) {
    assert(static_cast<int>(J.size()) == c->n_x);
    Mono m;
    for (int p = 1; p <= c->n_x; ++p) m.bump(c->x_index(p), J[static_cast<size_t>(p - 1)]);
    MPoly mono(c);
    mono.add_term(m, GRat(1));
    return mono.skew_x();
}

MPoly wedge(const MPoly& a, int la, const MPoly& b, int lb, const Ctx& target) {
    assert(target->n_x == la + lb);
    MPoly A = a.with_ctx(target);
    MPoly B = b.shift_x(la, target);
    return (A * B).skew_x();
}

MPoly cmap(const Ctx& c, const std::vector<int>& M) {
    int l = static_cast<int>(M.size());
    assert(c->n_x == l);
    MPoly prod = MPoly::constant(c, GRat(1));
    for (int p = 1; p <= l; ++p)
        prod *= gfun(c, M[static_cast<size_t>(p - 1)], MPoly::var(c, c->x_index(p)));
    return l ? prod.skew_x() : prod;
}

namespace {

// one pass of the cleared q = i transfer matrix with spectral parameter X
// acting on a state given as amplitudes over spin masks (bit j-1 set means
// site j is down); returns the lowered-auxiliary component over 2
std::map<uint32_t, MPoly> transfer_pass(const Ctx& c, const std::map<uint32_t, MPoly>& state,
                                        const MPoly& X) {
    int N = c->n_z;
    // key: mask | (aux bit << N), aux bit 1 means the auxiliary spin is down
    std::map<uint32_t, MPoly> cur;
    for (const auto& [mask, amp] : state) cur[mask] = amp;
    for (int j = 1; j <= N; ++j) {
        MPoly zX = MPoly::var(c, c->z_index(j)) * X;
        MPoly diag_same = MPoly::constant(c, GRat(1)) + zX;
        MPoly diag_mixed = (zX - MPoly::constant(c, GRat(1))) * GRat::i();
        MPoly hop_lower = MPoly::constant(c, GRat(2));
        MPoly hop_raise = zX * GRat(2);
        uint32_t site = 1u << (j - 1);
        uint32_t auxb = 1u << N;
        std::map<uint32_t, MPoly> next;
        auto put = [&](uint32_t key, MPoly v) {
            auto it = next.find(key);
            if (it == next.end())
                next.emplace(key, std::move(v));
            else
                it->second += v;
        };
        for (const auto& [key, amp] : cur) {
            bool aux_dn = key & auxb;
            bool site_dn = key & site;
            if (aux_dn == site_dn) {
                put(key, amp * diag_same);
            } else {
                put(key, amp * diag_mixed);
                if (!aux_dn)
                    put((key | auxb) & ~site, amp * hop_lower);
                else
                    put((key & ~auxb) | site, amp * hop_raise);
            }
        }
        cur = std::move(next);
    }
    std::map<uint32_t, MPoly> out;
    GRat half(Rat(1, 2));
    for (auto& [key, amp] : cur) {
        if (!(key & (1u << N))) continue;
        amp *= half;
        if (!amp.is_zero()) out.emplace(key & ~(1u << N), std::move(amp));
    }
    return out;
}

}  // namespace

MPoly bethe_cmap(const Ctx& c, const std::vector<int>& M) {
    int l = static_cast<int>(M.size());
    int N = c->n_z;
    assert(c->n_x == l && N <= 30);
    uint32_t mask = 0;
    for (int m : M) mask |= 1u << (m - 1);
    std::map<uint32_t, MPoly> state;
    state[mask] = MPoly::constant(c, GRat(1));
    for (int p = l; p >= 1; --p)
        state = transfer_pass(c, state, MPoly::var(c, c->x_index(p)));
    MPoly raw(c);
    auto it = state.find(0);
    if (it != state.end()) raw = it->second;
    if (l >= 2) {
        MPoly plus = MPoly::constant(c, GRat(1));
        MPoly minus = MPoly::constant(c, GRat(1));
        for (int p = 1; p <= l; ++p) {
            for (int q = p + 1; q <= l; ++q) {
                MPoly xp = MPoly::var(c, c->x_index(p));
                MPoly xq = MPoly::var(c, c->x_index(q));
                plus *= xp + xq;
                minus *= xp - xq;
            }
        }
        raw = exact_divide(raw, plus) * minus;
    }
    long sum_m = 0;
    for (int m : M) sum_m += m;
    raw *= ipow(static_cast<long>(l) * N - sum_m + static_cast<long>(l) * (l - 1) / 2);
    for (const auto& [mono, coeff] : raw.terms()) {
        (void)mono;
        if (!coeff.is_real()) throw std::logic_error("transfer image has nonreal coefficient");
    }
    return raw;
}

}  // namespace qcy
