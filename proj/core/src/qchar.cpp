#include "qcy/qchar.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace qcy {

namespace {

// multiplicity vector m_a = #{i : nu_i = a}, 1-based up to max part
std::vector<int> part_mults(const Partition& nu) {
    int maxp = nu.empty() ? 0 : nu.front();
    std::vector<int> m(static_cast<size_t>(maxp) + 1, 0);
    for (int p : nu) m[static_cast<size_t>(p)] += 1;
    return m;
}

// sum over vectors (n_1..n_jmax) with sum j*n_j = target
void for_each_nvec(int jmax, int target, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> n(static_cast<size_t>(jmax) + 1, 0);
    std::function<void(int, int)> rec = [&](int j, int rem) {
        if (j > jmax) {
            if (rem == 0) f(n);
            return;
        }
        for (int k = 0; k * j <= rem; ++k) {
            n[static_cast<size_t>(j)] = k;
            rec(j + 1, rem - k * j);
        }
        n[static_cast<size_t>(j)] = 0;
    };
    if (target >= 0) rec(1, target);
}

}  // namespace

QPoly kostka_fermionic(int m, const Partition& nu) {
    assert(m >= 0);
    auto mm = part_mults(nu);
    int weight = 0;
    for (int p : nu) weight += p;
    if (m > weight || (weight - m) % 2) return QPoly();
    int target = (weight - m) / 2;
    int jmax = std::max<int>(target, static_cast<int>(mm.size()) - 1);
    auto mult = [&](int j) { return j < static_cast<int>(mm.size()) ? mm[static_cast<size_t>(j)] : 0; };
    QPoly total;
    for_each_nvec(target, target, [&](const std::vector<int>& n) {
        auto nv = [&](int j) {
            return j < static_cast<int>(n.size()) ? n[static_cast<size_t>(j)] : 0;
        };
        long c = 0;
        for (int j = 1; j <= jmax; ++j)
            for (int jp = 1; jp <= jmax; ++jp) c += static_cast<long>(std::min(j, jp)) * nv(j) * nv(jp);
        QPoly term = QPoly::q_pow(static_cast<int>(c));
        for (int j = 1; j <= jmax && !term.is_zero(); ++j) {
            long pj = 0;
            for (int jp = 1; jp <= jmax; ++jp)
                pj += static_cast<long>(std::min(j, jp)) * (mult(jp) - 2 * nv(jp));
            term *= qbin(static_cast<int>(pj) + nv(j), nv(j));
        }
        total += term;
    });
    return total;
}

QPoly kostka_closed(int m, int N) {
    if ((N - m) % 2) return QPoly();
    return qbin(N, (N - m) / 2) - qbin(N, (N - m - 2) / 2);
}

QPoly restricted_kostka(int k, int m, const Partition& nu) {
    assert(k >= 1 && m >= 0);
    auto mm = part_mults(nu);
    int weight = 0;
    for (int p : nu) weight += p;
    if (m > weight || (weight - m) % 2) return QPoly();
    int target = (weight - m) / 2;
    auto mult = [&](int j) { return j < static_cast<int>(mm.size()) ? mm[static_cast<size_t>(j)] : 0; };
    QPoly total;
    for_each_nvec(k, target, [&](const std::vector<int>& n) {
        long c = 0;
        for (int j = 1; j <= k; ++j)
            for (int jp = 1; jp <= k; ++jp)
                c += static_cast<long>(std::min(j, jp)) * n[static_cast<size_t>(j)] * n[static_cast<size_t>(jp)];
        for (int j = 1; j <= k; ++j) {
            long vj = std::max(0, j - k + m);
            c += vj * n[static_cast<size_t>(j)];
        }
        QPoly term = QPoly::q_pow(static_cast<int>(c));
        for (int j = 1; j <= k && !term.is_zero(); ++j) {
            long pj = -std::max(0, j - k + m);
            for (int jp = 1; jp <= k; ++jp)
                pj += static_cast<long>(std::min(j, jp)) * (mult(jp) - 2 * n[static_cast<size_t>(jp)]);
            term *= qbin(static_cast<int>(pj) + n[static_cast<size_t>(j)], n[static_cast<size_t>(j)]);
        }
        total += term;
    });
    return total;
}

QPoly restricted_kostka_altsum(int k, int m, const Partition& nu) {
    assert(k >= 1 && m >= 0);
    int r = k + 2;
    int weight = 0;
    for (int p : nu) weight += p;
    QPoly total;
    for (int i = 0; 2 * r * i + m <= weight; ++i)
        total += QPoly::q_pow(r * i * i + (m + 1) * i) * kostka_fermionic(2 * r * i + m, nu);
    for (int i = 1; 2 * r * i - m - 2 <= weight; ++i)
        total -= QPoly::q_pow(r * i * i - (m + 1) * i) * kostka_fermionic(2 * r * i - m - 2, nu);
    return total;
}

Rat central_charge(int r) { return Rat(1) - Rat(6) / Rat(r * (r + 1)); }

Rat conf_weight(int r, int b, int a) {
    long t = static_cast<long>(r + 1) * b - static_cast<long>(r) * a;
    return Rat(t * t - 1) / Rat(4L * r * (r + 1));
}

QSeries virasoro_char(int r, int b, int a, int trunc) {
    assert(1 <= b && b <= r - 1 && 1 <= a && a <= r);
    QPoly num;
    long rr = static_cast<long>(r) * (r + 1);
    long cm = static_cast<long>(r + 1) * b - static_cast<long>(r) * a;
    long cp = static_cast<long>(r + 1) * b + static_cast<long>(r) * a;
    // rr n^2 dominates the linear term once |n| > cp/rr + trunc, so this range is exhaustive
    long nmax = cp / rr + std::max(trunc, 0) + 2;
    for (long n = -nmax; n <= nmax; ++n) {
        long e1 = rr * n * n + cm * n;
        if (2 * e1 < trunc) num += QPoly::q_pow(static_cast<int>(e1));
        long e2 = rr * n * n + cp * n + static_cast<long>(b) * a;
        if (2 * e2 < trunc) num -= QPoly::q_pow(static_cast<int>(e2));
    }
    return inv_qpochhammer_inf(trunc).mul(num).truncate(trunc);
}

QPoly virasoro_char_fin(int r, int b, int a, int L) {
    assert(1 <= b && b <= r - 1 && 1 <= a && a <= r && L >= 0);
    if (((L - b + a) % 2 + 2) % 2 != 0) return QPoly();
    QPoly out;
    long rr = static_cast<long>(r) * (r + 1);
    // qbin(L, t) vanishes outside 0 <= t <= L, which bounds n in both sums
    for (long n = -(L + a + b) - 2; n <= (L + a + b) + 2; ++n) {
        long t1 = (L - b + a) / 2 - (r + 1) * n;
        if (0 <= t1 && t1 <= L) {
            long e = rr * n * n + (static_cast<long>(r + 1) * b - static_cast<long>(r) * a) * n;
            out += QPoly::q_pow(static_cast<int>(e)) * qbin(L, static_cast<int>(t1));
        }
        long t2 = (L - b - a) / 2 - (r + 1) * n;
        if (0 <= t2 && t2 <= L) {
            long e = rr * n * n + (static_cast<long>(r + 1) * b + static_cast<long>(r) * a) * n +
                     static_cast<long>(b) * a;
            out -= QPoly::q_pow(static_cast<int>(e)) * qbin(L, static_cast<int>(t2));
        }
    }
    return out;
}

QSeries rsg_sector_char(int r, int m, int L, int trunc, Rat* offset) {
    assert(0 <= m && m <= r - 2);
    if (offset) {
        *offset = Rat(m * (m + 2)) / Rat(4 * r) + Rat(static_cast<long>(m) * m) / 4 -
                  Rat(static_cast<long>(L) * m) / 2;
    }
    QSeries total(trunc, trunc);
    for (int N = m;; N += 2) {
        long base = (static_cast<long>(N) * N - static_cast<long>(m) * m) / 2 -
                    static_cast<long>(L) * (N - m);
        if (N > L && base >= trunc) break;
        QPoly K = restricted_kostka(r - 2, m, Partition(static_cast<size_t>(N), 1));
        if (K.is_zero()) continue;
        QSeries part = inv_qpochhammer(N, trunc - static_cast<int>(base)).mul(K);
        total += part.shift_u(static_cast<int>(base)).truncate(trunc);
    }
    return total;
}

bool verify_vir_identity(int r, int m, int L, int u_order, QSeries* lhs_out, QSeries* rhs_out) {
    int trunc = u_order + 1;
    // left side: the sector character without its rational offset
    QSeries lhs(trunc, trunc);
    for (int N = (m % 2 + 2) % 2;; N += 2) {
        long base = (static_cast<long>(N) * N - static_cast<long>(m) * m) / 2 -
                    static_cast<long>(L) * N;
        if (N > L && base >= trunc) break;
        QPoly K = restricted_kostka(r - 2, m, Partition(static_cast<size_t>(N), 1));
        if (K.is_zero()) continue;
        QSeries part = inv_qpochhammer(N, trunc - static_cast<int>(base)).mul(K);
        lhs += part.shift_u(static_cast<int>(base)).truncate(trunc);
    }
    // right side: chiral decomposition against the finitized characters
    QSeries rhs(trunc, trunc);
    for (int a = 1; a <= r; ++a) {
        if (((a - (L - 1)) % 2 + 2) % 2 != 0) continue;
        QPoly fin = virasoro_char_fin(r, 1, a, L).qinv() * QPoly::u_pow(-(a - 1) * m);
        if (fin.is_zero()) continue;
        int lam = fin.lowest();
        QSeries chi = virasoro_char(r, m + 1, a, trunc - std::min(0, lam));
        rhs += chi.mul(fin).truncate(trunc);
    }
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return (lhs - rhs).known_zero();
}

QPoly series_lemma_lhs(int N, int s) {
    QPoly total;
    for (int p = 0; p <= s; ++p) {
        int t = s - p;
        long e = static_cast<long>(p) * (p - N) + static_cast<long>(t) * (p + 1) +
                 static_cast<long>(t) * (t - 1) / 2;
        QPoly term = QPoly::q_pow(static_cast<int>(e)) * qbin(s, p);
        if (t % 2) term *= Rat(-1);
        total += term;
    }
    return total;
}

QPoly series_lemma_rhs(int N, int s) { return qbin(N, s).qinv() * qpochhammer(s); }

}  // namespace qcy
