#include "qcy/qseries.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qcy {

QPoly QPoly::u_pow(int k, Rat c) {
    QPoly p;
    if (c != 0) p.c_.emplace(k, std::move(c));
    return p;
}

Rat QPoly::coeff_u(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rat(0) : it->second;
}

int QPoly::lowest() const { return c_.empty() ? 0 : c_.begin()->first; }
int QPoly::highest() const { return c_.empty() ? 0 : c_.rbegin()->first; }

void QPoly::add(int k, const Rat& v) {
    if (v == 0) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
        c_.emplace(k, v);
    } else {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [k, v] : o.c_) add(k, -v);
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    std::map<int, Rat> out;
    for (const auto& [ka, va] : c_) {
        for (const auto& [kb, vb] : o.c_) {
            Rat prod = va * vb;
            auto it = out.find(ka + kb);
            if (it == out.end()) {
                out.emplace(ka + kb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    c_ = std::move(out);
    return *this;
}

QPoly& QPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= s;
    return *this;
}

QPoly QPoly::qinv() const {
    QPoly p;
    for (const auto& [k, v] : c_) p.c_.emplace(-k, v);
    return p;
}

Rat QPoly::eval_q1() const {
    Rat s(0);
    for (const auto& [k, v] : c_) s += v;
    return s;
}

Rat QPoly::eval_u(const Rat& u) const {
    Rat s(0);
    for (const auto& [k, v] : c_) {
        assert(k >= 0 || u != 0);
        Rat p(1);
        for (int i = 0; i < (k >= 0 ? k : -k); ++i) p *= u;
        if (k < 0) p = 1 / p;
        s += v * p;
    }
    return s;
}

QPoly QPoly::div_exact(const QPoly& den) const {
    if (den.is_zero()) throw std::domain_error("QPoly: division by zero");
    QPoly rem = *this, quo;
    int dk = den.c_.rbegin()->first;
    const Rat& dv = den.c_.rbegin()->second;
    while (!rem.is_zero()) {
        int rk = rem.c_.rbegin()->first;
        Rat qv = rem.c_.rbegin()->second / dv;
        quo.add(rk - dk, qv);
        QPoly t = den;
        t *= qv;
        QPoly shifted;
        for (const auto& [k, v] : t.c_) shifted.c_.emplace(k + rk - dk, v);
        rem -= shifted;
    }
    return quo;
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << v.get_str();
        if (k != 0) {
            if (k % 2 == 0)
                os << "*q^" << (k / 2);
            else
                os << "*q^(" << k << "/2)";
        }
    }
    return os.str();
}

QPoly qpochhammer(int n) {
    QPoly p = QPoly::one();
    for (int i = 1; i <= n; ++i) p *= QPoly::one() - QPoly::q_pow(i);
    return p;
}

QPoly qbin(int n, int k) {
    if (k < 0 || n < 0 || k > n) return QPoly();
    // Gaussian binomial via the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<QPoly> row = {QPoly::one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly> next(static_cast<size_t>(m) + 1);
        next[0] = QPoly::one();
        next[static_cast<size_t>(m)] = QPoly::one();
        for (int j = 1; j < m; ++j)
            next[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j - 1)] + QPoly::q_pow(j) * row[static_cast<size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

QSeries::QSeries(int lo, int hi) : lo_(lo), hi_(hi) {
    assert(lo <= hi);
    a_.assign(static_cast<size_t>(hi - lo), Rat(0));
}

QSeries QSeries::from(const QPoly& p, int trunc) {
    int lo = std::min(p.lowest(), trunc);
    QSeries s(lo, trunc);
    for (const auto& [k, v] : p.terms()) {
        if (k >= trunc) continue;
        s.a_[static_cast<size_t>(k - lo)] = v;
    }
    s.normalize();
    return s;
}

QSeries QSeries::one(int trunc) { return from(QPoly::one(), trunc); }

void QSeries::normalize() {
    while (!a_.empty() && a_.front() == 0) {
        a_.erase(a_.begin());
        ++lo_;
    }
}

Rat QSeries::coeff_u(int k) const {
    assert(k < hi_);
    if (k < lo_) return Rat(0);
    return a_[static_cast<size_t>(k - lo_)];
}

bool QSeries::known_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

int QSeries::lowest_nonzero() const {
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != 0) return lo_ + static_cast<int>(i);
    return hi_;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    int hi = std::min(hi_, o.hi_);
    int lo = std::min(lo_, o.lo_);
    QSeries out(lo, hi);
    for (int k = lo; k < hi; ++k) out.a_[static_cast<size_t>(k - lo)] = coeff_u(k) + o.coeff_u(k);
    out.normalize();
    *this = std::move(out);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    int hi = std::min(hi_, o.hi_);
    int lo = std::min(lo_, o.lo_);
    QSeries out(lo, hi);
    for (int k = lo; k < hi; ++k) out.a_[static_cast<size_t>(k - lo)] = coeff_u(k) - o.coeff_u(k);
    out.normalize();
    *this = std::move(out);
    return *this;
}

QSeries QSeries::operator*(const QSeries& o) const {
    // a zero series still carries its truncation: treat the empty case as
    // lowest = hi
    int la = a_.empty() ? hi_ : lo_;
    int lb = o.a_.empty() ? o.hi_ : o.lo_;
    int hi = std::min(hi_ + lb, o.hi_ + la);
    int lo = std::min(la + lb, hi);
    QSeries out(lo, hi);
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0) continue;
        int ka = lo_ + static_cast<int>(i);
        for (size_t j = 0; j < o.a_.size(); ++j) {
            if (o.a_[j] == 0) continue;
            int kb = o.lo_ + static_cast<int>(j);
            if (ka + kb >= hi) break;
            out.a_[static_cast<size_t>(ka + kb - lo)] += a_[i] * o.a_[j];
        }
    }
    out.normalize();
    return out;
}

QSeries QSeries::mul(const QPoly& p) const {
    if (p.is_zero()) return QSeries(hi_, hi_);
    int base = a_.empty() ? hi_ : lo_;
    int hi = hi_ + p.lowest();
    int lo = std::min(base + p.lowest(), hi);
    QSeries out(lo, hi);
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0) continue;
        int ka = lo_ + static_cast<int>(i);
        for (const auto& [kb, vb] : p.terms()) {
            if (ka + kb >= hi) continue;
            out.a_[static_cast<size_t>(ka + kb - lo)] += a_[i] * vb;
        }
    }
    out.normalize();
    return out;
}

QSeries QSeries::shift_u(int k) const {
    QSeries out = *this;
    out.lo_ += k;
    out.hi_ += k;
    return out;
}

QSeries QSeries::truncate(int new_hi) const {
    assert(new_hi <= hi_);
    QSeries out(std::min(lo_, new_hi), new_hi);
    for (int k = out.lo_; k < new_hi; ++k) out.a_[static_cast<size_t>(k - out.lo_)] = coeff_u(k);
    out.normalize();
    return out;
}

QSeries QSeries::inverse() const {
    assert(!a_.empty() && a_.front() != 0);
    // (u^{lo} (c0 + c1 u + ...))^{-1}: invert the unit part, shift by -lo
    int n = hi_ - lo_;
    std::vector<Rat> b(static_cast<size_t>(n), Rat(0));
    b[0] = 1 / a_[0];
    for (int k = 1; k < n; ++k) {
        Rat s(0);
        for (int j = 1; j <= k; ++j) {
            if (static_cast<size_t>(j) >= a_.size()) break;
            s += a_[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = -s / a_[0];
    }
    QSeries out(-lo_, -lo_ + n);
    out.a_ = std::move(b);
    out.normalize();
    return out;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0) continue;
        int k = lo_ + static_cast<int>(i);
        if (!first) os << " + ";
        first = false;
        os << a_[i].get_str();
        if (k != 0) {
            if (k % 2 == 0)
                os << "*q^" << (k / 2);
            else
                os << "*q^(" << k << "/2)";
        }
    }
    if (first) os << "0";
    os << " + O(u^" << hi_ << ")";
    return os.str();
}

QSeries inv_qpochhammer(int n, int trunc) {
    QSeries s = QSeries::one(trunc);
    for (int i = 1; i <= n; ++i) {
        // multiply by 1/(1-q^i) = sum_m q^{im}
        QPoly geom;
        for (int m = 0; 2 * i * m < trunc; ++m) geom += QPoly::q_pow(i * m);
        s = s * QSeries::from(geom, trunc);
    }
    return s;
}

QSeries inv_qpochhammer_inf(int trunc) {
    int nmax = trunc / 2 + 1;
    return inv_qpochhammer(nmax, trunc);
}

}  // namespace qcy
