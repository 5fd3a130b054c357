#include "qcy/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace qcy {

int VarContext::x_index(int p) const {
    assert(1 <= p && p <= n_x);
    return p - 1;
}

int VarContext::z_index(int j) const {
    assert(1 <= j && j <= n_z);
    return n_x + j - 1;
}

int VarContext::aux_index(const std::string& name) const {
    for (size_t k = 0; k < aux.size(); ++k)
        if (aux[k] == name) return n_x + n_z + static_cast<int>(k);
    assert(false && "unknown auxiliary variable");
    return -1;
}

std::string VarContext::var_name(int idx) const {
    if (idx < n_x) return "X" + std::to_string(idx + 1);
    if (idx < n_x + n_z) return "z" + std::to_string(idx - n_x + 1);
    return aux[static_cast<size_t>(idx - n_x - n_z)];
}

Ctx make_ctx(int n_x, int n_z, std::vector<std::string> aux) {
    auto c = std::make_shared<VarContext>();
    c->n_x = n_x;
    c->n_z = n_z;
    c->aux = std::move(aux);
    assert(c->arity() <= kMaxVars);
    return c;
}

MPoly MPoly::constant(Ctx c, GRat v) {
    MPoly p(std::move(c));
    if (!v.is_zero()) p.t_.emplace(Mono{}, std::move(v));
    return p;
}

MPoly MPoly::var(Ctx c, int index, int power) {
    assert(index >= 0 && index < c->arity());
    MPoly p(std::move(c));
    if (power == 0) return constant(p.ctx_, GRat(1));
    assert(power > 0);
    Mono m;
    m.bump(index, power);
    p.t_.emplace(m, GRat(1));
    return p;
}

void MPoly::add_term(const Mono& m, const GRat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

GRat MPoly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? GRat(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (!ctx_) ctx_ = o.ctx_;
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    if (!ctx_) ctx_ = o.ctx_;
    if (t_.empty() || o.t_.empty()) {
        t_.clear();
        return *this;
    }
    Terms out;
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            Mono m = ma;
            for (int i = 0; i < kMaxVars; ++i)
                m.e[static_cast<size_t>(i)] = static_cast<int16_t>(
                    m.e[static_cast<size_t>(i)] + mb.e[static_cast<size_t>(i)]);
            m.total = ma.total + mb.total;
            GRat c = ca * cb;
            auto it = out.find(m);
            if (it == out.end()) {
                out.emplace(m, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    t_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator*=(const GRat& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

MPoly MPoly::pow(int k) const {
    assert(k >= 0);
    MPoly acc = constant(ctx_, GRat(1));
    MPoly base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

int MPoly::deg(int var) const {
    int d = -1;
    for (const auto& [m, c] : t_)
        d = std::max<int>(d, m.e[static_cast<size_t>(var)]);
    return d;
}

int MPoly::total_deg() const {
    if (t_.empty()) return -1;
    return t_.rbegin()->first.total;
}

bool MPoly::qhomogeneous(int* deg_out) const {
    bool first = true;
    int d = 0;
    for (const auto& [m, c] : t_) {
        int g = 0;
        for (int i = 0; i < ctx_->n_x; ++i) g -= m.e[static_cast<size_t>(i)];
        for (int i = ctx_->n_x; i < ctx_->n_x + ctx_->n_z; ++i)
            g += m.e[static_cast<size_t>(i)];
        if (first) {
            d = g;
            first = false;
        } else if (g != d) {
            return false;
        }
    }
    if (deg_out) *deg_out = d;
    return true;
}

MPoly MPoly::coeff_of(int var, int k) const {
    MPoly out(ctx_);
    for (const auto& [m, c] : t_) {
        if (m.e[static_cast<size_t>(var)] != k) continue;
        Mono n = m;
        n.total -= k;
        n.e[static_cast<size_t>(var)] = 0;
        out.add_term(n, c);
    }
    return out;
}

MPoly MPoly::subst_value(int var, const GRat& value) const {
    MPoly out(ctx_);
    for (const auto& [m, c] : t_) {
        int k = m.e[static_cast<size_t>(var)];
        Mono n = m;
        n.total -= k;
        n.e[static_cast<size_t>(var)] = 0;
        out.add_term(n, c * value.pow(k));
    }
    return out;
}

MPoly MPoly::subst_poly(int var, const MPoly& repl) const {
    int dmax = deg(var);
    std::vector<MPoly> powers;
    powers.push_back(constant(ctx_, GRat(1)));
    for (int k = 1; k <= dmax; ++k) powers.push_back(powers.back() * repl);
    MPoly out(ctx_);
    for (const auto& [m, c] : t_) {
        int k = m.e[static_cast<size_t>(var)];
        Mono n = m;
        n.total -= k;
        n.e[static_cast<size_t>(var)] = 0;
        MPoly base(ctx_);
        base.add_term(n, c);
        out += base * powers[static_cast<size_t>(k)];
    }
    return out;
}

MPoly MPoly::negate_var(int var) const {
    MPoly out(ctx_);
    for (const auto& [m, c] : t_) {
        GRat cc = (m.e[static_cast<size_t>(var)] % 2) ? -c : c;
        out.add_term(m, cc);
    }
    return out;
}

GRat MPoly::eval(const std::vector<GRat>& point) const {
    assert(static_cast<int>(point.size()) >= ctx_->arity());
    GRat total(0);
    for (const auto& [m, c] : t_) {
        GRat v = c;
        for (int i = 0; i < ctx_->arity(); ++i) {
            int k = m.e[static_cast<size_t>(i)];
            if (k) v *= point[static_cast<size_t>(i)].pow(k);
        }
        total += v;
    }
    return total;
}

MPoly MPoly::skew_x() const {
    int l = ctx_->n_x;
    MPoly out(ctx_);
    std::vector<int> perm(static_cast<size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sgn = 1;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sgn = -sgn;
        for (const auto& [m, c] : t_) {
            Mono n = m;
            for (int i = 0; i < l; ++i)
                n.e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = m.e[static_cast<size_t>(i)];
            out.add_term(n, sgn > 0 ? c : -c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MPoly MPoly::shift_x(int offset, Ctx target) const {
    assert(ctx_->n_z == target->n_z);
    MPoly out(target);
    for (const auto& [m, c] : t_) {
        Mono n;
        n.total = m.total;
        for (int p = 0; p < ctx_->n_x; ++p) {
            assert(p + offset < target->n_x);
            n.e[static_cast<size_t>(p + offset)] = m.e[static_cast<size_t>(p)];
        }
        for (int j = 0; j < ctx_->n_z; ++j)
            n.e[static_cast<size_t>(target->n_x + j)] = m.e[static_cast<size_t>(ctx_->n_x + j)];
        assert(ctx_->aux.empty());
        out.add_term(n, c);
    }
    return out;
}

MPoly MPoly::with_ctx(Ctx target) const {
    MPoly out(target);
    for (const auto& [m, c] : t_) {
        Mono n;
        n.total = m.total;
        for (int i = 0; i < ctx_->arity(); ++i) {
            int k = m.e[static_cast<size_t>(i)];
            if (!k) continue;
            int tgt;
            if (i < ctx_->n_x) {
                tgt = i;
                assert(tgt < target->n_x);
            } else if (i < ctx_->n_x + ctx_->n_z) {
                tgt = target->n_x + (i - ctx_->n_x);
                assert(i - ctx_->n_x < target->n_z);
            } else {
                tgt = target->aux_index(ctx_->aux[static_cast<size_t>(i - ctx_->n_x - ctx_->n_z)]);
            }
            n.e[static_cast<size_t>(tgt)] = static_cast<int16_t>(k);
        }
        out.add_term(n, c);
    }
    return out;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < ctx_->arity(); ++i) {
            int k = m.e[static_cast<size_t>(i)];
            if (!k) continue;
            os << "*" << ctx_->var_name(i);
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

MPoly exact_divide(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw DivisionError("exact_divide: zero divisor");
    MPoly rem = num;
    MPoly quo(num.ctx() ? num.ctx() : den.ctx());
    const auto& dlead = *den.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!dlead.first.divides(rlead.first))
            throw DivisionError("exact_divide: not divisible");
        Mono q;
        q.total = rlead.first.total - dlead.first.total;
        for (int i = 0; i < kMaxVars; ++i)
            q.e[static_cast<size_t>(i)] =
                static_cast<int16_t>(rlead.first.e[static_cast<size_t>(i)] - dlead.first.e[static_cast<size_t>(i)]);
        GRat qc = rlead.second / dlead.second;
        quo.add_term(q, qc);
        MPoly shift(rem.ctx());
        shift.add_term(q, qc);
        rem -= shift * den;
    }
    return quo;
}

}  // namespace qcy
