#include "qcy/symfn.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace qcy {

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int part = std::min(rem, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rem - part, part);
            cur.pop_back();
        }
    };
    rec(n, std::min(n, max_part));
    return out;
}

std::vector<std::vector<int>> distinct_perms(const Partition& p, int nvars) {
    std::vector<std::vector<int>> out;
    if (static_cast<int>(p.size()) > nvars) return out;
    std::vector<int> padded(static_cast<size_t>(nvars), 0);
    std::copy(p.begin(), p.end(), padded.begin());
    std::sort(padded.begin(), padded.end());
    do {
        out.push_back(padded);
    } while (std::next_permutation(padded.begin(), padded.end()));
    return out;
}

std::map<Partition, Int> mono_mul(const Partition& lam, const Partition& mu, int nvars) {
    std::map<Partition, Int> out;
    auto pa = distinct_perms(lam, nvars);
    auto pb = distinct_perms(mu, nvars);
    for (const auto& a : pa) {
        for (const auto& b : pb) {
            std::vector<int> s(static_cast<size_t>(nvars));
            for (int i = 0; i < nvars; ++i)
                s[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
            std::sort(s.rbegin(), s.rend());
            while (!s.empty() && s.back() == 0) s.pop_back();
            out[s] += 1;
        }
    }
    // the raw count tallies every monomial of the orbit; divide by the orbit
    // size to get the m-coefficient
    for (auto& [nu, c] : out) {
        Int orbit = static_cast<long>(distinct_perms(nu, nvars).size());
        assert(orbit != 0 && c % orbit == 0);
        c /= orbit;
    }
    return out;
}

Rat mono_eval(const Partition& lam, const std::vector<Rat>& c) {
    int nvars = static_cast<int>(c.size());
    Rat total(0);
    for (const auto& a : distinct_perms(lam, nvars)) {
        Rat term(1);
        for (int i = 0; i < nvars; ++i) {
            for (int k = 0; k < a[static_cast<size_t>(i)]; ++k) term *= c[static_cast<size_t>(i)];
        }
        total += term;
    }
    return total;
}

bool partition_lex_less(const Partition& a, const Partition& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int av = i < a.size() ? a[i] : 0;
        int bv = i < b.size() ? b[i] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

}  // namespace qcy
