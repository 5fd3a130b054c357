#include "qcy/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace qcy {

SparseVec sparse_axpy(const SparseVec& x, const GRat& a, const SparseVec& y) {
    // x + a*y
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i]);
            ++i;
        } else if (i >= x.size() || y[j].first < x[i].first) {
            GRat v = a * y[j].second;
            if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            GRat v = x[i].second + a * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void sparse_scale(SparseVec& x, const GRat& a) {
    assert(!a.is_zero());
    for (auto& [c, v] : x) v *= a;
}

void RowSpan::reduce(SparseVec& v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return;
        v = sparse_axpy(v, -v.front().second, it->second);
    }
}

bool RowSpan::add(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    GRat lead = v.front().second;
    sparse_scale(v, lead.inv());
    rows_.emplace(v.front().first, std::move(v));
    return true;
}

bool RowSpan::contains(SparseVec v) const {
    reduce(v);
    return v.empty();
}

void Rref::add_row(SparseVec v) {
    // eliminate every entry sitting in an existing pivot column; stored rows
    // are clean (own pivot plus free columns only), so this terminates
    for (;;) {
        auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) {
            return rows_.count(e.first) > 0;
        });
        if (it == v.end()) break;
        auto r = rows_.find(it->first);
        v = sparse_axpy(v, -it->second, r->second);
    }
    if (v.empty()) return;
    GRat lead = v.front().second;
    sparse_scale(v, lead.inv());
    int piv = v.front().first;
    // back-eliminate the new pivot from the existing rows
    for (auto& [p, row] : rows_) {
        auto pos = std::lower_bound(row.begin(), row.end(), piv,
                                    [](const auto& a, int c) { return a.first < c; });
        if (pos != row.end() && pos->first == piv)
            row = sparse_axpy(row, -pos->second, v);
    }
    rows_.emplace(piv, std::move(v));
}

std::vector<SparseVec> Rref::nullspace() const {
    std::vector<bool> is_pivot(static_cast<size_t>(ncols_), false);
    for (const auto& [p, row] : rows_) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<SparseVec> out;
    for (int f = 0; f < ncols_; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        SparseVec sol;
        for (const auto& [p, row] : rows_) {
            auto pos = std::lower_bound(row.begin(), row.end(), f,
                                        [](const auto& a, int c) { return a.first < c; });
            if (pos != row.end() && pos->first == f) sol.emplace_back(p, -pos->second);
        }
        sol.emplace_back(f, GRat(1));
        std::sort(sol.begin(), sol.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(sol));
    }
    return out;
}

int sparse_rank(std::vector<SparseVec> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    RowSpan span;
    for (auto& r : rows) span.add(std::move(r));
    return span.rank();
}

}  // namespace qcy
