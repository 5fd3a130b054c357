#pragma once

#include <map>
#include <vector>

#include "qcy/rational.hpp"

namespace qcy {

// sparse vector: (column, value) pairs sorted by column, values nonzero
using SparseVec = std::vector<std::pair<int, GRat>>;

SparseVec sparse_axpy(const SparseVec& x, const GRat& a, const SparseVec& y);
void sparse_scale(SparseVec& x, const GRat& a);

// Incremental row echelon basis over the Gaussian rationals.  Rows are
// reduced against the stored pivots on insertion; the structure only grows.
// Feeding rows sparsest first keeps fill-in down, which is the policy all
// the rank sweeps use.
class RowSpan {
public:
    // returns true if the row was independent (rank grew)
    bool add(SparseVec v);
    bool contains(SparseVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, SparseVec> rows_;  // pivot column -> reduced row
    void reduce(SparseVec& v) const;
};

// Reduced row echelon form with nullspace extraction.
class Rref {
public:
    explicit Rref(int ncols) : ncols_(ncols) {}

    void add_row(SparseVec v);
    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    // basis of the solution space of the homogeneous system
    std::vector<SparseVec> nullspace() const;

private:
    int ncols_;
    std::map<int, SparseVec> rows_;  // pivot column -> row, pivot coeff 1
};

int sparse_rank(std::vector<SparseVec> rows);

}  // namespace qcy
