#pragma once

#include <vector>

#include "qcy/qseries.hpp"
#include "qcy/symfn.hpp"

namespace qcy {

// Fermionic sum for the Kostka polynomial K_{m,nu}(q) with nu a partition
// (multiplicity vector m_a = #{i : nu_i = a}).  Zero when the weight
// constraint cannot be met.
QPoly kostka_fermionic(int m, const Partition& nu);

// closed form for nu = (1^N); zero unless m = N mod 2 and 0 <= m
QPoly kostka_closed(int m, int N);

// level-k restricted Kostka polynomial K^{(k)}_{m,nu}(q)
QPoly restricted_kostka(int k, int m, const Partition& nu);

// the same polynomial through the alternating-sum formula over the
// non-restricted ones
QPoly restricted_kostka_altsum(int k, int m, const Partition& nu);

// Virasoro minimal series (r, r+1)
Rat central_charge(int r);
Rat conf_weight(int r, int b, int a);

// normalized character  1 + O(q), computed to u-truncation trunc
QSeries virasoro_char(int r, int b, int a, int trunc);

// ABF finitization; exact Laurent polynomial in q (zero if L != b-a mod 2)
QPoly virasoro_char_fin(int r, int b, int a, int L);

// Character of the level-L sector: returns the series part (a power series
// in u starting at 1) and stores the overall rational q-exponent offset.
// The full character is q^offset * series.
QSeries rsg_sector_char(int r, int m, int L, int trunc, Rat* offset = nullptr);

// Both sides of the chiral decomposition identity as u-series up to and
// including exponent u_order; returns true when they agree coefficientwise.
bool verify_vir_identity(int r, int m, int L, int u_order,
                         QSeries* lhs_out = nullptr, QSeries* rhs_out = nullptr);

// Finite form of the series lemma behind the decomposition, coefficient of
// z^s: both sides are exact Laurent polynomials in q.
QPoly series_lemma_lhs(int N, int s);
QPoly series_lemma_rhs(int N, int s);

}  // namespace qcy
