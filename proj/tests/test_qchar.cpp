#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcy/qchar.hpp"
#include "qcy/qseries.hpp"

using namespace qcy;

namespace {
QPoly trunc_poly(const QPoly& s, int dmax) {
    QPoly p;
    for (int d = 0; d <= dmax; ++d) {
        Rat c = s.coeff_q(d);
        if (c != 0) p += QPoly::q_pow(d, c);
    }
    return p;
}
}  // namespace

TEST_CASE("kostka closed form matches the fermionic sum on columns") {
    for (int N = 1; N <= 10; ++N)
        for (int m = N % 2; m <= N; m += 2) {
            CAPTURE(N);
            CAPTURE(m);
            CHECK(kostka_fermionic(m, Partition(N, 1)) == kostka_closed(m, N));
        }
    CHECK(kostka_closed(1, 4).is_zero());
    CHECK(kostka_closed(-1, 3).is_zero());
    CHECK(kostka_closed(1, 3) == QPoly::q_pow(1) + QPoly::q_pow(2));
}

TEST_CASE("kostka values at q = 1 count paths by weight") {
    for (int N = 1; N <= 10; ++N)
        for (int m = N % 2; m <= N; m += 2)
            CHECK(kostka_closed(m, N).eval_q1() ==
                  Rat(binom(N, (N - m) / 2) - binom(N, (N - m) / 2 - 1)));
}

TEST_CASE("restricted kostka equals the alternating sum") {
    for (int k = 1; k <= 3; ++k)
        for (int N = 1; N <= 8; ++N)
            for (int m = N % 2; m <= std::min(N, k); m += 2) {
                CAPTURE(k);
                CAPTURE(N);
                CAPTURE(m);
                CHECK(restricted_kostka(k, m, Partition(N, 1)) ==
                      restricted_kostka_altsum(k, m, Partition(N, 1)));
            }
    SUBCASE("a shape with repeated parts") {
        Partition nu = {2, 1, 1};
        for (int k = 2; k <= 4; ++k)
            for (int m = 0; m <= k; ++m)
                CHECK(restricted_kostka(k, m, nu) ==
                      restricted_kostka_altsum(k, m, nu));
    }
}

TEST_CASE("restricted kostka stabilizes to the unrestricted one") {
    for (int N = 1; N <= 8; ++N)
        for (int m = N % 2; m <= N; m += 2)
            CHECK(restricted_kostka(N, m, Partition(N, 1)) == kostka_closed(m, N));
}

TEST_CASE("minimal series data") {
    CHECK(central_charge(3) == Rat(1, 2));
    CHECK(central_charge(4) == Rat(7, 10));
    CHECK(central_charge(5) == Rat(4, 5));
    CHECK(conf_weight(3, 1, 1) == 0);
    CHECK(conf_weight(3, 2, 1) == Rat(1, 16));
    CHECK(conf_weight(3, 1, 2) == Rat(1, 2));
    CHECK(conf_weight(4, 1, 2) == Rat(3, 5));
}

TEST_CASE("finitized characters converge to the series") {
    for (int r = 3; r <= 4; ++r)
        for (int b = 1; b <= r - 1; ++b)
            for (int a = 1; a <= r; ++a) {
                QSeries s = virasoro_char(r, b, a, 17);
                QPoly f = virasoro_char_fin(r, b, a, 24 + ((b - a) % 2 + 2) % 2);
                for (int n = 0; n <= 8; ++n) {
                    CAPTURE(r);
                    CAPTURE(b);
                    CAPTURE(a);
                    CAPTURE(n);
                    CHECK(s.coeff_q(n) == f.coeff_q(n));
                }
            }
    CHECK(virasoro_char_fin(3, 1, 2, 2).is_zero());
}

TEST_CASE("finitized character endpoints") {
    CHECK(virasoro_char_fin(3, 1, 1, 0) == QPoly::one());
    CHECK(virasoro_char_fin(4, 2, 2, 0) == QPoly::one());
    for (int r = 3; r <= 5; ++r)
        for (int b = 1; b <= r - 1; ++b)
            CHECK(virasoro_char_fin(r, b, b, 0) == QPoly::one());
}

TEST_CASE("sector characters at level zero reduce to plain characters") {
    for (int r = 3; r <= 4; ++r)
        for (int m = 0; m <= r - 2; ++m) {
            Rat off;
            QSeries s = rsg_sector_char(r, m, 0, 21, &off);
            CAPTURE(r);
            CAPTURE(m);
            CHECK(off == conf_weight(r, m + 1, 1));
            QSeries v = virasoro_char(r, m + 1, 1, 21);
            for (int n = 0; n <= 10; ++n) CHECK(s.coeff_q(n) == v.coeff_q(n));
        }
}

TEST_CASE("chiral decomposition identity") {
    for (int r = 3; r <= 4; ++r)
        for (int m = 0; m <= r - 2; ++m)
            for (int L = 0; L <= 2; ++L) {
                CAPTURE(r);
                CAPTURE(m);
                CAPTURE(L);
                CHECK(verify_vir_identity(r, m, L, 20));
            }
}

TEST_CASE("series lemma in finite form") {
    for (int N = 1; N <= 6; ++N)
        for (int s = 0; s <= N + 2; ++s) {
            CAPTURE(N);
            CAPTURE(s);
            CHECK(series_lemma_lhs(N, s) == series_lemma_rhs(N, s));
        }
}

TEST_CASE("truncation helper is the identity on short polynomials") {
    CHECK(trunc_poly(qbin(3, 1), 6) == qbin(3, 1));
}
