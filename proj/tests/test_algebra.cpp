#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcy/poly.hpp"
#include "qcy/qseries.hpp"
#include "qcy/rational.hpp"
#include "qcy/symfn.hpp"

using namespace qcy;

TEST_CASE("variable layout") {
    Ctx c = make_ctx(2, 3, {"w", "u"});
    CHECK(c->arity() == 7);
    CHECK(c->x_index(1) == 0);
    CHECK(c->x_index(2) == 1);
    CHECK(c->z_index(1) == 2);
    CHECK(c->z_index(3) == 4);
    CHECK(c->aux_index("w") == 5);
    CHECK(c->aux_index("u") == 6);
    CHECK(c->var_name(0) == "X1");
    CHECK(c->var_name(2) == "z1");
    CHECK(c->var_name(5) == "w");
}

TEST_CASE("gaussian rational arithmetic") {
    GRat i = GRat::i();
    CHECK(i * i == GRat(-1));
    CHECK(i * i * i * i == GRat(1));
    GRat a(Rat(1, 2), Rat(3, 4));
    GRat b(Rat(2), Rat(-1));
    CHECK(a + b == GRat(Rat(5, 2), Rat(-1, 4)));
    CHECK(a * GRat(0) == GRat(0));
}

TEST_CASE("mpoly arithmetic and extraction") {
    Ctx c = make_ctx(1, 1);
    MPoly x = MPoly::var(c, c->x_index(1));
    MPoly z = MPoly::var(c, c->z_index(1));
    MPoly p = (x + z) * (x + z);
    CHECK(p == x * x + GRat(2) * x * z + z * z);
    CHECK(p.deg(c->x_index(1)) == 2);
    CHECK(p.total_deg() == 2);
    CHECK(p.coeff_of(c->x_index(1), 1) == GRat(2) * z);
    CHECK(p.subst_value(c->x_index(1), GRat(1)) ==
          MPoly::constant(c, GRat(1)) + GRat(2) * z + z * z);
    CHECK(p.negate_var(c->x_index(1)) == (x - z).pow(2));
    CHECK(MPoly(c).is_zero());
    CHECK(MPoly(c).deg(0) == -1);
    CHECK(p.eval({GRat(2), GRat(3)}) == GRat(25));
}

TEST_CASE("physics grading") {
    Ctx c = make_ctx(1, 2, {"w"});
    MPoly x = MPoly::var(c, c->x_index(1));
    MPoly z1 = MPoly::var(c, c->z_index(1));
    MPoly w = MPoly::var(c, c->aux_index("w"));
    int d = 99;
    CHECK((z1 * z1 * x * w).qhomogeneous(&d));
    CHECK(d == 1);
    CHECK_FALSE((z1 + x).qhomogeneous());
}

TEST_CASE("skew symmetrization") {
    Ctx c = make_ctx(2, 0);
    MPoly x1 = MPoly::var(c, c->x_index(1));
    MPoly x2 = MPoly::var(c, c->x_index(2));
    CHECK((x1 * x1).skew_x() == x1 * x1 - x2 * x2);
    CHECK((x1 * x2).skew_x().is_zero());
}

TEST_CASE("exact division") {
    Ctx c = make_ctx(1, 1);
    MPoly x = MPoly::var(c, c->x_index(1));
    MPoly z = MPoly::var(c, c->z_index(1));
    CHECK(exact_divide(x * x - z * z, x - z) == x + z);
    CHECK_THROWS_AS((void)exact_divide(x * x + z, x - z), DivisionError);
}

TEST_CASE("qpoly basics") {
    QPoly b = qbin(4, 2);
    CHECK(b.coeff_q(0) == 1);
    CHECK(b.coeff_q(1) == 1);
    CHECK(b.coeff_q(2) == 2);
    CHECK(b.coeff_q(3) == 1);
    CHECK(b.coeff_q(4) == 1);
    CHECK(b.eval_q1() == 6);
    CHECK(qbin(5, -1).is_zero());
    CHECK(qbin(5, 6).is_zero());
    CHECK(qpochhammer(0) == QPoly::one());

    SUBCASE("pascal recurrence") {
        for (int n = 1; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(qbin(n, k) ==
                      qbin(n - 1, k - 1) + QPoly::q_pow(k) * qbin(n - 1, k));
    }
    SUBCASE("symmetry under q -> 1/q") {
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(qbin(n, k).qinv() * QPoly::q_pow(k * (n - k)) == qbin(n, k));
    }
    SUBCASE("exact division") {
        CHECK((qbin(4, 2) * qpochhammer(3)).div_exact(qpochhammer(3)) == qbin(4, 2));
        CHECK_THROWS((void)(qbin(4, 2) + QPoly::one()).div_exact(qpochhammer(2)));
    }
}

TEST_CASE("qseries basics") {
    QSeries inv1 = inv_qpochhammer(1, 21);
    for (int n = 0; n <= 9; ++n) CHECK(inv1.coeff_q(n) == 1);

    QSeries s = QSeries::from(qpochhammer(3), 41);
    QSeries prod = s * s.inverse();
    for (int n = 0; n <= 19; ++n) CHECK(prod.coeff_q(n) == (n == 0 ? 1 : 0));

    SUBCASE("euler: 1/(q)_inf counts partitions") {
        QSeries e = inv_qpochhammer_inf(25);
        CHECK(e.coeff_q(4) == 5);
        CHECK(e.coeff_q(8) == 22);
        CHECK(e.coeff_q(10) == 42);
    }
    SUBCASE("1/(q)_n counts partitions with at most n parts") {
        QSeries e2 = inv_qpochhammer(2, 25);
        for (int n = 0; n <= 10; ++n)
            CHECK(e2.coeff_q(n) == Rat(n / 2 + 1));
    }
}

TEST_CASE("partitions and monomial symmetric functions") {
    CHECK(partitions(4, 4).size() == 5);
    CHECK(partitions(6, 6).size() == 11);
    CHECK(partitions(4, 2).size() == 3);
    CHECK(partitions(0, 3).size() == 1);

    CHECK(distinct_perms({2, 1}, 2).size() == 2);
    CHECK(distinct_perms({1, 1}, 3).size() == 3);

    SUBCASE("m_1 * m_1 = m_2 + 2 m_11") {
        auto prod = mono_mul({1}, {1}, 3);
        CHECK(prod.at({2}) == 1);
        CHECK(prod.at({1, 1}) == 2);
    }
    SUBCASE("evaluation") {
        std::vector<Rat> pt = {Rat(1), Rat(2), Rat(3)};
        CHECK(mono_eval({1}, pt) == 6);
        CHECK(mono_eval({1, 1}, pt) == 11);
        CHECK(mono_eval({2, 1}, pt) == 2 + 3 + 4 + 12 + 9 + 18);
    }
    CHECK(binom(6, 3) == 20);
    CHECK(binom(5, -1) == 0);
}
