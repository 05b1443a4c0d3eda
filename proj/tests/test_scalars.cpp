#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cliffsym/qseries.hpp"
#include "cliffsym/rational.hpp"

using namespace cliffsym;

TEST_CASE("rational canonical form")
{
    CHECK(Rat(2, 6) == Rat(1, 3));
    CHECK(Rat(-2, -6) == Rat(1, 3));
    CHECK(Rat(2, -6) == Rat(-1, 3));
    CHECK(Rat(0, 5) == Rat(0));
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK(Rat::from_string("-1/2") == Rat(-1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("rational ring axioms on random triples")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("q-integers")
{
    CHECK(qint(0) == QSeries::zero());
    CHECK(qint(1) == QSeries::one());
    QSeries three(24);
    three.set_coeff(0, 1);
    three.set_coeff(1, 1);
    three.set_coeff(2, 1);
    CHECK(qint(3) == three);
}

TEST_CASE("telescoping identity qint(n)(1-q) = 1-q^n")
{
    for (int n = 1; n <= 8; ++n) {
        QSeries rhs = QSeries::one() - QSeries::monomial(n);
        CHECK(qint(n) * one_minus_q() == rhs);
    }
}

TEST_CASE("q-factorials and double factorials")
{
    // (3)_q! = (1)(1+q)(1+q+q^2) expanded by hand
    QSeries expected(24);
    expected.set_coeff(0, 1);
    expected.set_coeff(1, 2);
    expected.set_coeff(2, 2);
    expected.set_coeff(3, 1);
    CHECK(qfactorial(3) == expected);
    CHECK(qdoublefactorial(2) == qint(2));
    CHECK(qdoublefactorial(0) == QSeries::one());
    CHECK(qdoublefactorial(6) == qint(6) * qint(4) * qint(2));
    CHECK_THROWS(qdoublefactorial(3));
}

TEST_CASE("q-binomials by series division")
{
    QSeries expected(24);  // binom(4,2)_q = 1+q+2q^2+q^3+q^4
    expected.set_coeff(0, 1);
    expected.set_coeff(1, 1);
    expected.set_coeff(2, 2);
    expected.set_coeff(3, 1);
    expected.set_coeff(4, 1);
    CHECK(qbinomial(4, 2) == expected);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(qbinomial(n, k) == qbinomial(n, n - k));
            for (int d = 0; d <= 24; ++d) CHECK(qbinomial(n, k).coeff(d) >= 0);
        }
    CHECK(qmultinomial(4, {2, 2}) == qbinomial(4, 2));
    CHECK(qmultinomial(3, {1, 1, 1}) == qfactorial(3));
}

TEST_CASE("geometric inverse")
{
    QSeries g1 = geometric_inverse(1);
    for (int d = 0; d <= g1.order(); ++d) CHECK(g1.coeff(d) == 1);
    QSeries g2 = geometric_inverse(2);
    for (int d = 0; d <= g2.order(); ++d) CHECK(g2.coeff(d) == d + 1);
    CHECK(g2 * one_minus_q().pow(2) == QSeries::one());
}

TEST_CASE("division requires a unit")
{
    QSeries two = QSeries::one().scaled(2);
    CHECK_THROWS_AS(QSeries::one().divided_by(two), std::domain_error);
    CHECK_THROWS_AS(QSeries::one().divided_by(QSeries::zero()), std::domain_error);
}
