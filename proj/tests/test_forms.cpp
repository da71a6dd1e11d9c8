#include "doctest.h"

#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/numtheory.hpp"
#include "oracles.hpp"

using namespace etaq;
using namespace etaq::forms;

TEST_CASE("Eisenstein series")
{
    CHECK(eisenstein(0, 10) == QSeries::one(10));
    QSeries e2 = eisenstein(2, 50), e4 = eisenstein(4, 50), e6 = eisenstein(6, 50);
    CHECK(e2.coeff(1) == -24);
    CHECK(e4.coeff(1) == 240);
    CHECK(e6.coeff(1) == -504);
    for (long n = 1; n < 50; ++n) {
        CHECK(e4.coeff(n) == 240 * oracle::sigma_naive(3, n));
        CHECK(e6.coeff(n) == -504 * oracle::sigma_naive(5, n));
    }
    // E_4^2 = E_8 and E_4 E_6 = E_10
    CHECK(e4 * e4 == eisenstein(8, 50));
    CHECK(e4 * e6 == eisenstein(10, 50));
    QSeries e12 = eisenstein(12, 30);
    CHECK(e12.coeff(1) == mpq_class(65520, 691));
    CHECK_THROWS_AS(eisenstein(3, 10), Error);
}

TEST_CASE("differential equations for E2, E4, E6")
{
    long prec = 60;
    QSeries e2 = eisenstein(2, prec), e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    CHECK(theta(e2) == (e2 * e2 - e4).scaled(mpq_class(1, 12)));
    CHECK(theta(e4) == (e2 * e4 - e6).scaled(mpq_class(1, 3)));
    CHECK(theta(e6) == (e2 * e6 - e4 * e4).scaled(mpq_class(1, 2)));
}

TEST_CASE("Euler products and their powers")
{
    long n = 120;
    for (long e : {1L, 2L, 3L, 7L, 24L, -1L, -5L}) {
        QSeries s = euler_power(e, n);
        auto ref = oracle::euler_factor(1, e, n);
        for (long i = 0; i < n; ++i)
            REQUIRE(s.coeff(i) == ref[i]);
    }
    auto ref = oracle::euler_factor(1, 1, n);
    QSeries p = euler_product(n);
    for (long i = 0; i < n; ++i)
        CHECK(p.coeff(i) == ref[i]);
}

TEST_CASE("partition numbers")
{
    auto p = partition_power(1, 200);
    CHECK(p[4] == 5);
    CHECK(p[100] == mpz_class("190569292"));
    auto ref = oracle::partitions(200);
    for (long i = 0; i < 200; ++i)
        CHECK(p[i] == ref[i]);
    auto p2 = partition_power(2, 60);
    auto ref2 = oracle::convolve(ref, ref, 60);
    for (long i = 0; i < 60; ++i)
        CHECK(p2[i] == ref2[i]);
}

TEST_CASE("e-sequences are E_w times the partition generating function")
{
    QSeries e4 = e_sequence(4, 100);
    CHECK(e4.coeff(1) == 241);
    CHECK(e4.coeff(4) == 29285);
    auto p = oracle::partitions(100);
    for (long w : {4L, 6L, 14L}) {
        QSeries s = e_sequence(w, 100);
        QSeries e = eisenstein(w, 100);
        for (long n = 0; n < 100; ++n) {
            mpq_class ref = 0;
            for (long k = 0; k <= n; ++k)
                ref += e.coeff(k) * p[n - k];
            REQUIRE(s.coeff(n) == ref);
        }
    }
    CHECK(e_sequence(0, 50) == QSeries::from_integers(0, oracle::partitions(50), 50));
}

TEST_CASE("eta quotients")
{
    long prec = 80;
    QSeries z5 = eta_quotient({{25, 1}, {1, -1}}, prec);
    CHECK(z5.leading_exponent24() == 24);
    CHECK(z5.offset24() == 0);
    CHECK(z5.valuation() == 1);
    // q (q^25;q^25)/(q;q) by direct products
    auto ref = oracle::convolve(oracle::euler_factor(25, 1, prec), oracle::euler_factor(1, -1, prec), prec);
    for (long n = 1; n < prec; ++n)
        CHECK(z5.coeff(n) == ref[n - 1]);
    CHECK(z5.prec() == prec);

    QSeries q = eta_quotient({{1, 10}, {5, -2}, {2, 3}}, prec);
    CHECK(q.offset24() == (10 - 10 + 6) % 24);
    auto r2 = oracle::convolve(oracle::convolve(oracle::euler_factor(1, 10, prec), oracle::euler_factor(5, -2, prec), prec),
                               oracle::euler_factor(2, 3, prec), prec);
    for (long n = 0; n < prec; ++n)
        CHECK(q.coeff(n) == r2[n]);

    QSeries eta = eta_quotient({{1, 1}}, 30);
    CHECK(eta.offset24() == 1);
    CHECK(eta.valuation() == 0);
    QSeries inv = eta_quotient({{1, -1}}, 30);
    CHECK(inv.offset24() == 23);
    CHECK(inv.valuation() == -1);
    CHECK(eta * inv == QSeries::one(29));
}

TEST_CASE("hauptmoduln")
{
    QSeries y5 = hauptmodul(HauptmodulKind::Y, 5, 40);
    CHECK(y5.valuation() == 1);
    CHECK(y5.coeff(1) == 1);
    CHECK(y5.coeff(2) == 6);
    auto ref = oracle::convolve(oracle::euler_factor(5, 6, 40), oracle::euler_factor(1, -6, 40), 40);
    for (long n = 1; n < 40; ++n)
        CHECK(y5.coeff(n) == ref[n - 1]);
    CHECK(hauptmodul(HauptmodulKind::Z, 13, 50).leading_exponent24() == 7 * 24);
    CHECK(hauptmodul(HauptmodulKind::Z, 7, 50).valuation() == 2);
    CHECK(hauptmodul(HauptmodulKind::Y, 13, 50).valuation() == 1);
    CHECK_THROWS_AS(hauptmodul(HauptmodulKind::Y, 11, 20), Error);
    CHECK(hauptmodul(HauptmodulKind::Z, 11, 20).leading_exponent24() == 120);
}

TEST_CASE("level Eisenstein series")
{
    long prec = 100;
    for (long ell : {5L, 7L, 13L}) {
        QSeries e = level_eisenstein_weight2(ell, prec);
        CHECK(e.coeff(0) == 1);
        for (long n = 1; n < prec; ++n) {
            mpq_class ref = 24 * oracle::sigma_naive(1, n);
            if (n % ell == 0)
                ref -= 24 * ell * oracle::sigma_naive(1, n / ell);
            ref /= ell - 1;
            REQUIRE(e.coeff(n) == ref);
        }
    }
    QSeries e1 = level_eisenstein_weight1_7(prec);
    CHECK(e1.coeff(1) == 2);
    CHECK(e1.coeff(2) == 4);
    CHECK(e1.coeff(3) == 0);
    for (long n = 1; n < prec; ++n) {
        long s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0)
                s += numtheory::kronecker_symbol(d, 7);
        CHECK(e1.coeff(n) == 2 * s);
    }
}

TEST_CASE("closed forms of tilde E agree with the fitted quotient")
{
    long prec = 150;
    for (long ell : {5L, 7L, 13L})
        for (long w : {4L, 6L}) {
            INFO("w = " << w << ", ell = " << ell);
            QSeries closed = tilde_E_closed_form(w, ell, prec);
            QSeries fitted = tilde_E_fitted(w, ell, prec);
            CHECK(closed.prec() == prec);
            CHECK(closed == fitted);
            CHECK(closed.coeff(0) == 1);
        }
    CHECK(tilde_E(0, 5, 10) == QSeries::one(10));
    CHECK_THROWS_AS(tilde_E(2, 5, 10), Error);
}
