#include "doctest.h"

#include <random>

#include "etaq/error.hpp"
#include "etaq/qseries.hpp"

using namespace etaq;

namespace {

QSeries random_series(std::mt19937_64& rng, long start, long prec, int offset = 0, bool rational = false,
                      double density = 1.0)
{
    std::uniform_int_distribution<long> val(-50, 50);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<mpq_class> v(static_cast<std::size_t>(prec - start));
    for (auto& c : v)
        if (u(rng) < density)
            c = rational ? mpq_class(val(rng), 1 + std::abs(val(rng)) % 6) : mpq_class(val(rng));
    v[0] = rational ? mpq_class(1 + std::abs(val(rng)), 3) : mpq_class(1);
    for (auto& c : v)
        c.canonicalize();
    return QSeries::from_rationals(start, v, prec, offset);
}

// Schoolbook product on explicit exponents, used as an oracle for mul.
mpq_class naive_product_coeff(const QSeries& a, const QSeries& b, long n24)
{
    mpq_class s = 0;
    for (long i = a.valuation(); i < a.prec(); ++i)
        for (long j = b.valuation(); j < b.prec(); ++j)
            if (24 * i + a.offset24() + 24 * j + b.offset24() == n24)
                s += a.coeff(i) * b.coeff(j);
    return s;
}

}  // namespace

TEST_CASE("coefficients beyond the precision are an error, not zero")
{
    QSeries a = QSeries::from_integers(0, {1, 2, 3}, 3);
    CHECK(a.coeff(2) == 3);
    CHECK(a.coeff(-5) == 0);
    CHECK_THROWS_AS(a.coeff(3), Error);
    try {
        a.coeff(10);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrecisionExhausted);
    }
}

TEST_CASE("product agrees with schoolbook convolution including offsets")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int oa = static_cast<int>(rng() % 24), ob = static_cast<int>(rng() % 24);
        QSeries a = random_series(rng, static_cast<long>(rng() % 5) - 2, 20, oa, trial % 2 == 0);
        QSeries b = random_series(rng, static_cast<long>(rng() % 5) - 2, 25, ob, false, trial % 3 == 0 ? 0.2 : 1.0);
        QSeries c = a * b;
        CHECK(c.offset24() == (oa + ob) % 24);
        for (long n = c.valuation(); n < c.prec(); ++n)
            REQUIRE(c.coeff(n) == naive_product_coeff(a, b, 24 * n + c.offset24()));
        // the first unknown coefficient really depends on unknown input terms
        long expected = std::min(a.prec() + b.valuation(), b.prec() + a.valuation()) + (oa + ob >= 24 ? 1 : 0);
        CHECK(c.prec() == expected);
    }
}

TEST_CASE("ring axioms")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = random_series(rng, 0, 30, 0, true);
        QSeries b = random_series(rng, 1, 30, 0);
        QSeries c = random_series(rng, 0, 28, 0, true, 0.3);
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK(((a + b) - b) == a);
    }
}

TEST_CASE("multiplicative inverse")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        int off = static_cast<int>(rng() % 24);
        QSeries a = random_series(rng, static_cast<long>(rng() % 4) - 1, 30, off, trial % 2 == 1);
        QSeries prod = a * invert(a);
        CHECK(prod.offset24() == 0);
        CHECK(prod.prec() >= 30 - a.valuation() - 1);
        CHECK(prod == QSeries::one(prod.prec()));
        QSeries b = random_series(rng, 0, 30, 0, false, 0.5);
        CHECK(div(b * a, a) == b);
    }
    CHECK_THROWS_AS(invert(QSeries::zero(10)), Error);
}

TEST_CASE("integer powers")
{
    std::mt19937_64 rng(5);
    QSeries a = random_series(rng, 0, 20);
    CHECK(pow_int(a, 3) == a * a * a);
    CHECK(pow_int(a, -2) == invert(a * a));
    CHECK(pow_int(a, 0) == QSeries::one(20));
}

TEST_CASE("theta satisfies the Leibniz rule")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = random_series(rng, -1, 25, 0, true);
        QSeries b = random_series(rng, 0, 25);
        CHECK(theta(a * b) == theta(a) * b + a * theta(b));
    }
    CHECK_THROWS_AS(theta(QSeries::from_integers(0, {1, 1}, 2, 1)), Error);
}

TEST_CASE("Atkin U and dilation")
{
    std::mt19937_64 rng(13);
    QSeries a = random_series(rng, -3, 200);
    CHECK(atkin_U(a, 5).prec() == 40);
    CHECK(atkin_U(QSeries::zero(100), 5).prec() == 20);
    for (long d : {2L, 3L, 5L})
        for (long e : {2L, 7L})
            CHECK(atkin_U(atkin_U(a, d), e) == atkin_U(a, d * e));
    for (long d : {2L, 5L, 13L})
        CHECK(atkin_U(dilate(a, d), d) == a);
    CHECK(atkin_U(dilate(a, 5), 5).prec() == a.prec());
    for (long n = atkin_U(a, 3).valuation(); n < atkin_U(a, 3).prec(); ++n)
        CHECK(atkin_U(a, 3).coeff(n) == a.coeff(3 * n));
    CHECK_THROWS_AS(atkin_U(QSeries::from_integers(0, {1}, 1, 12), 2), Error);
}

TEST_CASE("dilation of fractional exponents")
{
    // q^{1/24}(1 + q) dilated by 25 is q^{25/24}(1 + q^25)
    QSeries a = QSeries::from_integers(0, {1, 1}, 2, 1);
    QSeries b = dilate(a, 25);
    CHECK(b.offset24() == 1);
    CHECK(b.leading_exponent24() == 25);
    CHECK(b.coeff(1) == 1);
    CHECK(b.coeff(26) == 1);
    CHECK(b.coeff(2) == 0);
    CHECK(b.prec() == 51);
}

TEST_CASE("equality is checked only below the common precision")
{
    QSeries a = QSeries::from_integers(0, {1, 2, 3, 4}, 4);
    QSeries b = QSeries::from_integers(0, {1, 2}, 2);
    CHECK(a == b);
    CHECK(agree_below(a, b, 2));
    CHECK_THROWS_AS(agree_below(a, b, 3), Error);
    QSeries c = QSeries::from_integers(0, {1, 5}, 2);
    CHECK(first_difference(a, c).value() == 1);
}

TEST_CASE("addition rejects mismatched fractional exponents")
{
    QSeries a = QSeries::from_integers(0, {1}, 3, 1);
    QSeries b = QSeries::from_integers(0, {1}, 3, 2);
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("JSON round trip")
{
    std::mt19937_64 rng(17);
    QSeries a = random_series(rng, -2, 15, 5, true, 0.6);
    QSeries b = QSeries::from_json(a.to_json());
    CHECK(b.prec() == a.prec());
    CHECK(b.offset24() == a.offset24());
    CHECK(b == a);
    CHECK(QSeries::from_json(QSeries::zero(7).to_json()).prec() == 7);
}
