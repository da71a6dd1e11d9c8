#include "doctest.h"

#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/hecke.hpp"
#include "etaq/numtheory.hpp"

using namespace etaq;
using namespace etaq::hecke;

namespace {

// Legendre symbol by Euler's criterion.
int legendre(long a, long p)
{
    long r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    long acc = 1;
    for (long i = 0; i < (p - 1) / 2; ++i)
        acc = acc * r % p;
    return acc == 1 ? 1 : -1;
}

long ipow_l(long b, long e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

}  // namespace

TEST_CASE("context parameters")
{
    auto c = make_context(4, 5);
    CHECK(c.lambda == 3);
    CHECK(c.chi_ell == -1);
    CHECK(make_context(6, 7).chi_ell == -1);
    CHECK(make_context(6, 11).chi_ell == 1);
    CHECK(make_context(6, 13).chi_ell == 1);
    CHECK_THROWS_AS(make_context(12, 5), Error);
    CHECK_THROWS_AS(make_context(4, 9), Error);
    CHECK_THROWS_AS(make_context(4, 3), Error);
}

TEST_CASE("f places e-coefficients at 24n - 1")
{
    auto f = build_f(4, 24 * 10);
    auto e = forms::e_sequence(4, 10);
    CHECK(f.valuation() == -1);
    for (long n = 0; n < 10; ++n)
        CHECK(f.coeff(24 * n - 1) == e.coeff(n));
    CHECK(f.coeff(0) == 0);
    CHECK(f.coeff(22) == 0);
}

TEST_CASE("single Hecke step matches the defining formula")
{
    for (long two_r : {4L, 6L}) {
        for (long ell : {5L, 7L}) {
            auto ctx = make_context(two_r, ell);
            const long l2 = ell * ell;
            auto f = build_f(two_r, l2 * 60);
            auto g = hecke_T1(f, ctx);
            CHECK(g.prec() == 60);
            long sgn = ctx.lambda % 2 == 0 ? 1 : -1;
            for (long n = -l2; n < 60; ++n) {
                mpz_class want = f.coeff(l2 * n).get_num();
                want += legendre(sgn * n, ell) * ctx.chi_ell * ipow_l(ell, ctx.lambda - 1) * f.coeff(n).get_num();
                if (n % l2 == 0)
                    want += numtheory::ipow(ell, 2 * ctx.lambda - 1) * f.coeff(n / l2).get_num();
                CHECK(g.coeff(n) == want);
            }
        }
    }
}

TEST_CASE("principal part of f|T")
{
    auto ctx = make_context(4, 5);
    auto g = hecke_T1(build_f(4, 25 * 48), ctx);
    CHECK(g.valuation() == -25);
    CHECK(g.coeff(-25) == 3125);
    CHECK(g.coeff(-1) == -25);
    for (long n = -24; n < 23; ++n)
        if (n != -1)
            CHECK(g.coeff(n) == 0);
}

TEST_CASE("too little precision is reported")
{
    auto ctx = make_context(4, 5);
    CHECK_THROWS_AS(hecke_T1(build_f(4, 25 * 20), ctx), Error);
    try {
        hecke_T1(build_f(4, 25 * 20), ctx);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrecisionExhausted);
    }
}

TEST_CASE("c coefficients in small cases")
{
    auto ctx = make_context(4, 5);
    CCoefficients c(ctx);
    CHECK(c(0, 0, 7) == 1);
    CHECK(c(1, 1, 7) == 1);
    CHECK(c(1, -1, 7) == 3125);
    CHECK(c(1, 0, 23) == middle_coefficient(ctx, 23));
    CHECK(c(3, 4, 7) == 0);
    // Expanding a_2 by hand: a_2(n) = a_1(25n) + t(n) a_1(n) + [25|n] 5^5 a_1(n/25) - 5^5 a_0(n).
    auto f = build_f(4, 625 * 25 * 30);
    auto pw = hecke_powers(f, ctx, 2);
    for (long n : {-1L, 23L, 47L, 71L, 119L}) {
        mpz_class sum = 0;
        for (long k = -2; k <= 2; ++k) {
            long idx = n;
            bool ok = true;
            if (k > 0)
                idx = n * ipow_l(25, k);
            else if (k < 0) {
                ok = n % ipow_l(25, -k) == 0;
                idx = ok ? n / ipow_l(25, -k) : 0;
            }
            if (ok)
                sum += c(2, k, n) * f.coeff(idx).get_num();
        }
        CHECK(sum == pw[2].coeff(n));
    }
}

TEST_CASE("structure checks pass")
{
    for (auto [two_r, ell, m] : {std::tuple{4L, 5L, 1L}, {4L, 5L, 2L}, {6L, 5L, 1L}, {8L, 7L, 1L}, {10L, 5L, 1L},
                                 {14L, 5L, 1L}, {6L, 11L, 1L}}) {
        auto ctx = make_context(two_r, ell);
        auto rep = verify_hecke_structure(ctx, m, ell > 7 ? 2 : 6);
        CAPTURE(two_r);
        CAPTURE(ell);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
            CHECK(c.checked > 0);
        }
    }
}

TEST_CASE("corrupted f is detected")
{
    auto ctx = make_context(4, 5);
    long prec = hecke_required_prec(ctx, 1, 4);
    auto f = build_f(4, prec);
    auto bad = f + QSeries::monomial(mpq_class(1), 25 * 71, prec);
    auto rep = verify_hecke_structure(bad, ctx, 1, 4);
    CHECK_FALSE(rep.pass());
    CHECK(rep.to_json().find("\"fail\"") != std::string::npos);
}
