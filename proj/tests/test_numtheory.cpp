#include "doctest.h"

#include <vector>

#include "etaq/error.hpp"
#include "etaq/numtheory.hpp"

using namespace etaq;
using namespace etaq::numtheory;

namespace {

long slow_valuation(long x, long p)
{
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Jacobi symbol for odd prime p via Euler's criterion.
int legendre_by_euler(long a, long p)
{
    long r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    long e = (p - 1) / 2, acc = 1, b = r;
    while (e) {
        if (e & 1)
            acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

int kronecker_by_factoring(long a, long n)
{
    // Only n >= 1 here.
    int result = 1;
    long m = n;
    for (long p = 2; p <= m; ++p) {
        while (m % p == 0) {
            m /= p;
            int s;
            if (p == 2) {
                if (a % 2 == 0)
                    s = 0;
                else {
                    long r = ((a % 8) + 8) % 8;
                    s = (r == 1 || r == 7) ? 1 : -1;
                }
            } else {
                s = legendre_by_euler(a, p);
            }
            result *= s;
        }
    }
    return result;
}

// Akiyama-Tanigawa gives B_n with B_1 = +1/2.
std::vector<mpq_class> bernoulli_akiyama_tanigawa(int n)
{
    std::vector<mpq_class> out;
    std::vector<mpq_class> a(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        out.push_back(a[0]);
    }
    return out;
}

}  // namespace

TEST_CASE("p-adic valuation")
{
    CHECK(padic_valuation(mpz_class(250), 5) == 3);
    CHECK(padic_valuation(mpz_class(29285), 5) == 1);
    CHECK(padic_valuation(mpz_class(0), 5) == kInfiniteValuation);
    CHECK(padic_valuation(mpq_class(3, 125), 5) == -3);
    CHECK_THROWS_AS(padic_valuation(mpz_class(10), 4), Error);
    for (long x = 1; x < 3000; ++x)
        for (long p : {2L, 3L, 5L, 7L, 13L})
            REQUIRE(padic_valuation(mpz_class(x), p) == slow_valuation(x, p));
}

TEST_CASE("valuation is additive on products")
{
    for (long a = 1; a < 200; a += 7)
        for (long b = 1; b < 200; b += 3)
            CHECK(padic_valuation(mpz_class(a * b), 5) == padic_valuation(mpz_class(a), 5) + padic_valuation(mpz_class(b), 5));
}

TEST_CASE("inverse of 24 modulo prime powers")
{
    CHECK(delta_inverse24(5, 1) == 4);
    CHECK(delta_inverse24(7, 1) == 5);
    CHECK(delta_inverse24(11, 1) == 6);
    CHECK_THROWS_AS(delta_inverse24(3, 1), Error);
    CHECK_THROWS_AS(delta_inverse24(2, 2), Error);
    for (long ell : {5L, 7L, 11L, 13L})
        for (long k = 1; k <= 4; ++k) {
            mpz_class m = ipow(ell, k);
            mpz_class d = delta_inverse24(ell, k);
            CHECK(d >= 0);
            CHECK(d < m);
            CHECK((24 * d - 1) % m == 0);
            // delta_{ell,k+1} reduces to delta_{ell,k}
            CHECK((delta_inverse24(ell, k + 1) - d) % m == 0);
        }
}

TEST_CASE("Kronecker symbol")
{
    CHECK(kronecker_symbol(12, 11) == 1);
    CHECK(kronecker_symbol(12, 5) == -1);
    for (long a = -40; a <= 40; ++a)
        for (long n = 1; n <= 60; ++n)
            REQUIRE(kronecker_symbol(a, n) == kronecker_by_factoring(a, n));
    // multiplicative in the top argument
    for (long a = 1; a < 30; ++a)
        for (long b = 1; b < 30; ++b)
            CHECK(kronecker_symbol(a * b, 13) == kronecker_symbol(a, 13) * kronecker_symbol(b, 13));
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli(2) == mpq_class(1, 6));
    CHECK(bernoulli(4) == mpq_class(-1, 30));
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
    auto ref = bernoulli_akiyama_tanigawa(40);
    for (int n = 2; n <= 40; ++n)
        CHECK(bernoulli(n) == ref[n]);
    for (int n = 3; n <= 41; n += 2)
        CHECK(bernoulli(n) == 0);
}

TEST_CASE("divisor sums")
{
    CHECK(sigma(1, 12) == 28);
    CHECK(sigma(3, 2) == 9);
    CHECK_THROWS_AS(sigma(1, 0), Error);
    for (long n = 1; n < 300; ++n) {
        mpz_class s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0)
                s += ipow(d, 5);
        REQUIRE(sigma(5, n) == s);
    }
}

TEST_CASE("degree of E(ell tau)/E(tau) in the hauptmodul")
{
    CHECK(degree_d_ell(5, 2) == 2);
    CHECK(degree_d_ell(5, 3) == 2);
    CHECK(degree_d_ell(7, 2) == 2);
    CHECK(degree_d_ell(7, 3) == 4);
    CHECK(degree_d_ell(13, 2) == 4);
    CHECK(degree_d_ell(13, 3) == 6);
    CHECK(degree_d_ell(5, 0) == 0);
    CHECK_THROWS_AS(degree_d_ell(5, 1), Error);
    CHECK_THROWS_AS(degree_d_ell(11, 2), Error);
    CHECK(dim_modular_forms_gamma0(5, 2) == 3);
}

TEST_CASE("level one dimensions")
{
    CHECK(dim_modular_forms_level1(0) == 1);
    CHECK(dim_modular_forms_level1(2) == 0);
    CHECK(dim_modular_forms_level1(12) == 2);
    CHECK(dim_modular_forms_level1(14) == 1);
    // dim M_k = number of (a, b) with 4a + 6b = k
    for (long k = 0; k <= 60; k += 2) {
        long count = 0;
        for (long a = 0; 4 * a <= k; ++a)
            if ((k - 4 * a) % 6 == 0)
                ++count;
        CHECK(dim_modular_forms_level1(k) == count);
    }
}
