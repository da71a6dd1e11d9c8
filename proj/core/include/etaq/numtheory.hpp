#pragma once

#include <cstdint>
#include <limits>

#include <gmpxx.h>

namespace etaq::numtheory {

// Returned by padic_valuation for zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

bool is_prime(long n);

// Exponent of the prime ell in x (numerator minus denominator for rationals).
long padic_valuation(const mpz_class& x, long ell);
long padic_valuation(const mpq_class& x, long ell);

// Least non-negative d with 24 d == 1 (mod ell^k); ell must be a prime >= 5.
mpz_class delta_inverse24(long ell, long k);

// Full Kronecker symbol (a/n), including n even or negative.
int kronecker_symbol(const mpz_class& a, const mpz_class& n);
int kronecker_symbol(long a, long n);

// B_n with B_1 = -1/2. Cached; safe to call from several threads.
const mpq_class& bernoulli(long n);

// sum_{d | n} d^m for n >= 1.
mpz_class sigma(long m, long n);

// Degree of the numerator/denominator of E_{2r}(ell tau)/E_{2r}(tau) as a
// rational function of the level-ell hauptmodul; ell in {5, 7, 13}, r != 1.
long degree_d_ell(long ell, long r);

// dim M_{2r}(Gamma_0(ell)) for ell in {5, 7, 13}, r >= 2, and r = 0.
long dim_modular_forms_gamma0(long ell, long r);

// dim M_k(SL_2(Z)) for even k >= 0.
long dim_modular_forms_level1(long k);

mpz_class ipow(long base, unsigned long e);
mpz_class binomial(long n, long k);

inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline long mod_floor(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace etaq::numtheory
