#include "etaq/numtheory.hpp"

#include <deque>
#include <mutex>
#include <string>

#include "etaq/error.hpp"

namespace etaq {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidOperand: return "invalid-operand";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::PrecisionExhausted: return "precision-exhausted";
    case ErrorKind::NotPolynomialInY: return "not-polynomial-in-Y";
    case ErrorKind::FitFailed: return "fit-failed";
    case ErrorKind::AmbiguousFit: return "ambiguous-fit";
    case ErrorKind::NoSolution: return "no-solution";
    case ErrorKind::AmbiguousSolution: return "ambiguous-solution";
    case ErrorKind::TableInconsistent: return "table-inconsistent";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace etaq

namespace etaq::numtheory {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

static void require_prime(long ell)
{
    require(is_prime(ell), ErrorKind::InvalidParameter, std::to_string(ell) + " is not prime");
}

long padic_valuation(const mpz_class& x, long ell)
{
    require_prime(ell);
    if (x == 0)
        return kInfiniteValuation;
    mpz_class rest;
    mpz_class p = ell;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long padic_valuation(const mpq_class& x, long ell)
{
    if (x == 0) {
        require_prime(ell);
        return kInfiniteValuation;
    }
    return padic_valuation(x.get_num(), ell) - padic_valuation(x.get_den(), ell);
}

mpz_class delta_inverse24(long ell, long k)
{
    require_prime(ell);
    require(ell >= 5, ErrorKind::InvalidParameter, "24 is not invertible modulo " + std::to_string(ell));
    require(k >= 0, ErrorKind::InvalidParameter, "negative exponent");
    mpz_class mod = ipow(ell, static_cast<unsigned long>(k));
    if (mod == 1)
        return 0;
    mpz_class inv;
    mpz_class a = 24;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    return inv;
}

int kronecker_symbol(const mpz_class& a, const mpz_class& n)
{
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker_symbol(long a, long n) { return kronecker_symbol(mpz_class(a), mpz_class(n)); }

namespace {

std::mutex bernoulli_mutex;
std::deque<mpq_class> bernoulli_cache;  // deque keeps references stable

}  // namespace

const mpq_class& bernoulli(long n)
{
    require(n >= 0, ErrorKind::InvalidParameter, "Bernoulli index must be non-negative");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    while (static_cast<long>(bernoulli_cache.size()) <= n) {
        long m = static_cast<long>(bernoulli_cache.size());
        if (m == 0) {
            bernoulli_cache.emplace_back(1);
            continue;
        }
        if (m >= 3 && m % 2 == 1) {
            bernoulli_cache.emplace_back(0);
            continue;
        }
        mpq_class s = 0;
        for (long k = 0; k < m; ++k)
            if (bernoulli_cache[k] != 0)
                s += mpq_class(binomial(m + 1, k)) * bernoulli_cache[k];
        mpq_class b = -s / mpq_class(m + 1);
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
    return bernoulli_cache[n];
}

mpz_class sigma(long m, long n)
{
    require(n >= 1, ErrorKind::InvalidParameter, "sigma requires n >= 1");
    require(m >= 0, ErrorKind::InvalidParameter, "sigma requires m >= 0");
    mpz_class s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        s += ipow(d, m);
        if (d != n / d)
            s += ipow(n / d, m);
    }
    return s;
}

long degree_d_ell(long ell, long r)
{
    require(ell == 5 || ell == 7 || ell == 13, ErrorKind::InvalidParameter,
            "degree_d_ell defined for ell in {5, 7, 13}");
    require(r >= 0 && r != 1, ErrorKind::InvalidParameter, "degree_d_ell requires r = 0 or r >= 2");
    if (r == 0)
        return 0;
    switch (ell) {
    case 5:
        return r % 2 == 0 ? r : r - 1;
    case 7:
        return r % 3 == 1 ? (4 * r) / 3 - 1 : (4 * r) / 3;
    default: {
        long base = 2 * r + r / 3;
        switch (r % 6) {
        case 0:
        case 2: return base;
        case 1: return base - 2;
        default: return base - 1;
        }
    }
    }
}

long dim_modular_forms_gamma0(long ell, long r) { return degree_d_ell(ell, r) + 1; }

long dim_modular_forms_level1(long k)
{
    if (k < 0 || k % 2 != 0)
        return 0;
    return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

mpz_class ipow(long base, unsigned long e)
{
    mpz_class r;
    mpz_class b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace etaq::numtheory
