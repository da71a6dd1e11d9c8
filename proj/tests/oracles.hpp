#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

// Independent reference computations used by several test files. They use
// the product definitions directly, never the pentagonal or power recurrences
// of the library.
namespace oracle {

// Coefficients below n of prod_{m >= 1} (1 - q^{d m})^e.
inline std::vector<mpz_class> euler_factor(long d, long e, long n)
{
    std::vector<mpz_class> f(static_cast<std::size_t>(n));
    f[0] = 1;
    for (long m = d; m < n; m += d) {
        for (long t = 0; t < (e > 0 ? e : -e); ++t) {
            if (e > 0) {
                for (long i = n - 1; i >= m; --i)
                    f[i] -= f[i - m];
            } else {
                for (long i = m; i < n; ++i)
                    f[i] += f[i - m];
            }
        }
    }
    return f;
}

inline std::vector<mpz_class> convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, long n)
{
    std::vector<mpz_class> c(static_cast<std::size_t>(n));
    for (long i = 0; i < n && i < static_cast<long>(a.size()); ++i)
        for (long j = 0; i + j < n && j < static_cast<long>(b.size()); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

inline mpz_class sigma_naive(long k, long n)
{
    mpz_class s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
            s += p;
        }
    return s;
}

// Partition counts by the coin-change recurrence.
inline std::vector<mpz_class> partitions(long n)
{
    std::vector<mpz_class> p(static_cast<std::size_t>(n));
    p[0] = 1;
    for (long part = 1; part < n; ++part)
        for (long i = part; i < n; ++i)
            p[i] += p[i - part];
    return p;
}

// e_w(n) for n < count, from E_w = 1 + c sum sigma_{w-1}(n) q^n with the
// classical constants and the coin-change partition counts.
inline std::vector<mpz_class> e_values(long w, long count)
{
    long c = 0;
    switch (w) {
    case 0: c = 0; break;
    case 4: c = 240; break;
    case 6: c = -504; break;
    case 8: c = 480; break;
    case 10: c = -264; break;
    case 14: c = -24; break;
    default: return {};
    }
    std::vector<mpz_class> e(static_cast<std::size_t>(count));
    e[0] = 1;
    for (long n = 1; n < count; ++n)
        e[n] = c == 0 ? mpz_class(0) : c * sigma_naive(w - 1, n);
    return convolve(e, partitions(count), count);
}

// Statistics of every partition of n, by explicit enumeration.
struct PartitionStats {
    long count = 0;
    long smallest_parts = 0;      // spt(n)
    std::map<long, long> rank;    // rank -> number of partitions
    std::map<long, long> crank;   // combinatorial crank -> number of partitions
};

inline PartitionStats enumerate_partitions(long n)
{
    PartitionStats st;
    std::vector<long> parts;
    std::function<void(long, long)> rec = [&](long rest, long max_part) {
        if (rest == 0) {
            ++st.count;
            long largest = parts.front(), smallest = parts.back();
            long ones = 0, nparts = static_cast<long>(parts.size());
            for (long x : parts) {
                if (x == smallest)
                    ++st.smallest_parts;
                if (x == 1)
                    ++ones;
            }
            ++st.rank[largest - nparts];
            long crank = largest;
            if (ones > 0) {
                long bigger = 0;
                for (long x : parts)
                    if (x > ones)
                        ++bigger;
                crank = bigger - ones;
            }
            ++st.crank[crank];
            return;
        }
        for (long x = std::min(rest, max_part); x >= 1; --x) {
            parts.push_back(x);
            rec(rest - x, x);
            parts.pop_back();
        }
    };
    if (n > 0)
        rec(n, n);
    return st;
}

// The crank generating function assigns n = 1 the weights M(-1) = M(1) = 1
// and M(0) = -1 instead of the single partition's crank -1.
inline std::map<long, long> crank_series_convention(const PartitionStats& st, long n)
{
    if (n != 1)
        return st.crank;
    return {{-1, 1}, {0, -1}, {1, 1}};
}

inline mpz_class power_moment(const std::map<long, long>& dist, long k)
{
    mpz_class s = 0;
    for (auto [m, c] : dist) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(m < 0 ? -m : m), static_cast<unsigned long>(k));
        s += t * c;
    }
    return s;
}

// sum_m C(m + floor((k-1)/2), k) dist(m) with C(x, k) = x(x-1)...(x-k+1)/k!
inline mpz_class symmetrized_moment(const std::map<long, long>& dist, long k)
{
    mpz_class s = 0;
    for (auto [m, c] : dist) {
        long top = m + (k - 1) / 2;
        mpz_class b = 1;  // binomial as a polynomial in top, so negative m count too
        for (long i = 0; i < k; ++i)
            b = b * (top - i) / (i + 1);
        s += b * c;
    }
    return s;
}

}  // namespace oracle
