#include "etaq/forms.hpp"

#include <algorithm>
#include <cstdlib>

#include "etaq/error.hpp"
#include "etaq/hauptmodul.hpp"
#include "etaq/numtheory.hpp"

namespace etaq::forms {

using numtheory::ceil_div;
using numtheory::floor_div;
using numtheory::mod_floor;

namespace {

// Reinterprets an integral-exponent series F as q^{shift + offset/24} F.
QSeries with_exponent_shift(const QSeries& f, long shift, int offset)
{
    long prec = f.prec() + shift;
    if (f.is_zero())
        return QSeries::zero(prec, offset);
    std::vector<mpz_class> v;
    v.reserve(static_cast<std::size_t>(f.prec() - f.valuation()));
    for (long n = f.valuation(); n < f.prec(); ++n)
        v.push_back(f.numerator(n));
    return QSeries::from_integers(f.valuation() + shift, std::move(v), f.denominator(), prec, offset);
}

}  // namespace

QSeries eisenstein(long w, long prec)
{
    require(w >= 0 && w % 2 == 0, ErrorKind::InvalidParameter, "Eisenstein weight must be even and non-negative");
    if (w == 0 || prec <= 1)
        return QSeries::one(prec);
    mpq_class c = mpq_class(-2 * w) / numtheory::bernoulli(w);
    c.canonicalize();
    std::vector<mpz_class> v(static_cast<std::size_t>(prec));
    for (long d = 1; d < prec; ++d) {
        mpz_class p = numtheory::ipow(d, static_cast<unsigned long>(w - 1));
        for (long m = d; m < prec; m += d)
            v[static_cast<std::size_t>(m)] += p;
    }
    for (long n = 1; n < prec; ++n)
        v[static_cast<std::size_t>(n)] *= c.get_num();
    v[0] = c.get_den();
    return QSeries::from_integers(0, std::move(v), c.get_den(), prec);
}

QSeries euler_product(long prec)
{
    if (prec <= 0)
        return QSeries::zero(prec);
    std::vector<mpz_class> v(static_cast<std::size_t>(prec));
    // sum_k (-1)^k q^{k(3k-1)/2} over all integers k
    for (long k = 0; k * (3 * k - 1) / 2 < prec; ++k) {
        int sign = k % 2 == 0 ? 1 : -1;
        v[static_cast<std::size_t>(k * (3 * k - 1) / 2)] = sign;
        long e = k * (3 * k + 1) / 2;
        if (k > 0 && e < prec)
            v[static_cast<std::size_t>(e)] = sign;
    }
    return QSeries::from_integers(0, std::move(v), prec);
}

QSeries euler_power(long e, long prec)
{
    if (prec <= 0)
        return QSeries::zero(prec);
    if (e == 0)
        return QSeries::one(prec);
    QSeries g = euler_product(prec);
    std::vector<std::pair<long, int>> terms;
    for (long k : g.support())
        if (k > 0)
            terms.emplace_back(k, g.numerator(k) > 0 ? 1 : -1);
    std::vector<mpz_class> f(static_cast<std::size_t>(prec));
    f[0] = 1;
    mpz_class t, w;
    for (long n = 1; n < prec; ++n) {
        t = 0;
        for (const auto& [k, sign] : terms) {
            if (k > n)
                break;
            long factor = ((e + 1) * k - n) * sign;
            w = factor;
            mpz_addmul(t.get_mpz_t(), w.get_mpz_t(), f[static_cast<std::size_t>(n - k)].get_mpz_t());
        }
        mpz_divexact_ui(f[static_cast<std::size_t>(n)].get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(n));
    }
    return QSeries::from_integers(0, std::move(f), prec);
}

QSeries times_euler_factor(const QSeries& s, long d, long e)
{
    require(d >= 1, ErrorKind::InvalidParameter, "eta factor needs d >= 1");
    if (e == 0)
        return s;
    long need = s.prec() - std::min(s.valuation(), s.prec()) + 1;
    QSeries g = dilate(euler_product(ceil_div(need, d) + 1), d);
    QSeries r = s;
    for (long i = 0; i < std::labs(e); ++i)
        r = e > 0 ? r * g : div(r, g);
    return r;
}

QSeries eta_quotient(const std::vector<EtaFactor>& factors, long prec)
{
    long total = 0;
    for (const auto& f : factors) {
        require(f.d >= 1, ErrorKind::InvalidParameter, "eta factor needs d >= 1");
        total += f.d * f.e;
    }
    long shift = floor_div(total, 24);
    int offset = static_cast<int>(mod_floor(total, 24));
    long inner = prec - shift;
    if (inner <= 0)
        return QSeries::zero(prec, offset);

    std::vector<EtaFactor> order = factors;
    std::stable_sort(order.begin(), order.end(),
                     [](const EtaFactor& a, const EtaFactor& b) { return std::labs(a.e) > std::labs(b.e); });
    QSeries f = QSeries::one(inner);
    bool first = true;
    for (const auto& fac : order) {
        if (fac.e == 0)
            continue;
        if (first || std::labs(fac.e) > 8) {
            QSeries p = dilate(euler_power(fac.e, ceil_div(inner, fac.d) + 1), fac.d).truncated(inner);
            f = first ? p : f * p;
        } else {
            f = times_euler_factor(f, fac.d, fac.e);
        }
        first = false;
    }
    return with_exponent_shift(f.truncated(inner), shift, offset);
}

std::vector<mpz_class> partition_power(long k, long nmax)
{
    QSeries s = euler_power(-k, nmax);
    std::vector<mpz_class> v(static_cast<std::size_t>(std::max(nmax, 0L)));
    for (long n = 0; n < nmax; ++n)
        v[static_cast<std::size_t>(n)] = s.numerator(n);
    return v;
}

QSeries e_sequence(long w, long prec)
{
    return div(eisenstein(w, prec), euler_product(prec + 1)).truncated(prec);
}

QSeries hauptmodul(HauptmodulKind kind, long ell, long prec)
{
    require(numtheory::is_prime(ell) && ell >= 5, ErrorKind::InvalidParameter, "hauptmodul level must be a prime >= 5");
    if (kind == HauptmodulKind::Z)
        return eta_quotient({{ell * ell, 1}, {1, -1}}, prec);
    require(24 % (ell - 1) == 0, ErrorKind::InvalidParameter,
            "Y_ell needs (ell - 1) | 24; no such hauptmodul for ell = " + std::to_string(ell));
    long e = 24 / (ell - 1);
    return eta_quotient({{ell, e}, {1, -e}}, prec);
}

QSeries level_eisenstein_weight2(long ell, long prec)
{
    require(ell >= 2, ErrorKind::InvalidParameter, "level must be at least 2");
    QSeries e2 = eisenstein(2, prec);
    QSeries e2l = dilate(eisenstein(2, ceil_div(prec, ell) + 1), ell).truncated(prec);
    return (e2l.scaled(ell) - e2).scaled(mpq_class(1, ell - 1));
}

QSeries level_eisenstein_weight1_7(long prec)
{
    if (prec <= 0)
        return QSeries::zero(prec);
    std::vector<mpz_class> v(static_cast<std::size_t>(prec));
    v[0] = 1;
    for (long d = 1; d < prec; ++d) {
        int chi = numtheory::kronecker_symbol(d, 7);
        if (chi == 0)
            continue;
        for (long m = d; m < prec; m += d)
            v[static_cast<std::size_t>(m)] += 2 * chi;
    }
    return QSeries::from_integers(0, std::move(v), prec);
}

bool has_tilde_E_closed_form(long w, long ell)
{
    return (w == 4 || w == 6) && (ell == 5 || ell == 7 || ell == 13);
}

namespace {

hauptmodul::LaurentPoly poly(std::initializer_list<long long> c)
{
    hauptmodul::LaurentPoly p;
    long j = 0;
    for (long long v : c) {
        if (v != 0)
            p.terms[j] = mpq_class(mpz_class(std::to_string(v)));
        ++j;
    }
    return p;
}

}  // namespace

QSeries tilde_E_closed_form(long w, long ell, long prec)
{
    require(has_tilde_E_closed_form(w, ell), ErrorKind::InvalidParameter, "no closed form for this weight and level");
    if (ell == 5) {
        QSeries base = eta_quotient({{1, 10}, {5, -2}}, prec);
        return w == 4 ? base : level_eisenstein_weight2(5, prec) * base;
    }
    if (ell == 7) {
        if (w == 4)
            return level_eisenstein_weight1_7(prec) * eta_quotient({{1, 7}, {7, -1}}, prec);
        return eta_quotient({{1, 14}, {7, -2}}, prec);
    }
    const long long t = 13;
    hauptmodul::LaurentPoly q =
        w == 4 ? poly({1, 19 * t, 20 * t * t, 7 * t * t * t, t * t * t * t})
               : poly({1, -38 * t, -122 * t * t, -108 * t * t * t, -46 * t * t * t * t, -10 * t * t * t * t * t,
                       -t * t * t * t * t * t});
    QSeries y = hauptmodul(HauptmodulKind::Y, 13, prec + 1);
    return div(eisenstein(w, prec), hauptmodul::evaluate(q, y, prec)).truncated(prec);
}

QSeries tilde_E_fitted(long w, long ell, long prec)
{
    long r = w / 2;
    long d = numtheory::degree_d_ell(ell, r);
    long fit_prec = std::max(prec, 2 * (d + 1) + hauptmodul::default_verification_margin(d, d, ell));
    QSeries y = hauptmodul(HauptmodulKind::Y, ell, fit_prec + 1);
    QSeries e = eisenstein(w, fit_prec);
    QSeries el = dilate(eisenstein(w, ceil_div(fit_prec, ell) + 1), ell).truncated(fit_prec);
    auto fit = hauptmodul::fit_rational_in_Y(el, e, y, d, d);
    return div(e.truncated(prec), hauptmodul::evaluate(fit.Q, y, prec)).truncated(prec);
}

QSeries tilde_E(long w, long ell, long prec)
{
    require(w >= 0 && w % 2 == 0 && w != 2, ErrorKind::InvalidParameter, "tilde E needs even weight other than 2");
    if (w == 0)
        return QSeries::one(prec);
    if (has_tilde_E_closed_form(w, ell))
        return tilde_E_closed_form(w, ell, prec);
    return tilde_E_fitted(w, ell, prec);
}

}  // namespace etaq::forms
