#include "etaq/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/numtheory.hpp"

namespace etaq {

std::string checks_to_json(const std::vector<CheckResult>& checks)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"detail", c.detail}});
    return arr.dump();
}

}  // namespace etaq

namespace etaq::hecke {

using numtheory::ceil_div;
using numtheory::ipow;
using numtheory::padic_valuation;

HeckeContext make_context(long two_r, long ell)
{
    require(two_r == 4 || two_r == 6 || two_r == 8 || two_r == 10 || two_r == 14, ErrorKind::InvalidParameter,
            "2r must be one of 4, 6, 8, 10, 14");
    require(numtheory::is_prime(ell) && ell >= 5, ErrorKind::InvalidParameter, "ell must be a prime >= 5");
    HeckeContext ctx;
    ctx.two_r = two_r;
    ctx.lambda = two_r - 1;
    ctx.ell = ell;
    ctx.chi_ell = numtheory::kronecker_symbol(12, ell);
    return ctx;
}

QSeries build_f_from_e(const QSeries& e_seq, long prec)
{
    require(e_seq.offset24() == 0 && e_seq.is_integral(), ErrorKind::InvalidOperand, "e-sequence must be integral");
    long need = ceil_div(prec + 1, 24);
    require(e_seq.prec() >= need, ErrorKind::PrecisionExhausted, "e-sequence too short for the requested f");
    std::vector<mpz_class> v(static_cast<std::size_t>(prec + 1));
    for (long n = 0; 24 * n - 1 < prec; ++n)
        v[static_cast<std::size_t>(24 * n)] = e_seq.numerator(n);
    return QSeries::from_integers(-1, std::move(v), prec);
}

QSeries build_f(long two_r, long prec) { return build_f_from_e(forms::e_sequence(two_r, ceil_div(prec + 1, 24)), prec); }

mpz_class middle_coefficient(const HeckeContext& ctx, long n)
{
    mpz_class a = (ctx.lambda % 2 == 0) ? n : -n;
    int k = numtheory::kronecker_symbol(a, mpz_class(ctx.ell));
    return k * ctx.chi_ell * ipow(ctx.ell, static_cast<unsigned long>(ctx.lambda - 1));
}

QSeries hecke_T1(const QSeries& f, const HeckeContext& ctx)
{
    require(f.offset24() == 0, ErrorKind::InvalidOperand, "Hecke operator needs integral exponents");
    const long l2 = ctx.ell * ctx.ell;
    long hi = ceil_div(f.prec(), l2);
    if (hi < 24)
        fail(ErrorKind::PrecisionExhausted, "input known below q^" + std::to_string(f.prec()) +
                                                " gives fewer than 24 coefficients of f|T_{ell^2}");
    if (f.is_zero())
        return QSeries::zero(hi);
    long start = f.valuation();
    long lo = start < 0 ? l2 * start : ceil_div(start, l2);
    mpz_class top = ipow(ctx.ell, static_cast<unsigned long>(2 * ctx.lambda - 1));
    std::vector<mpz_class> v(static_cast<std::size_t>(std::max(hi - lo, 0L)));
    mpz_class t;
    for (long n = lo; n < hi; ++n) {
        mpz_class& out = v[static_cast<std::size_t>(n - lo)];
        out = f.numerator(l2 * n);
        const mpz_class& an = f.numerator(n);
        if (an != 0) {
            t = middle_coefficient(ctx, n);
            mpz_addmul(out.get_mpz_t(), t.get_mpz_t(), an.get_mpz_t());
        }
        if (n % l2 == 0) {
            const mpz_class& low = f.numerator(n / l2);
            if (low != 0)
                mpz_addmul(out.get_mpz_t(), top.get_mpz_t(), low.get_mpz_t());
        }
    }
    return QSeries::from_integers(lo, std::move(v), f.denominator(), hi);
}

std::vector<QSeries> hecke_powers(const QSeries& f, const HeckeContext& ctx, long m)
{
    require(m >= 0, ErrorKind::InvalidParameter, "m must be non-negative");
    std::vector<QSeries> out{f};
    if (m == 0)
        return out;
    out.push_back(hecke_T1(f, ctx));
    mpq_class top(ipow(ctx.ell, static_cast<unsigned long>(2 * ctx.lambda - 1)));
    for (long j = 2; j <= m; ++j) {
        QSeries next = hecke_T1(out.back(), ctx);
        out.push_back(next - out[static_cast<std::size_t>(j - 2)].scaled(top));
    }
    return out;
}

QSeries hecke_T(const QSeries& f, const HeckeContext& ctx, long m) { return hecke_powers(f, ctx, m).back(); }

QSeries b_series(const std::vector<QSeries>& powers, const HeckeContext& ctx, long m)
{
    require(m >= 0 && m < static_cast<long>(powers.size()), ErrorKind::InvalidParameter, "m out of range");
    if (m == 0)
        return powers[0];
    mpq_class c(ctx.chi_ell * ipow(ctx.ell, static_cast<unsigned long>(ctx.lambda - 1)));
    return powers[static_cast<std::size_t>(m)] - powers[static_cast<std::size_t>(m - 1)].scaled(c);
}

mpz_class CCoefficients::operator()(long m, long k, const mpz_class& n)
{
    if (m < 0 || k > m || k < -m)
        return 0;
    if (m == 0)
        return 1;
    const long ell = ctx_.ell;
    auto middle = [&](const mpz_class& x) {
        mpz_class a = (ctx_.lambda % 2 == 0) ? mpz_class(x) : mpz_class(-x);
        int s = numtheory::kronecker_symbol(a, mpz_class(ell));
        return mpz_class(s * ctx_.chi_ell * ipow(ell, static_cast<unsigned long>(ctx_.lambda - 1)));
    };
    mpz_class top = ipow(ell, static_cast<unsigned long>(2 * ctx_.lambda - 1));
    if (m == 1) {
        if (k == 1)
            return 1;
        if (k == 0)
            return middle(n);
        return top;
    }
    auto key = std::make_tuple(m, k, n);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    const long s = m - 1;
    mpz_class l2 = ell * ell;
    mpz_class v = (*this)(s, k - 1, l2 * n);
    v += middle(n) * (*this)(s, k, n);
    if (n % l2 == 0)
        v += top * (*this)(s, k + 1, n / l2);
    v -= top * (*this)(s - 1, k, n);
    memo_.emplace(key, v);
    return v;
}

long hecke_window_end(long valid_n) { return 24 * std::max(valid_n, 1L); }

long hecke_required_prec(const HeckeContext& ctx, long m_max, long valid_n)
{
    mpz_class p = ipow(ctx.ell, static_cast<unsigned long>(2 * m_max + 2)) * hecke_window_end(valid_n) + 1;
    require(p.fits_slong_p(), ErrorKind::InvalidParameter, "window too large");
    return std::max(p.get_si(), 24 * ipow(ctx.ell, 4).get_si() + 1);
}

namespace {

std::string describe(const std::string& what, long n) { return what + " fails at n = " + std::to_string(n); }

}  // namespace

HeckeReport verify_hecke_structure(const QSeries& f, const HeckeContext& ctx, long m_max, long valid_n)
{
    require(m_max >= 1, ErrorKind::InvalidParameter, "m_max must be at least 1");
    require(f.is_integral(), ErrorKind::InvalidOperand, "f must be integral");
    HeckeReport rep;
    rep.ctx = ctx;
    rep.m_max = m_max;
    rep.window_end = hecke_window_end(valid_n);
    rep.valid_n = valid_n;
    const long W = rep.window_end;
    const long ell = ctx.ell, lambda = ctx.lambda;
    const long l2 = ell * ell;
    const int chi = ctx.chi_ell;
    require(f.prec() >= hecke_required_prec(ctx, m_max, valid_n), ErrorKind::PrecisionExhausted,
            "f is not known far enough for the requested window");

    const mpz_class L1 = ipow(ell, static_cast<unsigned long>(lambda - 1));
    const mpz_class L2 = ipow(ell, static_cast<unsigned long>(2 * lambda - 1));
    auto a0 = [&](const mpz_class& x) -> mpz_class {
        require(x.fits_slong_p(), ErrorKind::PrecisionExhausted, "index overflow");
        long xi = x.get_si();
        return xi < f.valuation() ? mpz_class(0) : f.numerator(xi);
    };
    // a_0(ell^{2k} n) with zero for non-integral arguments.
    auto a0_scaled = [&](long k, long n) -> mpz_class {
        if (k >= 0)
            return a0(ipow(ell, static_cast<unsigned long>(2 * k)) * n);
        mpz_class d = ipow(ell, static_cast<unsigned long>(-2 * k));
        if (mpz_class(n) % d != 0)
            return 0;
        return a0(mpz_class(n) / d);
    };

    long levels = std::max(m_max, 2L);
    auto powers = hecke_powers(f, ctx, levels);
    std::vector<QSeries> b;
    for (long m = 0; m <= levels; ++m)
        b.push_back(b_series(powers, ctx, m));

    auto support = make_check("support-23-mod-24");
    auto vanish = make_check("vanishing-mod-ell^(m(lambda-1))");
    for (long m = 1; m <= levels; ++m) {
        mpz_class mod = ipow(ell, static_cast<unsigned long>(m * (lambda - 1)));
        for (const QSeries* s : {&powers[static_cast<std::size_t>(m)], &b[static_cast<std::size_t>(m)]})
            for (long n : s->support()) {
                ++support.checked;
                if (numtheory::mod_floor(n, 24) != 23)
                    note_failure(support, describe("m = " + std::to_string(m) + " support", n));
            }
        const QSeries& F = powers[static_cast<std::size_t>(m)];
        for (long n = F.valuation(); n < F.prec(); ++n) {
            ++vanish.checked;
            if (F.numerator(n) % mod != 0)
                note_failure(vanish, describe("m = " + std::to_string(m), n));
        }
    }

    auto leading = make_check("leading-terms");
    auto expect_principal = [&](const QSeries& s, std::map<long, mpz_class> want, const std::string& label) {
        for (long n = s.valuation(); n < 23; ++n) {
            ++leading.checked;
            mpz_class have = s.numerator(n);
            mpz_class w = want.count(n) ? want[n] : mpz_class(0);
            if (have != w)
                note_failure(leading, describe(label, n));
        }
    };
    expect_principal(powers[1], {{-l2, L2}, {-1, chi * L1}}, "f|T_{ell^2}");
    expect_principal(b[1], {{-l2, L2}}, "B_1");
    expect_principal(powers[2],
                     {{-l2 * l2, ipow(ell, static_cast<unsigned long>(4 * lambda - 2))},
                      {-l2, chi * ipow(ell, static_cast<unsigned long>(3 * lambda - 2))},
                      {-1, ipow(ell, static_cast<unsigned long>(2 * lambda - 2))}},
                     "f|T_{ell^4}");
    expect_principal(b[2], {{-l2 * l2, ipow(ell, static_cast<unsigned long>(4 * lambda - 2))}}, "B_2");

    auto pb1 = make_check("prop-b-1");
    auto pb2 = make_check("prop-b-2");
    auto pb3 = make_check("prop-b-3");
    auto crec = make_check("c-expansion");
    auto cval = make_check("c-valuation");
    auto clead = make_check("c-leading");
    auto gen = make_check("f-coefficient-divisibility");
    CCoefficients c(ctx);
    for (long m = 1; m <= m_max; ++m) {
        const QSeries& bm = b[static_cast<std::size_t>(m)];
        const QSeries& bm1 = b[static_cast<std::size_t>(m - 1)];
        const QSeries& am = powers[static_cast<std::size_t>(m)];
        mpz_class genmod = ipow(ell, static_cast<unsigned long>(m * (lambda - 1)));
        for (long n = -1; n < W; ++n) {
            std::string tag = "m = " + std::to_string(m);
            ++pb1.checked;
            mpz_class lhs = bm.numerator(l2 * n) - L2 * bm1.numerator(n);
            mpz_class rhs = a0_scaled(m + 1, n) - chi * L1 * a0_scaled(m, n);
            if (lhs != rhs)
                note_failure(pb1, describe(tag, n));

            if (n % ell != 0) {
                ++pb2.checked;
                int sym = numtheory::kronecker_symbol(lambda % 2 == 0 ? n : -n, ell);
                mpz_class sum = 0;
                mpz_class sign_pow = 1;
                for (long k = 1; k <= m; ++k) {
                    sign_pow *= -chi * L1;
                    sum += sign_pow * a0_scaled(m - k, n);
                }
                if (bm.numerator(n) != a0_scaled(m, n) + (1 - sym) * sum)
                    note_failure(pb2, describe(tag, n));
            } else if (n % l2 != 0) {
                ++pb3.checked;
                if (bm.numerator(n) != a0_scaled(m, n) - chi * L1 * a0_scaled(m - 1, n))
                    note_failure(pb3, describe(tag, n));
            }

            ++crec.checked;
            mpz_class sum = 0;
            mpz_class nz = n;
            for (long k = -m; k <= m; ++k)
                sum += c(m, k, nz) * a0_scaled(k, n);
            if (sum != am.numerator(n))
                note_failure(crec, describe(tag, n));

            mpz_class l2m = ipow(ell, static_cast<unsigned long>(2 * m));
            bool full = nz % l2m == 0;
            for (long k = -m; k <= m; ++k) {
                if (k == -m && !full)
                    continue;
                ++cval.checked;
                mpz_class v = c(m, k, nz);
                if (v != 0 && padic_valuation(v, ell) < (m - k) * (lambda - 1))
                    note_failure(cval, describe(tag + ", k = " + std::to_string(k), n));
            }
            ++clead.checked;
            if (c(m, m, nz) != 1)
                note_failure(clead, describe(tag + " c(m, m)", n));
            if (full && c(m, -m, nz) != ipow(ell, static_cast<unsigned long>((2 * lambda - 1) * m)))
                note_failure(clead, describe(tag + " c(m, -m)", n));

            ++gen.checked;
            if (a0_scaled(m, n) % genmod != 0)
                note_failure(gen, describe(tag, n));
        }
    }
    rep.checks = {support, vanish, leading, pb1, pb2, pb3, crec, cval, clead, gen};
    return rep;
}

HeckeReport verify_hecke_structure(const HeckeContext& ctx, long m_max, long valid_n)
{
    return verify_hecke_structure(build_f(ctx.two_r, hecke_required_prec(ctx, m_max, valid_n)), ctx, m_max, valid_n);
}

std::string HeckeReport::to_json() const
{
    nlohmann::json j;
    j["schema"] = 1;
    j["r"] = ctx.two_r / 2;
    j["lambda"] = ctx.lambda;
    j["ell"] = ctx.ell;
    j["chi_ell"] = ctx.chi_ell;
    j["m_max"] = m_max;
    j["window_end"] = window_end;
    j["valid_n"] = valid_n;
    j["status"] = pass() ? "pass" : "fail";
    j["checks"] = nlohmann::json::parse(checks_to_json(checks));
    return j.dump(2);
}

}  // namespace etaq::hecke
