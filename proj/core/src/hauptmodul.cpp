#include "etaq/hauptmodul.hpp"

#include <algorithm>
#include <sstream>

#include "etaq/combination.hpp"
#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/numtheory.hpp"

namespace etaq::hauptmodul {

using numtheory::ceil_div;
using numtheory::floor_div;

mpq_class LaurentPoly::coeff(long j) const
{
    auto it = terms.find(j);
    return it == terms.end() ? mpq_class(0) : it->second;
}

long LaurentPoly::min_degree() const
{
    require(!terms.empty(), ErrorKind::InvalidOperand, "zero polynomial has no degree");
    return terms.begin()->first;
}

long LaurentPoly::max_degree() const
{
    require(!terms.empty(), ErrorKind::InvalidOperand, "zero polynomial has no degree");
    return terms.rbegin()->first;
}

std::string LaurentPoly::to_string() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : terms) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        mpq_class a = abs(c);
        if (j == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << var;
        if (j != 1)
            os << "^" << j;
    }
    return os.str();
}

QSeries evaluate(const LaurentPoly& p, const QSeries& y, long prec)
{
    if (p.terms.empty())
        return QSeries::zero(prec);
    long lo = std::min(p.min_degree(), 0L);
    long hi = p.max_degree();
    QSeries h = QSeries::monomial(p.coeff(hi), 0, prec);
    for (long j = hi - 1; j >= lo; --j) {
        h = h * y;
        mpq_class c = p.coeff(j);
        if (c != 0)
            h = h + QSeries::monomial(c, 0, h.prec());
        h = h.truncated(prec);
    }
    if (lo < 0)
        h = (h * pow_int(y, lo)).truncated(prec);
    return h;
}

LaurentPoly expand_in_Y(const QSeries& s, const QSeries& prefactor, const QSeries& y, ExpandOptions opts)
{
    require(y.offset24() == 0 && y.valuation() == 1, ErrorKind::InvalidOperand,
            "expansion variable must start at q^1");
    QSeries t = div(s, prefactor);
    LaurentPoly out;
    if (t.offset24() != 0) {
        if (!t.is_zero())
            fail(ErrorKind::NotPolynomialInY, "quotient has non-integral exponents");
    }
    long jmin = opts.jmin ? *opts.jmin : (t.is_zero() ? 0 : t.valuation());
    if (!t.is_zero() && t.valuation() < jmin)
        fail(ErrorKind::NotPolynomialInY, "term q^" + std::to_string(t.valuation()) + " lies below Y^" +
                                              std::to_string(jmin));
    mpq_class y0 = y.coeff(1);
    long cur_j = jmin;
    QSeries cur = pow_int(y, jmin);
    while (!t.is_zero()) {
        long n = t.valuation();
        if (opts.jmax && n > *opts.jmax)
            fail(ErrorKind::NotPolynomialInY,
                 "residual at q^" + std::to_string(n) + " beyond Y^" + std::to_string(*opts.jmax));
        while (cur_j < n) {
            cur = cur * y;
            ++cur_j;
        }
        mpq_class c = t.coeff(n);
        if (y0 != 1) {
            mpz_class yn, yd;
            mpz_pow_ui(yn.get_mpz_t(), y0.get_num_mpz_t(), static_cast<unsigned long>(std::labs(n)));
            mpz_pow_ui(yd.get_mpz_t(), y0.get_den_mpz_t(), static_cast<unsigned long>(std::labs(n)));
            mpq_class yp = n >= 0 ? mpq_class(yn, yd) : mpq_class(yd, yn);
            yp.canonicalize();
            c /= yp;
        }
        out.terms[n] = c;
        t = t - cur.scaled(c);
        require(t.is_zero() || t.valuation() > n, ErrorKind::InternalInconsistency, "elimination did not advance");
    }
    long last = out.terms.empty() ? jmin - 1 : out.max_degree();
    if (t.prec() - 1 - last < opts.margin)
        fail(ErrorKind::PrecisionExhausted,
             "only " + std::to_string(t.prec() - 1 - last) + " zero coefficients confirm the expansion, need " +
                 std::to_string(opts.margin));
    return out;
}

long default_verification_margin(long deg_p, long deg_q, long ell) { return 2 * (deg_p + deg_q + 10 * ell); }

namespace {

RationalFit fit_impl(const QSeries& a, const QSeries& b, const QSeries& y, long deg_p, long deg_q, long margin)
{
    require(deg_p >= 0 && deg_q >= 0, ErrorKind::InvalidParameter, "degrees must be non-negative");
    long prec = std::min(a.prec(), b.prec());
    std::vector<QSeries> basis;
    QSeries yp = QSeries::one(prec);
    std::vector<QSeries> powers{yp};
    for (long j = 1; j <= std::max(deg_p, deg_q); ++j)
        powers.push_back((powers.back() * y).truncated(prec));
    for (long i = 0; i <= deg_p; ++i)
        basis.push_back((b * powers[static_cast<std::size_t>(i)]).truncated(prec));
    for (long j = 1; j <= deg_q; ++j)
        basis.push_back(-(a * powers[static_cast<std::size_t>(j)]).truncated(prec));
    Combination c;
    try {
        c = solve_series_combination(basis, a.truncated(prec), margin);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NoSolution)
            fail(ErrorKind::FitFailed, "no rational function of degree (" + std::to_string(deg_p) + ", " +
                                           std::to_string(deg_q) + ") in Y fits");
        if (e.kind() == ErrorKind::AmbiguousSolution)
            fail(ErrorKind::AmbiguousFit, "degree (" + std::to_string(deg_p) + ", " + std::to_string(deg_q) +
                                              ") admits several fits");
        throw;
    }
    RationalFit fit;
    for (long i = 0; i <= deg_p; ++i)
        if (c.coeffs[static_cast<std::size_t>(i)] != 0)
            fit.P.terms[i] = c.coeffs[static_cast<std::size_t>(i)];
    fit.Q.terms[0] = 1;
    for (long j = 1; j <= deg_q; ++j)
        if (c.coeffs[static_cast<std::size_t>(deg_p + j)] != 0)
            fit.Q.terms[j] = c.coeffs[static_cast<std::size_t>(deg_p + j)];
    fit.verified_through = c.verified_through;
    return fit;
}

}  // namespace

RationalFit fit_rational_in_Y(const QSeries& a, const QSeries& b, const QSeries& y, long deg_p, long deg_q)
{
    return fit_impl(a, b, y, deg_p, deg_q, 2 * (deg_p + deg_q + 10));
}

RationalFit discover_rational_in_Y(const QSeries& a, const QSeries& b, const QSeries& y, long max_degree)
{
    for (long d = 0; d <= max_degree; ++d) {
        try {
            return fit_impl(a, b, y, d, d, 2 * (2 * d + 10));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FitFailed)
                throw;
        }
    }
    fail(ErrorKind::FitFailed, "no fit up to degree " + std::to_string(max_degree));
}

mpz_class ModularEquation::at(long r, long s) const
{
    auto it = psi.find({r, s});
    return it == psi.end() ? mpz_class(0) : it->second;
}

ModularEquation derive_modular_equation(long ell, long prec)
{
    require(ell == 5 || ell == 7 || ell == 13, ErrorKind::InvalidParameter,
            "modular equations are derived for ell in {5, 7, 13}");
    long smax = (ell * ell - 1) / 24;
    QSeries z = forms::hauptmodul(forms::HauptmodulKind::Z, ell, prec);
    QSeries yl = dilate(forms::hauptmodul(forms::HauptmodulKind::Y, ell, ceil_div(prec, ell) + 2), ell).truncated(prec);

    std::vector<QSeries> zp{QSeries::one(prec)};
    for (long k = 1; k <= ell; ++k)
        zp.push_back((zp.back() * z).truncated(prec));
    std::vector<QSeries> yp{QSeries::one(prec)};
    for (long s = 1; s <= smax; ++s)
        yp.push_back((yp.back() * yl).truncated(prec));

    std::vector<std::pair<long, long>> index;
    std::vector<QSeries> basis;
    for (long r = 1; r <= ell; ++r)
        for (long s = 0; s <= smax; ++s) {
            index.emplace_back(r, s);
            basis.push_back((yp[static_cast<std::size_t>(s)] * zp[static_cast<std::size_t>(ell - r)]).truncated(prec));
        }
    Combination c = solve_series_combination(basis, zp[static_cast<std::size_t>(ell)], 20);

    ModularEquation eq;
    eq.ell = ell;
    for (std::size_t i = 0; i < index.size(); ++i) {
        const mpq_class& v = c.coeffs[i];
        if (v == 0)
            continue;
        require(v.get_den() == 1, ErrorKind::InternalInconsistency, "non-integral modular equation coefficient");
        eq.psi[index[i]] = v.get_num();
    }
    eq.verified_coefficients = c.verified_through;
    return eq;
}

std::vector<std::pair<long, long>> psi13_bound_violations(const ModularEquation& eq)
{
    std::vector<std::pair<long, long>> bad;
    for (const auto& [rs, v] : eq.psi) {
        auto [r, s] = rs;
        if (numtheory::padic_valuation(v, 13) < floor_div(13 * s - 7 * r + 13, 14))
            bad.push_back(rs);
    }
    return bad;
}

}  // namespace etaq::hauptmodul
