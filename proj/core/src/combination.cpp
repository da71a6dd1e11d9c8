#include "etaq/combination.hpp"

#include <algorithm>

#include "etaq/error.hpp"
#include "etaq/linalg.hpp"

namespace etaq {

Combination solve_series_combination(const std::vector<QSeries>& basis, const QSeries& target, long min_check)
{
    const std::size_t n = basis.size();
    long prec = target.prec();
    long lo = target.valuation();
    for (const auto& b : basis) {
        require(b.offset24() == target.offset24(), ErrorKind::InvalidOperand,
                "basis and target exponents differ by a non-integer");
        prec = std::min(prec, b.prec());
        lo = std::min(lo, b.valuation());
    }

    linalg::FractionFreeEliminator el(n + 1);
    // Common denominator per column, so rows are integral.
    std::vector<mpz_class> scale(n + 1);
    mpz_class l = target.denominator();
    for (const auto& b : basis)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.denominator().get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        scale[i] = l / basis[i].denominator();
    scale[n] = l / target.denominator();

    long row = lo;
    long since_full = 0;
    for (; row < prec; ++row) {
        std::vector<mpz_class> r(n + 1);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = basis[i].numerator(row) * scale[i];
            any = any || r[i] != 0;
        }
        r[n] = -target.numerator(row) * scale[n];
        any = any || r[n] != 0;
        if (!any)
            continue;
        el.add_row(std::move(r));
        if (el.rank() > n)
            fail(ErrorKind::NoSolution, "target is not in the span of the basis");
        if (el.rank() == n && ++since_full >= 8)
            break;
    }
    auto ker = el.kernel();
    const std::vector<mpq_class>* sol = nullptr;
    for (const auto& k : ker)
        if (k[n] != 0)
            sol = &k;
    if (!sol)
        fail(ErrorKind::NoSolution, "target is not in the span of the basis");
    if (ker.size() > 1)
        fail(ErrorKind::AmbiguousSolution, "basis is linearly dependent within the available precision");

    Combination c;
    c.equations_used = std::min(row + 1, prec) - lo;
    c.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.coeffs[i] = (*sol)[i] / (*sol)[n];
        c.coeffs[i].canonicalize();
    }
    require(prec - lo >= c.equations_used + min_check, ErrorKind::PrecisionExhausted,
            "not enough coefficients left to confirm the solution");

    // Check the remaining coefficients directly.
    for (long m = lo; m < prec; ++m) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (c.coeffs[i] != 0 && basis[i].numerator(m) != 0)
                s += c.coeffs[i] * basis[i].coeff(m);
        if (s != target.coeff(m))
            fail(ErrorKind::NoSolution, "combination fails at index " + std::to_string(m));
    }
    c.verified_through = prec;
    return c;
}

}  // namespace etaq
