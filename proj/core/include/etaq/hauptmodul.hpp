#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "etaq/qseries.hpp"

namespace etaq::hauptmodul {

// Finite sum of c_j * var^j with j possibly negative.
struct LaurentPoly {
    std::string var = "Y";
    std::map<long, mpq_class> terms;

    mpq_class coeff(long j) const;
    bool empty() const { return terms.empty(); }
    long min_degree() const;
    long max_degree() const;
    std::string to_string() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms == b.terms; }
};

// sum c_j y^j, known below index prec.
QSeries evaluate(const LaurentPoly& p, const QSeries& y, long prec);

struct ExpandOptions {
    std::optional<long> jmin;  // lowest power allowed; derived from the leading term if absent
    std::optional<long> jmax;  // highest power allowed; anything beyond it is a failure
    // Confirmed zero coefficients required after the last term when jmax is absent.
    long margin = 10;
};

// Writes s = prefactor * sum_j c_j y^j by greedy elimination of the lowest
// term. Throws not-polynomial-in-Y when a residual survives inside the known
// range and precision-exhausted when termination cannot be confirmed.
LaurentPoly expand_in_Y(const QSeries& s, const QSeries& prefactor, const QSeries& y, ExpandOptions opts = {});

struct RationalFit {
    LaurentPoly P;
    LaurentPoly Q;  // Q(0) = 1
    long verified_through = 0;
};

long default_verification_margin(long deg_p, long deg_q, long ell);

// Solves b * P(y) - a * Q(y) = 0 with Q(0) = 1, i.e. a / b = P(y) / Q(y).
RationalFit fit_rational_in_Y(const QSeries& a, const QSeries& b, const QSeries& y, long deg_p, long deg_q);

// Smallest common degree D <= max_degree for which a fit exists.
RationalFit discover_rational_in_Y(const QSeries& a, const QSeries& b, const QSeries& y, long max_degree);

// Z^ell = sum_{r=1}^{ell} sum_s psi(r, s) Y(ell tau)^s Z^{ell-r} for the level
// ell hauptmodul Y and Z = eta(ell^2 tau)/eta(tau).
struct ModularEquation {
    long ell = 0;
    std::map<std::pair<long, long>, mpz_class> psi;  // (r, s) -> psi(r, s), nonzero entries only
    long verified_coefficients = 0;

    mpz_class at(long r, long s) const;
};

ModularEquation derive_modular_equation(long ell, long prec);

// Entries of a level-13 equation violating pi_13(psi(r,s)) >= floor((13s - 7r + 13)/14).
std::vector<std::pair<long, long>> psi13_bound_violations(const ModularEquation& eq);

}  // namespace etaq::hauptmodul
