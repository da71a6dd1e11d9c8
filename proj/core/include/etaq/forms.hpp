#pragma once

#include <vector>

#include <gmpxx.h>

#include "etaq/qseries.hpp"

namespace etaq::forms {

// Normalized Eisenstein series E_w = 1 - (2w/B_w) sum sigma_{w-1}(n) q^n
// for even w >= 0 (E_0 = 1), known below q^prec.
QSeries eisenstein(long w, long prec);

// (q;q)_inf as a sparse series (pentagonal number theorem).
QSeries euler_product(long prec);

// (q;q)_inf^e for any integer e, using the logarithmic-derivative recurrence
// n f_n = sum_k ((e+1)k - n) g_k f_{n-k}, which is fast because g is sparse.
QSeries euler_power(long e, long prec);

// s * (q^d;q^d)_inf^e, applied one sparse factor at a time.
QSeries times_euler_factor(const QSeries& s, long d, long e);

struct EtaFactor {
    long d;
    long e;
};

// prod eta(d tau)^e, known below index prec of the result.
QSeries eta_quotient(const std::vector<EtaFactor>& factors, long prec);

// Coefficients of 1/(q;q)_inf^k for n < nmax; k = 1 gives p(n).
std::vector<mpz_class> partition_power(long k, long nmax);

// Coefficients of E_w(q)/(q;q)_inf, i.e. e_w(n) with e_0 = p.
QSeries e_sequence(long w, long prec);

enum class HauptmodulKind { Y, Z };

// Y_ell = (eta(ell tau)/eta(tau))^{24/(ell-1)} or Z_ell = eta(ell^2 tau)/eta(tau).
QSeries hauptmodul(HauptmodulKind kind, long ell, long prec);

// (ell E_2(ell tau) - E_2(tau)) / (ell - 1).
QSeries level_eisenstein_weight2(long ell, long prec);

// 1 + 2 sum_n (sum_{d | n} (d/7)) q^n, the weight 1 Eisenstein series for
// Gamma_0(7) with character (./7).
QSeries level_eisenstein_weight1_7(long prec);

// E_w(tau) / Q_{w,ell}(Y_ell), where Q is the denominator of
// E_w(ell tau)/E_w(tau) as a rational function of Y_ell. Uses the eta/Eisenstein
// closed form when one is known (w in {4, 6}, ell in {5, 7, 13}) and the
// fitted denominator otherwise.
QSeries tilde_E(long w, long ell, long prec);
bool has_tilde_E_closed_form(long w, long ell);
QSeries tilde_E_closed_form(long w, long ell, long prec);
QSeries tilde_E_fitted(long w, long ell, long prec);

}  // namespace etaq::forms
