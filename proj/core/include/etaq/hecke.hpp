#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "etaq/qseries.hpp"
#include "etaq/report.hpp"

namespace etaq::hecke {

// Hecke operators of index ell^2 on weight lambda + 1/2 forms with the
// character chi = (12/.).
struct HeckeContext {
    long two_r = 0;
    long lambda = 0;  // 2r - 1
    long ell = 0;
    int chi_ell = 0;  // (12/ell)
};

HeckeContext make_context(long two_r, long ell);

// f = E_{2r}(24 tau)/eta(24 tau) = sum e_{2r}(n) q^{24n - 1}, integral
// exponents from -1, known below prec.
QSeries build_f(long two_r, long prec);
QSeries build_f_from_e(const QSeries& e_seq, long prec);

// ((-1)^lambda n / ell) chi(ell) ell^{lambda - 1}, the middle term of T_{ell^2}.
mpz_class middle_coefficient(const HeckeContext& ctx, long n);

// f | T_{ell^2}; throws precision-exhausted when fewer than 24 output
// coefficients would be known.
QSeries hecke_T1(const QSeries& f, const HeckeContext& ctx);

// [f, f|T_{ell^2}, ..., f|T_{ell^{2m}}] via
// T_{ell^{2j+2}} = T_{ell^2} T_{ell^{2j}} - ell^{2 lambda - 1} T_{ell^{2j-2}}.
std::vector<QSeries> hecke_powers(const QSeries& f, const HeckeContext& ctx, long m);
QSeries hecke_T(const QSeries& f, const HeckeContext& ctx, long m);

// B_0 = f, B_m = f|T_{ell^{2m}} - chi(ell) ell^{lambda-1} f|T_{ell^{2m-2}}.
QSeries b_series(const std::vector<QSeries>& powers, const HeckeContext& ctx, long m);

// c(m, k; n) with a_m(n) = sum_{k=-m}^{m} c(m, k; n) a_0(ell^{2k} n).
class CCoefficients {
public:
    explicit CCoefficients(const HeckeContext& ctx) : ctx_(ctx) {}
    mpz_class operator()(long m, long k, const mpz_class& n);

private:
    HeckeContext ctx_;
    std::map<std::tuple<long, long, mpz_class>, mpz_class> memo_;
};

struct HeckeReport {
    HeckeContext ctx;
    long m_max = 0;
    long window_end = 0;  // identities checked for n < window_end
    long valid_n = 0;     // n = 23 (mod 24) inside the window
    std::vector<CheckResult> checks;
    bool pass() const { return all_pass(checks); }
    std::string to_json() const;
};

// Window holding at least valid_n indices n = 23 (mod 24).
long hecke_window_end(long valid_n);
// Precision of f needed for verify_hecke_structure.
long hecke_required_prec(const HeckeContext& ctx, long m_max, long valid_n);

// Checks the structure of f|T_{ell^{2m}} and B_m for m <= m_max on a window
// of valid_n indices; f must be known below hecke_required_prec.
HeckeReport verify_hecke_structure(const QSeries& f, const HeckeContext& ctx, long m_max, long valid_n);
HeckeReport verify_hecke_structure(const HeckeContext& ctx, long m_max, long valid_n);

}  // namespace etaq::hecke
