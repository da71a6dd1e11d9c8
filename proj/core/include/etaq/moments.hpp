#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "etaq/qseries.hpp"
#include "etaq/report.hpp"

namespace etaq::sequences {
class SequenceStore;
}

namespace etaq::moments {

enum class Statistic { Rank, Crank };
enum class Flavor { Ordinary, Symmetrized };

// N_k / M_k (ordinary) or eta_k / mu_k (symmetrized); order is even and >= 2.
struct MomentKind {
    Statistic statistic;
    Flavor flavor;
    long order;
    // "N4", "M4", "eta4", "mu4".
    std::string name() const;
};
std::optional<MomentKind> parse_moment_kind(const std::string& name);

// (q;q)_inf times the generating function of the moment, i.e. the series that
// is convolved with p(n) to give the moments. Integral; coefficients for
// indices below len.
std::vector<mpz_class> moment_kernel(const MomentKind& kind, long len);

// R_{2k} or C_{2k}: sum of N_{2k}(n) or M_{2k}(n) q^n, known below prec.
QSeries moment_series(Statistic s, long order, long prec);
// sum of eta_{2k}(n) or mu_{2k}(n) q^n.
QSeries symmetrized_series(Statistic s, long order, long prec);
// spt_k(n) = mu_{2k}(n) - eta_{2k}(n) for n < count. Throws
// internal-inconsistency if a negative value shows up.
std::vector<mpz_class> spt_sequence(long k, long count);

// coeff * n^n_power * input(n - shift)
struct FormulaTerm {
    mpq_class coeff;
    long n_power = 0;
    std::string input;
    long shift = 0;
};

struct MomentFormula {
    std::string id;
    std::string target;  // sequence the formula claims to equal
    std::vector<FormulaTerm> terms;
};

// Terms written as "1/20 e4 - 1/20 p + 2 n p - 12 n^2 p - 3/7 n p23(n-1)".
std::vector<FormulaTerm> parse_formula_terms(const std::string& text);

const std::vector<MomentFormula>& moment_formulas();
const MomentFormula& moment_formula(const std::string& id);

// Evaluates the closed formula from the input sequences. With a store whose
// index budget is too small this throws precision-exhausted.
mpq_class moment_formula_eval(const std::string& id, long n);
mpq_class moment_formula_eval(const MomentFormula& f, long n, sequences::SequenceStore& store);

// Formula against the series-derived target sequence for 0 <= n <= nmax.
CheckResult check_formula(const MomentFormula& f, long nmax, sequences::SequenceStore& store);

// ---- quasi-modular forms ----

// (a, b, c) with a + 2b + 3c <= n, sorted by weight and then lexicographically.
std::vector<std::array<long, 3>> quasimodular_monomials(long n);

struct BasisElement {
    enum class Kind {
        ThetaPE,      // Theta^j(P E_{2k}), k = 0 or k >= 2
        PMonomial,    // P E_2^a E_4^b E_6^c
        ThetaPDelta,  // Theta^j(P Delta)
        ThetaR2,      // Theta^j(R_2)
    };
    Kind kind;
    long j = 0;
    long k = 0;
    std::array<long, 3> abc{};

    std::string label() const;
    // The formula term this element contributes with coefficient 1, when it
    // corresponds to one (n^j e_{2k}(n), n^j p_23(n-1), n^j N_2(n)).
    std::optional<FormulaTerm> as_term() const;
    QSeries series(long prec) const;
};

struct QuasiModularBasis {
    long n = 0;  // weight bound 2n
    std::vector<std::array<long, 3>> monomials;
    std::vector<BasisElement> elements;

    std::size_t dimension() const { return monomials.size(); }
};

// P times the monomial basis of the quasi-modular forms of weight <= 2n.
QuasiModularBasis monomial_basis(long n);
// The set A_n = {Theta^j(P E_{2k}) : 0 <= j <= n - k, k = 0 or 2 <= k <= n},
// with Theta^j(P Delta) for j <= n - 6 when n >= 6, and Theta^i(R_2) for
// i < n for rank moments. Ordered as the closed formulas are written: E_{2k}
// by decreasing k, then increasing j, then the P Delta and R_2 terms.
QuasiModularBasis moment_basis(long n, Statistic s);

// Exact rational c with target = sum c_i basis_i, checked through prec.
// Throws no-solution / ambiguous-solution, or precision-exhausted when prec
// leaves fewer than 20 coefficients beyond the basis size.
std::vector<mpq_class> quasimodular_solve(const QSeries& target, const QuasiModularBasis& basis, long prec);

// Solves R_{order} or C_{order} in moment_basis and reads the result back
// as a formula.
MomentFormula rediscover_formula(Statistic s, long order, long prec);
// Same terms with the same coefficients, in any order.
bool same_terms(const MomentFormula& a, const MomentFormula& b);

// T_k built from R_2, ..., R_{2k} and Theta.
QSeries T_series(long k, long prec);

std::vector<CheckResult> check_theta_identities(long prec);
// Theta(P f) lies in P M~_{2n+2} for every monomial f of weight <= 2n.
CheckResult check_theta_closure(long n, long prec);
// T_k lies in P M~_{2k}.
CheckResult check_T_membership(long k, long prec);

}  // namespace etaq::moments
