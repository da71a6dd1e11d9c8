#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "etaq/hauptmodul.hpp"
#include "etaq/qseries.hpp"
#include "etaq/report.hpp"

namespace etaq::towers {

// L_{2r,ell,0} = E_{2r}, L_{2r,ell,2i-1} = (Z_ell L_{2r,ell,2i-2}) | U_ell,
// L_{2r,ell,2i} = L_{2r,ell,2i-1} | U_ell. Known below prec.
QSeries L_series(long two_r, long ell, long k, long prec);

// e_{2r}(ell^k n + delta_{ell,k}) for n < count, read off L_{2r,ell,k} by
// dividing out (q^ell;q^ell) (k odd) or (q;q) (k even).
std::vector<mpq_class> extract_progression(long two_r, long ell, long k, long count);

// Least nonnegative delta with 24 delta = 1 (mod ell^k).
long delta(long ell, long k);

enum class Family { L45, L65, L47, L67, L413, L613 };

const std::vector<Family>& all_families();
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

// floor((A j - C i + D) / E)
struct MBound {
    long A, C, D, E;
    long operator()(long i, long j) const;
};

// slope * k + offset + floor((A j + D) / E) - sum of corrections at single j.
struct ABound {
    long slope, offset, A, D, E;
    std::map<long, long> corrections;  // j -> amount subtracted (the gamma_{j,n} terms)
    long operator()(long k, long j) const;
};

using Row = std::map<long, mpz_class>;  // j -> value, nonzero entries only

struct FamilySpec {
    Family id;
    long two_r;
    long ell;
    int sign;  // L_k = sign * prefactor * sum a(k,j) Y^j
    // Prefactor = (m-table prefactor) * prod eta(d tau)^e.
    std::vector<std::pair<long, long>> eta_part;
    // a(k+1, j) = sum_t a(k, t) m(alpha t + beta, t + j + shift), with beta
    // taken from beta_even when k + 1 is even and beta_even + 1 otherwise.
    long alpha, beta_even, shift;
    long a_jmin;  // lowest j of the representation (0 or 1)
    long seed_lo, seed_hi;  // rows given explicitly; others follow from the modular equation
    std::map<long, Row> published_m;  // published seed rows
    Row published_a1;                 // published a(1, .)
    MBound m_bound;
    ABound a_bound_odd, a_bound_even;
    // Even-level bound that the inductive argument actually delivers, when it
    // is weaker than the stated one.
    std::optional<ABound> a_bound_even_as_proved;
};

const FamilySpec& family_spec(Family f);

// The series multiplying Z^i before U_ell in the m-table: 1, E_{2,5}, the
// weight one Eisenstein series of level 7, or tilde E_{w,13}.
QSeries m_prefactor(Family f, long prec);
// sign * m_prefactor * eta part.
QSeries tower_prefactor(Family f, long prec);

hauptmodul::LaurentPoly to_laurent(const Row& r);
Row to_row(const hauptmodul::LaurentPoly& p);

// m(i, .) computed directly from q-expansions: (m_prefactor Z^i) | U_ell
// expanded in Y_ell. Throws table-inconsistent on non-integral output.
Row m_row_direct(Family f, long i, long prec = 0);

// Rows of m(i, .) for all integers i: seed rows computed directly, the rest
// by the recurrence m(i,j) = sum psi(r,s) m(i-r, j-s) run forwards or
// backwards. With a nonzero modulus every entry is reduced into [0, modulus).
// Not thread-safe; rows are cached.
class MTable {
public:
    explicit MTable(Family f, mpz_class modulus = 0);
    const Row& row(long i);
    mpz_class at(long i, long j);
    Family family() const { return f_; }
    const hauptmodul::ModularEquation& modular_equation() const { return *eq_; }

private:
    Family f_;
    mpz_class modulus_;
    std::shared_ptr<const hauptmodul::ModularEquation> eq_;
    std::map<long, Row> rows_;

    void reduce(Row& r) const;
};

// Modular equations for ell in {5, 7, 13}, derived once and shared.
std::shared_ptr<const hauptmodul::ModularEquation> shared_modular_equation(long ell);

// a(1, .) from scratch: L_{2r,ell,1} / tower_prefactor expanded in Y_ell.
Row a_row_direct(Family f, long k, long prec = 0);

// a(k, .) by the recurrence started from a(1, .): the row derived from
// q-expansions, or the published one on request.
class ATable {
public:
    explicit ATable(Family f, bool use_published = false);
    const Row& row(long k);
    MTable& m() { return m_; }

private:
    Family f_;
    MTable m_;
    std::vector<Row> rows_;  // rows_[k-1] = a(k, .)
};

// Seeds and a(1, .) recomputed from q-expansions against the published data.
std::vector<CheckResult> check_published_tables(Family f);

// L_{2r,ell,k} against sign * prefactor * sum a(k,j) Y^j through prec, and
// the recurrence row against the directly extracted one.
std::vector<CheckResult> check_representation(Family f, long k, long prec);

// Valuation bounds on m(i,j) and a(k,j) for k <= k_max, j <= j_max.
// Besides the direct checks this verifies two induction certificates: the
// seed rows and psi(r,s) make the m-bound propagate through the modular
// equation, and the a-bound of one level implies the next through the
// a-recurrence. Together they justify computing the grid modulo ell^N with
// the a-rows truncated where the tail is known to vanish modulo ell^N.
std::vector<CheckResult> check_valuation_bounds(Family f, long k_max, long j_max);

}  // namespace etaq::towers
