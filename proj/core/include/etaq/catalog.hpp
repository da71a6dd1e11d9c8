#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etaq::catalog {

// coeff * seq(A t + B); the window variable t runs over 0..n_max.
struct Term {
    mpz_class coeff = 1;
    mpz_class A = 1;
    mpz_class B = 0;
};

// Restriction on the window variable t.
struct SideCondition {
    enum class Kind { None, KroneckerIsOne, NotDivisible };
    Kind kind = Kind::None;
    // Kronecker symbol (a t + b / ell) = 1, or ell does not divide a t + b.
    long a = 0, b = 0;
    std::string text;  // as stated, in terms of the claim's own n

    bool holds(long t, long ell) const;
};

// One instantiation of a claim: fixed parameters, a concrete modulus.
struct ClaimInstance {
    std::string sequence;
    std::map<std::string, long> params;
    std::vector<Term> terms;  // sum of terms == 0 (mod ell^exponent)
    long ell = 0;
    long exponent = 0;
    long default_nmax = 0;  // -1: infeasible by default

    mpz_class modulus() const;
    // Largest A over the terms, which drives the precision budget.
    mpz_class stride() const;
    std::string param_string() const;
};

struct CongruenceClaim {
    std::string id;
    std::string statement;
    std::string sequence;
    std::string exponent_formula;  // in terms of the claim parameters, e.g. "floor((k+1)/2)"
    SideCondition side;
    std::vector<ClaimInstance> instances;
    std::string note;  // caveat kept with the claim (e.g. inconsistent statements)
};

// Default window for a stride A: 200 for A <= 125, 60 for A <= 2500,
// 20 for A <= 20000, otherwise -1 (infeasible unless overridden).
long default_window(const mpz_class& A);

// Every displayed congruence, one claim each, instantiated for the default
// parameter ranges.
const std::vector<CongruenceClaim>& claim_catalog();
const CongruenceClaim& find_claim(const std::string& id);
bool has_claim(const std::string& id);

}  // namespace etaq::catalog
