#include "etaq/catalog.hpp"

#include <functional>

#include "etaq/error.hpp"
#include "etaq/numtheory.hpp"

namespace etaq::catalog {

using numtheory::delta_inverse24;
using numtheory::ipow;

bool SideCondition::holds(long t, long ell) const
{
    long v = a * t + b;
    switch (kind) {
    case Kind::None:
        return true;
    case Kind::KroneckerIsOne:
        return numtheory::kronecker_symbol(v, ell) == 1;
    case Kind::NotDivisible:
        return v % ell != 0;
    }
    return true;
}

mpz_class ClaimInstance::modulus() const { return ipow(ell, static_cast<unsigned long>(std::max(exponent, 0L))); }

mpz_class ClaimInstance::stride() const
{
    mpz_class a = 0;
    for (const auto& t : terms)
        if (t.A > a)
            a = t.A;
    return a;
}

std::string ClaimInstance::param_string() const
{
    std::string s;
    for (const auto& [k, v] : params)
        s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
    return s;
}

long default_window(const mpz_class& A)
{
    if (A <= 125)
        return 200;
    if (A <= 2500)
        return 60;
    if (A <= 20000)
        return 20;
    return -1;
}

namespace {

using ExponentFn = std::function<long(long)>;

long gamma1(long k) { return k == 1 ? 1 : 0; }

ClaimInstance make_instance(std::string seq, long ell, long exponent, std::vector<Term> terms,
                            std::map<std::string, long> params)
{
    ClaimInstance inst;
    inst.sequence = std::move(seq);
    inst.ell = ell;
    inst.exponent = exponent;
    inst.terms = std::move(terms);
    params["ell"] = ell;
    inst.params = std::move(params);
    inst.default_nmax = default_window(inst.stride());
    return inst;
}

class Builder {
public:
    std::vector<CongruenceClaim> claims;

    CongruenceClaim& add(std::string id, std::string seq, std::string statement, std::string exponent_formula)
    {
        CongruenceClaim c;
        c.id = std::move(id);
        c.sequence = std::move(seq);
        c.statement = std::move(statement);
        c.exponent_formula = std::move(exponent_formula);
        claims.push_back(std::move(c));
        return claims.back();
    }

    // seq(ell^{step k} n + delta_{ell, step k}) = 0 (mod ell^{e(k)}) for k in [k_lo, k_hi].
    void power(const std::string& id, const std::string& seq, long ell, long k_lo, long k_hi, const std::string& etext,
               const ExponentFn& e, long step = 1, const std::string& note = "")
    {
        std::string arg = step == 1 ? std::to_string(ell) + "^k n + delta_{" + std::to_string(ell) + ",k}"
                                    : std::to_string(ell) + "^{" + std::to_string(step) + "k} n + delta_{" +
                                          std::to_string(ell) + "," + std::to_string(step) + "k}";
        auto& c = add(id, seq, seq + "(" + arg + ") = 0 (mod " + std::to_string(ell) + "^{" + etext + "})", etext);
        c.note = note;
        for (long k = k_lo; k <= k_hi; ++k) {
            long j = step * k;
            c.instances.push_back(make_instance(
                seq, ell, e(k), {{1, ipow(ell, static_cast<unsigned long>(j)), delta_inverse24(ell, j)}}, {{"k", k}}));
        }
    }

    // seq(A n + r) = 0 (mod ell^e) for each listed r.
    void residues(const std::string& id, const std::string& seq, long A, std::vector<long> rs, long ell, long e)
    {
        std::string rlist;
        for (long r : rs)
            rlist += (rlist.empty() ? "" : ",") + std::to_string(r);
        std::string stmt = seq + "(" + std::to_string(A) + "n + r) = 0 (mod " + std::to_string(ell) +
                           (e > 1 ? "^" + std::to_string(e) : "") + ")";
        if (rs.size() > 1)
            stmt += ", r in {" + rlist + "}";
        auto& c = add(id, seq, stmt, std::to_string(e));
        for (long r : rs) {
            std::map<std::string, long> params;
            if (rs.size() > 1)
                params["r"] = r;
            c.instances.push_back(make_instance(seq, ell, e, {{1, A, r}}, params));
        }
    }
};

// Index (ell^{2m} n + 1) / 24 with n = 24 t - 1, as an affine function of t.
Term hecke_index(long ell, long m, const mpz_class& coeff = 1)
{
    mpz_class a = ipow(ell, static_cast<unsigned long>(2 * m));
    return {coeff, a, -(a - 1) / 24};
}

std::vector<CongruenceClaim> build()
{
    Builder b;
    auto lin = [](long c0, long c1) { return [=](long k) { return c0 + c1 * k; }; };
    auto half_up = [](long k) { return (k + 1) / 2; };
    auto half_up_gamma = [](long k) { return (k + 1) / 2 - gamma1(k); };
    auto half_plus1 = [](long k) { return k / 2 + 1; };
    auto half = [](long k) { return k / 2; };

    // Partitions.
    b.power("pn-mod5", "p", 5, 1, 3, "k", lin(0, 1));
    b.power("pn-mod7", "p", 7, 1, 2, "floor(k/2)+1", half_plus1);
    b.power("pn-mod11", "p", 11, 1, 2, "k", lin(0, 1));

    // Smallest parts.
    b.residues("spt-mod5", "spt", 5, {4}, 5, 1);
    b.residues("spt-mod7", "spt", 7, {5}, 7, 1);
    b.residues("spt-mod13", "spt", 13, {6}, 13, 1);
    {
        auto& c = b.add("spt-quadratic", "spt", "spt(ell^2 n - (ell^2-1)/24) = 0 (mod ell) when ((1-24n)/ell) = 1", "1");
        c.side = {SideCondition::Kind::KroneckerIsOne, -24, 1, "kronecker(1-24n, ell) = 1"};
        for (long ell : {5, 7, 11, 13, 17, 19, 23}) {
            mpz_class a = ell * ell;
            c.instances.push_back(make_instance("spt", ell, 1, {{1, a, -(a - 1) / 24}}, {}));
        }
    }
    {
        struct Rel {
            const char* id;
            long ell;
            long sign;
            const char* etext;
            long e;
        };
        // spt(ell^j n + delta_j) + sign * ell * spt(ell^{j-2} n + delta_{j-2}), j = 3.
        const Rel rels[] = {{"spt-5power", 5, 1, "2j-3", 3}, {"spt-7power", 7, 1, "floor((3j-2)/2)", 3},
                            {"spt-13power", 13, -1, "j-1", 2}};
        for (const auto& r : rels) {
            std::string l = std::to_string(r.ell);
            auto& c = b.add(r.id, "spt",
                            "spt(" + l + "^j n + delta_{" + l + ",j}) " + (r.sign > 0 ? "+ " : "- ") + l + " spt(" + l +
                                "^{j-2} n + delta_{" + l + ",j-2}) = 0 (mod " + l + "^{" + r.etext + "}), j >= 3",
                            r.etext);
            c.instances.push_back(make_instance("spt", r.ell, r.e,
                                                {{1, ipow(r.ell, 3), delta_inverse24(r.ell, 3)},
                                                 {r.sign * r.ell, r.ell, delta_inverse24(r.ell, 1)}},
                                                {{"k", 3}}));
        }
    }
    {
        auto& c = b.add("spt-general", "spt", "spt(ell^j n + delta_{ell,j}) = 0 (mod ell^{floor((j+1)/2)}), ell in {5,7,13}",
                        "floor((j+1)/2)");
        for (auto [ell, kmax] : {std::pair{5L, 3L}, {7L, 2L}, {13L, 2L}})
            for (long k = 1; k <= kmax; ++k)
                c.instances.push_back(make_instance(
                    "spt", ell, half_up(k), {{1, ipow(ell, static_cast<unsigned long>(k)), delta_inverse24(ell, k)}}, {{"k", k}}));
    }

    // Second moments and symmetrized moments mod ell.
    b.residues("N2-mod5", "N2", 5, {1, 4}, 5, 1);
    b.residues("eta2-mod5", "eta2", 5, {1, 4}, 5, 1);
    b.residues("N2-mod7", "N2", 7, {1, 5}, 7, 1);
    b.residues("eta2-mod7", "eta2", 7, {1, 5}, 7, 1);
    b.residues("N4-mod7", "N4", 7, {1, 5}, 7, 1);
    b.residues("eta4-mod7", "eta4", 7, {1, 5}, 7, 1);
    b.residues("spt2-mod5", "spt2", 5, {0, 1, 4}, 5, 1);
    b.residues("spt2-mod7", "spt2", 7, {0, 1, 5}, 7, 1);
    b.residues("spt3-mod7", "spt3", 7, {0, 1, 2, 4, 5}, 7, 1);
    b.residues("eta4-mod5", "eta4", 25, {24}, 5, 1);
    b.residues("eta6-mod7", "eta6", 49, {19, 33, 40, 47}, 7, 1);
    b.residues("eta2-mod11", "eta2", 1331, {479}, 11, 1);
    b.claims.back().instances[0].default_nmax = 20;
    b.residues("eta8-mod13", "eta8", 169, {162}, 13, 1);

    // e_{2r} from the Hecke operators.
    {
        auto& c = b.add("thm-general", "e{2r}", "e_{2r}((ell^{2m} n + 1)/24) = 0 (mod ell^{2(r-1)m}) for every integer n",
                        "2(r-1)m");
        c.note = "n runs over 24t - 1; other n make the argument non-integral";
        for (auto [ell, m] : {std::pair{5L, 1L}, {7L, 1L}, {11L, 1L}, {13L, 1L}, {5L, 2L}})
            for (long r : {2, 3, 4, 5, 7}) {
                c.instances.push_back(make_instance("e" + std::to_string(2 * r), ell, 2 * (r - 1) * m, {hecke_index(ell, m)}, {{"m", m}, {"r", r}}));
            }
    }
    {
        auto& c = b.add("thm-2nd-part1", "e{2r}",
                        "e_{2r}((ell^{2m} n + 1)/24) = 0 (mod ell^{4r-3} for m = 1, ell^{8r-6} for m = 2) when (-n/ell) = 1",
                        "(4r-3)m");
        c.side = {SideCondition::Kind::KroneckerIsOne, -24, 1, "kronecker(-n, ell) = 1"};
        for (auto [ell, m] : {std::pair{5L, 1L}, {7L, 1L}, {5L, 2L}})
            for (long r : {2, 3, 4, 5, 7}) {
                c.instances.push_back(make_instance("e" + std::to_string(2 * r), ell, (4 * r - 3) * m, {hecke_index(ell, m)}, {{"m", m}, {"r", r}}));
            }
    }
    {
        auto& c = b.add("thm-2nd-part2", "e{2r}",
                        "e_{2r}((ell^{2m} n + 1)/24) = (3/ell) ell^{2r-2} e_{2r}((ell^{2m-2} n + 1)/24) "
                        "(mod ell^{4r-3} for m = 1, ell^{8r-6} for m = 2) when ell does not divide n",
                        "(4r-3)m");
        c.side = {SideCondition::Kind::NotDivisible, 24, -1, "ell does not divide n"};
        for (auto [ell, m] : {std::pair{5L, 1L}, {7L, 1L}, {5L, 2L}})
            for (long r : {2, 3, 4, 5, 7}) {
                mpz_class rhs = -numtheory::kronecker_symbol(3, ell) * ipow(ell, static_cast<unsigned long>(2 * r - 2));
                c.instances.push_back(make_instance("e" + std::to_string(2 * r), ell, (4 * r - 3) * m, {hecke_index(ell, m), hecke_index(ell, m - 1, rhs)},
                                          {{"m", m}, {"r", r}}));
            }
    }
    {
        // Same relation for ell || n, the case the proof actually covers.
        // n = ell (24 t - ell) runs over n = -1 (mod 24) divisible by ell; ell || n iff ell does not divide t.
        auto& c = b.add("thm-2nd-part2-exact", "e{2r}",
                        "e_{2r}((ell^{2m} n + 1)/24) = (3/ell) ell^{2r-2} e_{2r}((ell^{2m-2} n + 1)/24) "
                        "(mod ell^{4r-3} for m = 1, ell^{8r-6} for m = 2) when ell || n",
                        "(4r-3)m");
        c.side = {SideCondition::Kind::NotDivisible, 1, 0, "ell exactly divides n"};
        c.note = "the displayed hypothesis 'ell does not divide n' fails numerically; this is the form the proof gives";
        auto shifted = [](long ell, long m, const mpz_class& coeff) {
            mpz_class a = ipow(ell, static_cast<unsigned long>(2 * m));
            return Term{coeff, a * ell, -(a * ell * ell - 1) / 24};
        };
        for (auto [ell, m] : {std::pair{5L, 1L}, {7L, 1L}, {5L, 2L}})
            for (long r : {2, 3, 4, 5, 7}) {
                mpz_class rhs = -numtheory::kronecker_symbol(3, ell) * ipow(ell, static_cast<unsigned long>(2 * r - 2));
                c.instances.push_back(make_instance("e" + std::to_string(2 * r), ell, (4 * r - 3) * m,
                                                    {shifted(ell, m, 1), shifted(ell, m - 1, rhs)}, {{"m", m}, {"r", r}}));
            }
    }

    // e_4 and e_6 modulo powers of 5, 7, 11, 13.
    b.power("e4-5", "e4", 5, 1, 3, "k", lin(0, 1));
    b.power("e4-5-even", "e4", 5, 1, 1, "2k", lin(0, 2), 2);
    b.power("e6-5", "e6", 5, 1, 3, "2k", lin(0, 2));
    b.power("e4-7", "e4", 7, 1, 2, "k", lin(0, 1));
    b.residues("e6-mod7-add", "e6", 7, {5}, 7, 1);
    b.residues("e6-mod49-add", "e6", 49, {19, 33, 40, 47}, 7, 2);
    b.power("e6-7", "e6", 7, 1, 1, "2k", lin(0, 2), 2);
    b.power("e4-13", "e4", 13, 1, 1, "2k", lin(0, 2), 2);
    b.power("e6-13", "e6", 13, 1, 1, "2k", lin(0, 2), 2);
    b.power("e4-11", "e4", 11, 1, 2, "k", lin(0, 1));
    b.power("e6-11", "e6", 11, 1, 1, "2k", lin(0, 2), 2);

    // Moments of ranks and cranks.
    b.power("N2-5power", "N2", 5, 1, 3, "floor((j+1)/2)", half_up);
    b.power("N2-7power", "N2", 7, 1, 2, "floor((j+1)/2)", half_up);
    b.power("M4-5power", "M4", 5, 1, 3, "k-1", lin(-1, 1));
    b.power("M4-7power", "M4", 7, 1, 2, "floor(k/2)+1", half_plus1);
    b.power("M4-7power-uncorrected", "M4", 7, 1, 2, "floor((k+1)/2)", half_up);
    b.power("M4-11power", "M4", 11, 1, 2, "k", lin(0, 1));
    b.power("M6-5power", "M6", 5, 1, 3, "k", lin(0, 1));
    b.power("M6-7power", "M6", 7, 1, 2, "floor(k/2)", half);
    b.power("M6-11power", "M6", 11, 1, 2, "k", lin(0, 1));
    b.power("mu4-5power", "mu4", 5, 1, 3, "k-1", lin(-1, 1));
    b.power("mu4-7power", "mu4", 7, 1, 2, "floor(k/2)+1", half_plus1);
    b.power("mu4-11power", "mu4", 11, 1, 2, "k", lin(0, 1));
    b.power("mu6-5power", "mu6", 5, 1, 3, "k-1", lin(-1, 1));
    b.power("mu6-7power", "mu6", 7, 1, 2, "floor(k/2)", half);
    b.power("mu6-11power", "mu6", 11, 1, 2, "k", lin(0, 1));
    b.power("N4-5power", "N4", 5, 1, 3, "floor((k+1)/2)-gamma(k,1)", half_up_gamma);
    b.power("N4-5power-uncorrected", "N4", 5, 1, 3, "floor((k+1)/2)", half_up);
    b.power("N4-7power", "N4", 7, 1, 2, "floor((k+1)/2)", half_up);
    b.power("N6-5power", "N6", 5, 1, 3, "floor((k+1)/2)", half_up);
    b.power("N6-7power", "N6", 7, 1, 2, "floor((k+1)/2)-gamma(k,1)", half_up_gamma, 1,
            "displayed with M_6 on the left; the claim concerns N_6 and is checked for N_6");
    b.power("eta4-5power", "eta4", 5, 1, 3, "floor((k+1)/2)-gamma(k,1)", half_up_gamma);
    b.power("eta4-7power", "eta4", 7, 1, 2, "floor((k+1)/2)", half_up, 1,
            "carries no gamma(k,1) correction while the other three lines of the same statement do");
    b.power("eta6-5power", "eta6", 5, 1, 3, "floor((k+1)/2)-gamma(k,1)", half_up_gamma);
    b.power("eta6-7power", "eta6", 7, 1, 2, "floor((k+1)/2)-gamma(k,1)", half_up_gamma);
    b.power("spt2-5power", "spt2", 5, 1, 3, "floor((k+1)/2)", half_up);
    b.power("spt2-7power", "spt2", 7, 1, 2, "floor((k+1)/2)", half_up);
    b.power("spt3-5power", "spt3", 5, 1, 3, "floor((k-1)/2)", [](long k) { return (k - 1) / 2; });
    b.power("spt3-7power", "spt3", 7, 1, 2, "floor((k+1)/2)", half_up);

    return b.claims;
}

}  // namespace

const std::vector<CongruenceClaim>& claim_catalog()
{
    static const std::vector<CongruenceClaim> all = build();
    return all;
}

bool has_claim(const std::string& id)
{
    for (const auto& c : claim_catalog())
        if (c.id == id)
            return true;
    return false;
}

const CongruenceClaim& find_claim(const std::string& id)
{
    for (const auto& c : claim_catalog())
        if (c.id == id)
            return c;
    fail(ErrorKind::InvalidParameter, "unknown claim '" + id + "'");
}

}  // namespace etaq::catalog
