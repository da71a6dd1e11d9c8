#include "doctest.h"

#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/moments.hpp"
#include "etaq/sequences.hpp"
#include "oracles.hpp"

using namespace etaq;
using namespace etaq::moments;

namespace {

constexpr long kOracleMax = 30;

const std::vector<oracle::PartitionStats>& enumerated()
{
    static const std::vector<oracle::PartitionStats> all = [] {
        std::vector<oracle::PartitionStats> v;
        for (long n = 0; n <= kOracleMax; ++n)
            v.push_back(oracle::enumerate_partitions(n));
        return v;
    }();
    return all;
}

}  // namespace

TEST_CASE("moment kinds")
{
    CHECK(MomentKind{Statistic::Rank, Flavor::Ordinary, 4}.name() == "N4");
    CHECK(MomentKind{Statistic::Crank, Flavor::Symmetrized, 6}.name() == "mu6");
    auto k = parse_moment_kind("eta12");
    REQUIRE(k.has_value());
    CHECK(k->statistic == Statistic::Rank);
    CHECK(k->flavor == Flavor::Symmetrized);
    CHECK(k->order == 12);
    CHECK_FALSE(parse_moment_kind("N3").has_value());
    CHECK_FALSE(parse_moment_kind("M0").has_value());
    CHECK_FALSE(parse_moment_kind("e4").has_value());
    CHECK_THROWS_AS(moment_series(Statistic::Rank, 3, 10), Error);
}

TEST_CASE("moment series small coefficients")
{
    QSeries c2 = moment_series(Statistic::Crank, 2, 10);
    CHECK(c2.coeff(2) == 8);
    CHECK(moment_series(Statistic::Rank, 2, 10).coeff(1) == 0);
    CHECK(moment_series(Statistic::Crank, 4, 10).coeff(1) == 2);
    CHECK(symmetrized_series(Statistic::Crank, 2, 10).coeff(2) == 4);
    auto p = oracle::partitions(60);
    QSeries m2 = moment_series(Statistic::Crank, 2, 60);
    for (long n = 0; n < 60; ++n)
        CHECK(m2.coeff(n) == 2 * n * p[n]);
}

TEST_CASE("moments agree with partition enumeration")
{
    const long prec = kOracleMax + 1;
    QSeries N2 = moment_series(Statistic::Rank, 2, prec), N4 = moment_series(Statistic::Rank, 4, prec);
    QSeries M2 = moment_series(Statistic::Crank, 2, prec), M4 = moment_series(Statistic::Crank, 4, prec);
    QSeries eta4 = symmetrized_series(Statistic::Rank, 4, prec), mu4 = symmetrized_series(Statistic::Crank, 4, prec);
    auto spt = spt_sequence(1, prec);
    auto spt2 = spt_sequence(2, prec);
    auto p = forms::partition_power(1, prec);
    for (long n = 1; n <= kOracleMax; ++n) {
        CAPTURE(n);
        const auto& st = enumerated()[n];
        auto crank = oracle::crank_series_convention(st, n);
        CHECK(p[n] == st.count);
        CHECK(spt[n] == st.smallest_parts);
        CHECK(N2.coeff(n) == oracle::power_moment(st.rank, 2));
        CHECK(N4.coeff(n) == oracle::power_moment(st.rank, 4));
        CHECK(M2.coeff(n) == oracle::power_moment(crank, 2));
        CHECK(M4.coeff(n) == oracle::power_moment(crank, 4));
        CHECK(eta4.coeff(n) == oracle::symmetrized_moment(st.rank, 4));
        CHECK(mu4.coeff(n) == oracle::symmetrized_moment(crank, 4));
        CHECK(spt2[n] == oracle::symmetrized_moment(crank, 4) - oracle::symmetrized_moment(st.rank, 4));
    }
    // The convention matters only at n = 1: the single partition has crank -1.
    CHECK(enumerated()[1].crank == std::map<long, long>{{-1, 1}});
    CHECK(M2.coeff(1) == 2);
}

TEST_CASE("spt values and congruence")
{
    auto spt = spt_sequence(1, 200);
    CHECK(spt[1] == 1);
    CHECK(spt[2] == 3);
    CHECK(spt[3] == 5);
    CHECK(spt[4] == 10);
    for (long n = 4; n < 200; n += 5)
        CHECK(spt[n] % 5 == 0);
    CHECK(spt_sequence(2, 5)[1] == 0);
}

TEST_CASE("formula parser")
{
    auto t = parse_formula_terms("1/20 e4 - 1/20 p + 2 n p - 12 n^2 p - 3/7 n p23(n-1) + N2");
    REQUIRE(t.size() == 6);
    CHECK(t[0].coeff == mpq_class(1, 20));
    CHECK(t[0].input == "e4");
    CHECK(t[1].coeff == mpq_class(-1, 20));
    CHECK(t[3].n_power == 2);
    CHECK(t[3].coeff == -12);
    CHECK(t[4].input == "p23");
    CHECK(t[4].shift == 1);
    CHECK(t[4].n_power == 1);
    CHECK(t[5].coeff == 1);
    CHECK_THROWS_AS(parse_formula_terms("1/2 q7"), Error);
    CHECK_THROWS_AS(parse_formula_terms("1/2 e4 + 3"), Error);
}

TEST_CASE("formula evaluation")
{
    CHECK(moment_formula_eval("M4", 1) == 2);
    CHECK(moment_formula_eval("N4", 1) == 0);
    for (long n = 0; n < 20; ++n)
        CHECK(moment_formula_eval("M2", n) == 2 * n * sequences::shared_store().value("p", n));
    CHECK_THROWS_AS(moment_formula("M5"), Error);

    sequences::SequenceStore small(10);
    CHECK_THROWS_AS(moment_formula_eval(moment_formula("M4"), 11, small), Error);
}

TEST_CASE("every formula matches its series")
{
    auto& store = sequences::shared_store();
    for (const auto& f : moment_formulas()) {
        CAPTURE(f.id);
        CheckResult c = check_formula(f, 120, store);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    // This version of N_4 drops the N_2(n) term; N_2(2) = 2.
    MomentFormula uncorrected{"N4-uncorrected", "N4", parse_formula_terms("2/15 e4 - 2/15 p + 4 n p - 36 n^2 p - 12 n N2")};
    CheckResult c = check_formula(uncorrected, 120, store);
    CHECK_FALSE(c.pass);
    CHECK(c.detail.find("n = 2:") != std::string::npos);
}

TEST_CASE("formula inputs against oracles")
{
    auto& store = sequences::shared_store();
    for (long w : {4, 6, 8, 10, 14}) {
        auto e = oracle::e_values(w, 40);
        for (long n = 0; n < 40; ++n)
            CHECK(store.value("e" + std::to_string(w), n) == e[n]);
    }
    auto p23 = oracle::euler_factor(1, 23, 40);
    for (long n = 0; n < 40; ++n)
        CHECK(store.value("p23", n) == p23[n]);
    CHECK(store.value("p23", -1) == 0);
    // e12 is not integral: E_12 = 1 + 65520/691 sum sigma_11(n) q^n.
    CHECK(store.value("e12", 1) == mpq_class(65520, 691) + 1);
}

TEST_CASE("quasi-modular dimensions")
{
    const long dims[] = {2, 4, 7, 11, 16, 23, 31, 41, 53, 67};
    for (long n = 1; n <= 10; ++n)
        CHECK(static_cast<long>(quasimodular_monomials(n).size()) == dims[n - 1]);
    for (long n = 1; n <= 5; ++n)
        CHECK(moment_basis(n, Statistic::Crank).elements.size() == static_cast<std::size_t>(n * (n + 1) / 2 + 1));
    CHECK(moment_basis(6, Statistic::Crank).elements.size() == 23);
    CHECK(moment_basis(7, Statistic::Crank).elements.size() == 31);
    auto m = quasimodular_monomials(2);
    CHECK(m.front() == std::array<long, 3>{0, 0, 0});
    CHECK(m.back() == std::array<long, 3>{2, 0, 0});
}

TEST_CASE("solving C4 and C12")
{
    auto b2 = moment_basis(2, Statistic::Crank);
    auto c = quasimodular_solve(moment_series(Statistic::Crank, 4, 60), b2, 60);
    REQUIRE(c.size() == 4);
    CHECK(b2.elements[0].label() == "P*E4");
    CHECK(b2.elements[3].label() == "Theta^2(P)");
    CHECK(c == std::vector<mpq_class>{mpq_class(1, 20), mpq_class(-1, 20), 2, -12});

    auto b6 = moment_basis(6, Statistic::Crank);
    auto c12 = quasimodular_solve(moment_series(Statistic::Crank, 12, 80), b6, 80);
    REQUIRE(b6.elements.back().kind == BasisElement::Kind::ThetaPDelta);
    CHECK(c12.back() == mpq_class(-17147966, 26113581));

    CHECK_THROWS_AS(quasimodular_solve(moment_series(Statistic::Crank, 4, 30), b2, 10), Error);
    // R_4 needs the Theta^i(R_2) terms.
    CHECK_THROWS_AS(quasimodular_solve(moment_series(Statistic::Rank, 4, 60), b2, 60), Error);
}

TEST_CASE("formulas rediscovered by the solver")
{
    for (long order = 2; order <= 14; order += 2) {
        for (Statistic s : {Statistic::Crank, Statistic::Rank}) {
            if (order == 2 && s == Statistic::Rank)
                continue;
            MomentFormula f = rediscover_formula(s, order, 100);
            CAPTURE(f.target);
            CHECK(same_terms(f, moment_formula(f.target)));
        }
    }
}

TEST_CASE("theta identities and closure")
{
    for (const auto& c : check_theta_identities(150)) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    for (long n = 0; n <= 3; ++n)
        CHECK(check_theta_closure(n, 70).pass);
}

TEST_CASE("T_k membership")
{
    for (long k = 1; k <= 5; ++k) {
        CheckResult c = check_T_membership(k, 80);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    // R_4 alone is not in P M~_4.
    CHECK_THROWS_AS(quasimodular_solve(moment_series(Statistic::Rank, 4, 60), monomial_basis(2), 60), Error);
}

TEST_CASE("sequence store")
{
    auto& store = sequences::shared_store();
    CHECK(sequences::is_sequence_name("spt3"));
    CHECK(sequences::is_sequence_name("p23"));
    CHECK_FALSE(sequences::is_sequence_name("e5"));
    CHECK_FALSE(sequences::is_sequence_name("q"));
    CHECK_THROWS_AS(store.value("x", 3), Error);
    auto spt = spt_sequence(3, 50);
    for (long n = 0; n < 50; ++n)
        CHECK(store.value("spt3", n) == spt[n]);
    // Indices far past the first request extend the cache.
    CHECK(store.value("p", 1000) == mpz_class("24061467864032622473692149727991"));
}
