#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "etaq/catalog.hpp"
#include "etaq/congruence.hpp"
#include "etaq/error.hpp"
#include "etaq/sequences.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace etaq;
using namespace etaq::congruence;

namespace {

int euler_criterion(long a, long p)
{
    long r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    long acc = 1;
    for (long i = 0; i < (p - 1) / 2; ++i)
        acc = acc * r % p;
    return acc == 1 ? 1 : -1;
}

const catalog::ClaimInstance& instance(const catalog::CongruenceClaim& c, std::map<std::string, long> want)
{
    for (const auto& inst : c.instances) {
        bool ok = true;
        for (const auto& [k, v] : want)
            ok = ok && inst.params.count(k) && inst.params.at(k) == v;
        if (ok)
            return inst;
    }
    FAIL("no instance");
    return c.instances.front();
}

}  // namespace

TEST_CASE("catalog matches the displayed list")
{
    std::ifstream in(ETAQ_TEST_DATA_DIR "/displayed_congruences.txt");
    REQUIRE(in);
    std::map<std::string, std::pair<std::string, std::size_t>> listed;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string id, seq;
        std::size_t n = 0;
        ls >> id >> seq >> n;
        CHECK(listed.emplace(id, std::pair{seq, n}).second);
    }
    std::set<std::string> seen;
    for (const auto& c : catalog::claim_catalog()) {
        CAPTURE(c.id);
        CHECK(seen.insert(c.id).second);
        auto it = listed.find(c.id);
        REQUIRE(it != listed.end());
        CHECK(c.sequence == it->second.first);
        CHECK(c.instances.size() == it->second.second);
        for (const auto& inst : c.instances) {
            CHECK(sequences::is_sequence_name(inst.sequence));
            // k = 1 cases with the gamma correction have exponent 0.
            CHECK(inst.exponent >= 0);
            if (c.id == "eta2-mod11")
                CHECK(inst.default_nmax == 20);
            else
                CHECK(inst.default_nmax == catalog::default_window(inst.stride()));
        }
    }
    CHECK(seen.size() == listed.size());
    CHECK(catalog::has_claim("spt-quadratic"));
    CHECK_FALSE(catalog::has_claim("pn-mod13"));
    CHECK_THROWS_AS(catalog::find_claim("pn-mod13"), Error);
}

TEST_CASE("default windows")
{
    CHECK(catalog::default_window(5) == 200);
    CHECK(catalog::default_window(125) == 200);
    CHECK(catalog::default_window(169) == 60);
    CHECK(catalog::default_window(1331) == 60);
    CHECK(catalog::default_window(15625) == 20);
    CHECK(catalog::default_window(117649) == -1);
}

TEST_CASE("p(5n+4) mod 5 against the partition oracle")
{
    const auto& claim = catalog::find_claim("pn-mod5");
    const auto& k2 = instance(claim, {{"k", 2}});
    CHECK(k2.modulus() == 25);
    CHECK(k2.stride() == 25);
    Overrides o;
    o.n_max = 60;
    auto r = verify_instance(claim, k2, o, sequences::shared_store());
    CHECK(r.status == Status::Pass);
    CHECK(r.checked == 61);
    CHECK(r.prec == 25 * 60 + 24 + 1);

    auto p = oracle::partitions(25 * 60 + 25);
    for (long n = 0; n <= 60; ++n)
        CHECK(p[25 * n + 24] % 25 == 0);
}

TEST_CASE("raising the exponent falsifies the claim")
{
    const auto& claim = catalog::find_claim("pn-mod5");
    Overrides o;
    o.exponent_delta = 1;
    o.n_max = 50;
    o.select = {{"k", 1}};
    auto reports = verify_congruence(claim, o);
    REQUIRE(reports.size() == 1);
    const auto& r = reports[0];
    CHECK(r.status == Status::Fail);
    CHECK(r.exponent == 2);
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK(r.counterexamples.size() <= VerificationReport::kMaxListed);
    // p(4) = 5 is the first value not divisible by 25.
    CHECK(r.counterexamples[0].n == 0);
    CHECK(r.counterexamples[0].value == 5);
    CHECK(r.counterexamples[0].modulus == 25);

    auto p = oracle::partitions(5 * 50 + 5);
    long expected = 0;
    for (long n = 0; n <= 50; ++n)
        expected += p[5 * n + 4] % 25 != 0;
    CHECK(r.failures == expected);

    o.select = {{"k", 9}};
    CHECK_THROWS_AS(verify_congruence(claim, o), Error);
}

TEST_CASE("side condition exclusions")
{
    const auto& claim = catalog::find_claim("spt-quadratic");
    const auto& inst = instance(claim, {{"ell", 5}});
    Overrides o;
    o.n_max = 40;
    auto r = verify_instance(claim, inst, o, sequences::shared_store());
    long excluded = 0;
    for (long t = 0; t <= 40; ++t)
        excluded += euler_criterion(1 - 24 * t, 5) != 1;
    CHECK(r.excluded == excluded);
    CHECK(r.checked + r.excluded == 41);
    CHECK(r.status == Status::Pass);
}

TEST_CASE("precision budget gives skipped-infeasible")
{
    const auto& claim = catalog::find_claim("pn-mod7");
    sequences::SequenceStore small(100);
    Overrides o;
    o.n_max = 10;
    auto r = verify_instance(claim, instance(claim, {{"k", 2}}), o, small);
    CHECK(r.status == Status::SkippedInfeasible);
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.detail.empty());

    catalog::CongruenceClaim wide = claim;
    wide.instances[0].default_nmax = -1;
    auto s = verify_instance(wide, wide.instances[0], {}, sequences::shared_store());
    CHECK(s.status == Status::SkippedInfeasible);
    CHECK(s.checked == 0);
    o.n_max = 5;
    CHECK(verify_instance(wide, wide.instances[0], o, sequences::shared_store()).status == Status::Pass);
}

TEST_CASE("printed claims that fail")
{
    auto& store = sequences::shared_store();
    Overrides o;
    o.n_max = 10;

    // eta_6(24) is not divisible by 5.
    auto st = oracle::enumerate_partitions(24);
    CHECK(oracle::symmetrized_moment(st.rank, 6) == 2615691);
    const auto& eta6 = catalog::find_claim("eta6-5power");
    auto r = verify_instance(eta6, instance(eta6, {{"k", 2}}), o, store);
    CHECK(r.status == Status::Fail);
    CHECK(r.counterexamples[0].value == 2615691);
    CHECK(verify_instance(eta6, instance(eta6, {{"k", 1}}), o, store).status == Status::Pass);

    // N_4(4) = 164 breaks the exponent without the k = 1 correction.
    const auto& uncorr = catalog::find_claim("N4-5power-uncorrected");
    CHECK(verify_instance(uncorr, instance(uncorr, {{"k", 1}}), o, store).status == Status::Fail);
    CHECK(verify_instance(uncorr, instance(uncorr, {{"k", 2}}), o, store).status == Status::Pass);
    CHECK(oracle::power_moment(oracle::enumerate_partitions(4).rank, 4) == 164);
    const auto& later = catalog::find_claim("N4-5power");
    CHECK(verify_instance(later, instance(later, {{"k", 1}}), o, store).status == Status::Pass);

    // Hecke relation: only the ell || n form holds.
    const auto& printed = catalog::find_claim("thm-2nd-part2");
    const auto& exact = catalog::find_claim("thm-2nd-part2-exact");
    for (long r2 : {2, 3}) {
        CAPTURE(r2);
        CHECK(verify_instance(printed, instance(printed, {{"ell", 5}, {"m", 1}, {"r", r2}}), o, store).status ==
              Status::Fail);
        auto e = verify_instance(exact, instance(exact, {{"ell", 5}, {"m", 1}, {"r", r2}}), o, store);
        CHECK(e.status == Status::Pass);
        CHECK(e.excluded == 3);  // t = 0, 5, 10
    }
}

TEST_CASE("filter parsing")
{
    auto f = parse_filter("ell=5, spt  k=2");
    CHECK(f.params == std::map<std::string, long>{{"ell", 5}, {"k", 2}});
    CHECK(f.words == std::vector<std::string>{"spt"});
    CHECK(f.claims);
    CHECK(f.structure);
    CHECK_FALSE(parse_filter("claims").structure);
    CHECK_FALSE(parse_filter("structure").claims);
    CHECK(parse_filter("").words.empty());
    CHECK_THROWS_AS(parse_filter("ell=five"), Error);
    CHECK_THROWS_AS(parse_filter("ell=5x"), Error);
}

TEST_CASE("suite runs are deterministic and report as JSON")
{
    SuiteOptions one;
    one.filter = "claims pn-mod";
    one.overrides.n_max = 30;
    SuiteOptions three = one;
    three.jobs = 3;
    auto a = run_suite(one);
    auto b = run_suite(three);
    CHECK(a.claims.size() == 7);
    CHECK(a.structure.empty());
    CHECK(a.exit_code() == 0);
    CHECK(a.to_json(false) == b.to_json(false));

    auto j = nlohmann::json::parse(a.to_json());
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["summary"]["claims_pass"] == 7);
    CHECK(j["claims"][0]["window"]["n_max"] == 30);
    CHECK(j["claims"][0].contains("millis"));
    CHECK_FALSE(nlohmann::json::parse(a.to_json(false))["claims"][0].contains("millis"));

    SuiteOptions bad = one;
    bad.overrides.exponent_delta = 1;
    bad.filter = "claims pn-mod5 k=1";
    auto f = run_suite(bad);
    REQUIRE(f.claims.size() == 1);
    CHECK(f.exit_code() == 1);
    auto fj = nlohmann::json::parse(f.to_json());
    CHECK(fj["claims"][0]["status"] == "fail");
    CHECK(fj["claims"][0]["counterexamples"][0]["value"] == "5");

    SuiteOptions q;
    q.filter = "quasimodular";
    auto s = run_suite(q);
    REQUIRE(s.structure.size() == 1);
    CHECK(s.claims.empty());
    CHECK(s.exit_code() == 0);

    CHECK(run_suite(one, "/nonexistent-dir/report.json") == kExitUsage);
}

TEST_CASE("exit code 2 when only skips")
{
    SuiteReport r;
    r.claims.resize(2);
    r.claims[0].status = Status::Pass;
    r.claims[1].status = Status::SkippedInfeasible;
    CHECK(r.exit_code() == 2);
    r.claims[1].status = Status::Fail;
    CHECK(r.exit_code() == 1);
    CHECK(std::string(to_string(Status::SkippedInfeasible)) == "skipped-infeasible");
}
