#include "etaq/congruence.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "etaq/error.hpp"
#include "etaq/hecke.hpp"
#include "etaq/moments.hpp"
#include "etaq/numtheory.hpp"
#include "etaq/sequences.hpp"
#include "etaq/towers.hpp"
#include "json.hpp"

namespace etaq::congruence {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json params_json(const std::map<std::string, long>& params)
{
    json j = json::object();
    for (const auto& [k, v] : params)
        j[k] = v;
    return j;
}

json checks_json(const std::vector<CheckResult>& checks)
{
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"detail", c.detail}});
    return arr;
}

bool matches(const std::map<std::string, long>& want, const std::map<std::string, long>& have)
{
    for (const auto& [k, v] : want) {
        auto it = have.find(k);
        if (it == have.end() || it->second != v)
            return false;
    }
    return true;
}

}  // namespace

const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::SkippedInfeasible:
        return "skipped-infeasible";
    }
    return "?";
}

std::string VerificationReport::to_json(bool include_timing) const
{
    json j;
    j["schema"] = kReportSchema;
    j["claim"] = claim;
    j["sequence"] = sequence;
    j["params"] = params_json(params);
    j["exponent"] = exponent;
    j["window"] = {{"n_min", 0}, {"n_max", n_max}, {"checked", checked}, {"excluded", excluded}};
    j["status"] = congruence::to_string(status);
    j["failures"] = failures;
    json ce = json::array();
    for (const auto& c : counterexamples)
        ce.push_back({{"n", c.n}, {"value", c.value.get_str()}, {"modulus", c.modulus.get_str()}});
    j["counterexamples"] = ce;
    j["prec"] = prec;
    if (include_timing)
        j["millis"] = millis;
    if (!detail.empty())
        j["detail"] = detail;
    return j.dump();
}

VerificationReport verify_instance(const catalog::CongruenceClaim& claim, const catalog::ClaimInstance& inst,
                                   const Overrides& overrides, sequences::SequenceStore& store)
{
    auto t0 = Clock::now();
    VerificationReport r;
    r.claim = claim.id;
    r.sequence = inst.sequence;
    r.params = inst.params;
    r.exponent = inst.exponent + overrides.exponent_delta;
    r.n_max = overrides.n_max.value_or(inst.default_nmax);
    if (r.n_max < 0) {
        r.status = Status::SkippedInfeasible;
        r.detail = "stride " + inst.stride().get_str() + " is beyond the default budget; set n_max to run it";
        r.millis = millis_since(t0);
        return r;
    }
    mpz_class modulus = numtheory::ipow(inst.ell, static_cast<unsigned long>(std::max(r.exponent, 0L)));
    try {
        for (long t = 0; t <= r.n_max; ++t) {
            if (!claim.side.holds(t, inst.ell)) {
                ++r.excluded;
                continue;
            }
            mpq_class sum = 0;
            for (const auto& term : inst.terms) {
                mpz_class idx = term.A * t + term.B;
                require(idx.fits_slong_p(), ErrorKind::PrecisionExhausted, "index out of range");
                long i = idx.get_si();
                r.prec = std::max(r.prec, i + 1);
                sum += term.coeff * store.value(inst.sequence, i);
            }
            ++r.checked;
            bool ok = sum.get_den() == 1 && mpz_class(sum.get_num() % modulus) == 0;
            if (!ok) {
                ++r.failures;
                if (r.counterexamples.size() < VerificationReport::kMaxListed)
                    r.counterexamples.push_back(
                        {t, sum.get_den() == 1 ? sum.get_num() : mpz_class(0), modulus});
                if (sum.get_den() != 1 && r.detail.empty())
                    r.detail = "non-integral value " + sum.get_str() + " at n = " + std::to_string(t);
            }
        }
        r.status = r.failures == 0 ? Status::Pass : Status::Fail;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PrecisionExhausted)
            throw;
        r.status = Status::SkippedInfeasible;
        r.failures = 0;
        r.counterexamples.clear();
        r.detail = e.what();
    }
    r.millis = millis_since(t0);
    return r;
}

std::vector<VerificationReport> verify_congruence(const catalog::CongruenceClaim& claim, const Overrides& overrides)
{
    std::vector<VerificationReport> out;
    for (const auto& inst : claim.instances)
        if (matches(overrides.select, inst.params))
            out.push_back(verify_instance(claim, inst, overrides, sequences::shared_store()));
    require(!out.empty() || claim.instances.empty(), ErrorKind::InvalidParameter,
            "no instance of " + claim.id + " matches the requested parameters");
    return out;
}

// ---- suite ----

long SuiteReport::count(Status s) const
{
    long n = 0;
    for (const auto& r : claims)
        n += r.status == s;
    return n;
}

long SuiteReport::structure_failures() const
{
    long n = 0;
    for (const auto& s : structure)
        n += !s.pass();
    return n;
}

int SuiteReport::exit_code() const
{
    if (count(Status::Fail) > 0 || structure_failures() > 0)
        return 1;
    if (count(Status::SkippedInfeasible) > 0)
        return 2;
    return 0;
}

std::string SuiteReport::to_json(bool include_timing) const
{
    json j;
    j["schema"] = kReportSchema;
    j["filter"] = filter;
    j["summary"] = {{"claims_pass", count(Status::Pass)},
                    {"claims_fail", count(Status::Fail)},
                    {"claims_skipped", count(Status::SkippedInfeasible)},
                    {"structure_pass", static_cast<long>(structure.size()) - structure_failures()},
                    {"structure_fail", structure_failures()}};
    json cl = json::array();
    for (const auto& r : claims)
        cl.push_back(json::parse(r.to_json(include_timing)));
    j["claims"] = cl;
    json st = json::array();
    for (const auto& s : structure) {
        json e = {{"name", s.name}, {"params", params_json(s.params)}, {"pass", s.pass()}, {"checks", checks_json(s.checks)}};
        if (include_timing)
            e["millis"] = s.millis;
        st.push_back(e);
    }
    j["structure"] = st;
    j["exit_code"] = exit_code();
    if (include_timing)
        j["millis"] = millis;
    return j.dump(2);
}

Filter parse_filter(const std::string& text)
{
    Filter f;
    std::string norm = text;
    for (char& c : norm)
        if (c == ',')
            c = ' ';
    std::istringstream in(norm);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq != std::string::npos) {
            std::string key = tok.substr(0, eq);
            try {
                std::size_t used = 0;
                long v = std::stol(tok.substr(eq + 1), &used);
                require(used == tok.size() - eq - 1, ErrorKind::InvalidParameter, "");
                f.params[key] = v;
            } catch (const std::exception&) {
                fail(ErrorKind::InvalidParameter, "bad filter token '" + tok + "'");
            }
        } else if (tok == "claims") {
            f.structure = false;
        } else if (tok == "structure") {
            f.claims = false;
        } else {
            f.words.push_back(tok);
        }
    }
    return f;
}

namespace {

struct StructureItem {
    std::string name;
    std::map<std::string, long> params;
    std::function<std::vector<CheckResult>()> run;
};

std::vector<StructureItem> structure_items()
{
    std::vector<StructureItem> items;
    for (auto f : towers::all_families()) {
        const auto& spec = towers::family_spec(f);
        std::string fam = towers::family_name(f);
        items.push_back({"tower-representation-" + fam, {{"ell", spec.ell}, {"k", 1}, {"r", spec.two_r / 2}},
                         [f] { return towers::check_representation(f, 1, 300); }});
        items.push_back({"tower-valuation-" + fam, {{"ell", spec.ell}, {"r", spec.two_r / 2}},
                         [f] { return towers::check_valuation_bounds(f, 8, 40); }});
    }
    for (long ell : {5, 7})
        for (long r : {2, 3, 4, 5, 7})
            items.push_back({"hecke-structure", {{"ell", ell}, {"r", r}, {"m", 1}}, [ell, r] {
                                 return hecke::verify_hecke_structure(hecke::make_context(2 * r, ell), 1, 20).checks;
                             }});
    items.push_back({"moment-formulas", {}, [] {
                         std::vector<CheckResult> out;
                         for (const auto& f : moments::moment_formulas())
                             out.push_back(moments::check_formula(f, 300, sequences::shared_store()));
                         return out;
                     }});
    items.push_back({"quasimodular", {}, [] {
                         auto out = moments::check_theta_identities(200);
                         for (long k = 1; k <= 5; ++k)
                             out.push_back(moments::check_T_membership(k, 80));
                         for (long n = 0; n <= 3; ++n)
                             out.push_back(moments::check_theta_closure(n, 70));
                         return out;
                     }});
    return items;
}

bool word_match(const Filter& f, const std::string& name)
{
    for (const auto& w : f.words)
        if (name.find(w) == std::string::npos)
            return false;
    return true;
}

void run_parallel(std::vector<std::function<void()>>& tasks, int jobs)
{
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            tasks[i]();
    };
    if (jobs == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options)
{
    auto t0 = Clock::now();
    Filter filter = parse_filter(options.filter);
    SuiteReport report;
    report.filter = options.filter;

    struct ClaimTask {
        const catalog::CongruenceClaim* claim;
        const catalog::ClaimInstance* inst;
    };
    std::vector<ClaimTask> claim_tasks;
    if (filter.claims)
        for (const auto& c : catalog::claim_catalog())
            if (word_match(filter, c.id))
                for (const auto& inst : c.instances)
                    if (matches(filter.params, inst.params) && matches(options.overrides.select, inst.params))
                        claim_tasks.push_back({&c, &inst});

    std::vector<StructureItem> items;
    if (filter.structure)
        for (auto& it : structure_items())
            if (word_match(filter, it.name) && matches(filter.params, it.params))
                items.push_back(std::move(it));

    report.claims.resize(claim_tasks.size());
    report.structure.resize(items.size());
    std::vector<std::function<void()>> tasks;
    // Structure items first: they are the longest single tasks.
    for (std::size_t i = 0; i < items.size(); ++i)
        tasks.push_back([&, i] {
            auto s0 = Clock::now();
            StructureReport& out = report.structure[i];
            out.name = items[i].name;
            out.params = items[i].params;
            try {
                out.checks = items[i].run();
            } catch (const std::exception& e) {
                CheckResult c = make_check(items[i].name);
                note_failure(c, e.what());
                out.checks = {c};
            }
            out.millis = millis_since(s0);
        });
    for (std::size_t i = 0; i < claim_tasks.size(); ++i)
        tasks.push_back([&, i] {
            report.claims[i] = verify_instance(*claim_tasks[i].claim, *claim_tasks[i].inst, options.overrides,
                                               sequences::shared_store());
        });
    run_parallel(tasks, options.jobs);
    report.millis = millis_since(t0);
    return report;
}

int run_suite(const SuiteOptions& options, const std::string& out_path)
{
    SuiteReport report = run_suite(options);
    std::ofstream out(out_path);
    if (!out)
        return kExitUsage;
    out << report.to_json() << "\n";
    if (!out)
        return kExitUsage;
    return report.exit_code();
}

}  // namespace etaq::congruence
