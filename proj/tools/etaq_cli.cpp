// Command line front end: series, towers, Hecke checks, moment formulas,
// modular equations, rational fits and congruence verification.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "etaq/catalog.hpp"
#include "etaq/congruence.hpp"
#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/hauptmodul.hpp"
#include "etaq/hecke.hpp"
#include "etaq/moments.hpp"
#include "etaq/numtheory.hpp"
#include "etaq/sequences.hpp"
#include "etaq/towers.hpp"

using namespace etaq;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitSkipped = 2;
constexpr int kExitUsage = congruence::kExitUsage;

struct Common {
    long prec = 100;
    std::optional<long> nmax;
    std::string out;
    int jobs = 1;
    std::string format = "json";
};

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--prec", c.prec, "Number of q-series coefficients")->check(CLI::PositiveNumber);
    app->add_option("--nmax", c.nmax, "Last index of the verification window")->check(CLI::NonNegativeNumber);
    app->add_option("--out", c.out, "Write the result here instead of stdout");
    app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

// Writes text to --out or stdout; I/O failures become exit code 3.
bool emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return static_cast<bool>(std::cout);
    }
    std::ofstream f(c.out);
    f << text;
    if (!text.empty() && text.back() != '\n')
        f << '\n';
    return static_cast<bool>(f);
}

int emit_status(const Common& c, const std::string& text, int status)
{
    if (!emit(c, text)) {
        std::cerr << "etaq: cannot write " << (c.out.empty() ? "stdout" : c.out) << "\n";
        return kExitUsage;
    }
    return status;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

json checks_json(const std::vector<CheckResult>& checks)
{
    return json::parse(checks_to_json(checks));
}

std::string checks_csv(const std::vector<CheckResult>& checks)
{
    std::ostringstream s;
    s << "name,pass,checked,detail\n";
    for (const auto& c : checks)
        s << csv_quote(c.name) << ',' << (c.pass ? "true" : "false") << ',' << c.checked << ',' << csv_quote(c.detail)
          << '\n';
    return s.str();
}

std::map<std::string, long> parse_select(const std::vector<std::string>& items)
{
    std::map<std::string, long> out;
    for (const auto& it : items) {
        auto f = congruence::parse_filter(it);
        require(f.words.empty(), ErrorKind::InvalidParameter, "--select expects key=value, got '" + it + "'");
        out.insert(f.params.begin(), f.params.end());
    }
    return out;
}

std::string params_text(const std::map<std::string, long>& p)
{
    std::string s;
    for (const auto& [k, v] : p)
        s += (s.empty() ? "" : ";") + k + "=" + std::to_string(v);
    return s;
}

std::string reports_csv(const std::vector<congruence::VerificationReport>& reports)
{
    std::ostringstream s;
    s << "claim,sequence,params,exponent,n_max,checked,excluded,status,failures,first_counterexample\n";
    for (const auto& r : reports) {
        s << r.claim << ',' << r.sequence << ',' << csv_quote(params_text(r.params)) << ',' << r.exponent << ','
          << r.n_max << ',' << r.checked << ',' << r.excluded << ',' << congruence::to_string(r.status) << ','
          << r.failures << ',' << (r.counterexamples.empty() ? "" : std::to_string(r.counterexamples[0].n)) << '\n';
    }
    return s.str();
}

int reports_status(const std::vector<congruence::VerificationReport>& reports)
{
    congruence::SuiteReport agg;
    agg.claims = reports;
    return agg.exit_code();
}

// ---- subcommands ----

int run_series(const Common& c, const std::string& name)
{
    std::vector<mpq_class> values;
    const long prec = c.nmax ? *c.nmax + 1 : c.prec;
    if (sequences::is_sequence_name(name)) {
        for (long n = 0; n < prec; ++n)
            values.push_back(sequences::shared_store().value(name, n));
    } else {
        QSeries s;
        auto number = [&](std::size_t from) {
            std::size_t used = 0;
            long v = std::stol(name.substr(from), &used);
            require(used == name.size() - from, ErrorKind::InvalidParameter, "bad series name '" + name + "'");
            return v;
        };
        try {
            if (name.size() > 1 && name[0] == 'E')
                s = forms::eisenstein(number(1), prec);
            else if (name.size() > 1 && (name[0] == 'Y' || name[0] == 'Z'))
                s = forms::hauptmodul(name[0] == 'Y' ? forms::HauptmodulKind::Y : forms::HauptmodulKind::Z, number(1),
                                      prec);
            else if (name.rfind("eta^", 0) == 0)
                s = forms::euler_power(number(4), prec);
            else
                fail(ErrorKind::InvalidParameter, "unknown series '" + name + "'");
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidParameter, "bad series name '" + name + "'");
        }
        if (c.format == "json")
            return emit_status(c, s.to_json(), kExitPass);
        std::ostringstream out;
        out << "n,value\n";
        for (long n = s.valuation(); n < s.prec(); ++n)
            out << n << ',' << s.coeff(n).get_str() << '\n';
        return emit_status(c, out.str(), kExitPass);
    }
    if (c.format == "csv") {
        std::ostringstream out;
        out << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            out << n << ',' << values[n].get_str() << '\n';
        return emit_status(c, out.str(), kExitPass);
    }
    json j = {{"name", name}, {"prec", prec}};
    json arr = json::array();
    for (const auto& v : values)
        arr.push_back(v.get_str());
    j["coefficients"] = arr;
    return emit_status(c, j.dump(), kExitPass);
}

int run_tower(const Common& c, const std::string& family, long k, bool check, bool published)
{
    auto f = towers::parse_family(family);
    require(f.has_value(), ErrorKind::InvalidParameter, "unknown family '" + family + "'");
    require(k >= 1, ErrorKind::InvalidParameter, "k must be at least 1");
    towers::ATable table(*f);
    const towers::Row& row = table.row(k);
    std::vector<CheckResult> checks;
    if (check)
        checks = towers::check_representation(*f, k, c.prec);
    if (published) {
        auto more = towers::check_published_tables(*f);
        checks.insert(checks.end(), more.begin(), more.end());
    }
    int status = all_pass(checks) ? kExitPass : kExitFail;
    if (c.format == "csv") {
        std::ostringstream out;
        out << "j,a\n";
        for (const auto& [j, v] : row)
            out << j << ',' << v.get_str() << '\n';
        if (!checks.empty())
            out << '\n' << checks_csv(checks);
        return emit_status(c, out.str(), status);
    }
    json j = {{"family", towers::family_name(*f)}, {"k", k}};
    json r = json::object();
    for (const auto& [jj, v] : row)
        r[std::to_string(jj)] = v.get_str();
    j["a"] = r;
    j["polynomial"] = towers::to_laurent(row).to_string();
    if (!checks.empty())
        j["checks"] = checks_json(checks);
    return emit_status(c, j.dump(2), status);
}

int run_hecke(const Common& c, long r, long ell, long m)
{
    auto ctx = hecke::make_context(2 * r, ell);
    long valid = c.nmax.value_or(20);
    auto rep = hecke::verify_hecke_structure(ctx, m, valid);
    int status = rep.pass() ? kExitPass : kExitFail;
    if (c.format == "csv")
        return emit_status(c, checks_csv(rep.checks), status);
    return emit_status(c, rep.to_json(), status);
}

int run_moments(const Common& c, const std::string& id, bool rediscover)
{
    if (rediscover) {
        auto kind = moments::parse_moment_kind(id);
        require(kind && kind->flavor == moments::Flavor::Ordinary, ErrorKind::InvalidParameter,
                "--rediscover expects an ordinary moment such as M12 or N6");
        auto f = moments::rediscover_formula(kind->statistic, kind->order, c.prec);
        json terms = json::array();
        for (const auto& t : f.terms)
            terms.push_back({{"coeff", t.coeff.get_str()}, {"n_power", t.n_power}, {"input", t.input}, {"shift", t.shift}});
        bool same = moments::same_terms(f, moments::moment_formula(f.target));
        json j = {{"target", f.target}, {"terms", terms}, {"matches_registry", same}};
        return emit_status(c, j.dump(2), same ? kExitPass : kExitFail);
    }
    const auto& f = moments::moment_formula(id);
    long nmax = c.nmax.value_or(300);
    auto& store = sequences::shared_store();
    CheckResult check = moments::check_formula(f, nmax, store);
    int status = check.pass ? kExitPass : kExitFail;
    if (c.format == "csv") {
        std::ostringstream out;
        out << "n,formula,series\n";
        for (long n = 0; n <= nmax; ++n)
            out << n << ',' << moments::moment_formula_eval(f, n, store).get_str() << ','
                << store.value(f.target, n).get_str() << '\n';
        return emit_status(c, out.str(), status);
    }
    json values = json::array();
    for (long n = 0; n <= nmax; ++n)
        values.push_back(moments::moment_formula_eval(f, n, store).get_str());
    json j = {{"formula", f.id}, {"target", f.target}, {"n_max", nmax}, {"values", values},
              {"check", checks_json({check})[0]}};
    return emit_status(c, j.dump(), status);
}

int run_modeq(const Common& c, long ell)
{
    auto eq = hauptmodul::derive_modular_equation(ell, c.prec);
    std::vector<std::pair<long, long>> violations;
    if (ell == 13)
        violations = hauptmodul::psi13_bound_violations(eq);
    int status = violations.empty() ? kExitPass : kExitFail;
    if (c.format == "csv") {
        std::ostringstream out;
        out << "r,s,psi\n";
        for (const auto& [rs, v] : eq.psi)
            out << rs.first << ',' << rs.second << ',' << v.get_str() << '\n';
        return emit_status(c, out.str(), status);
    }
    json psi = json::array();
    for (const auto& [rs, v] : eq.psi)
        psi.push_back({{"r", rs.first}, {"s", rs.second}, {"psi", v.get_str()}});
    json j = {{"ell", ell}, {"verified_coefficients", eq.verified_coefficients}, {"psi", psi}};
    if (ell == 13)
        j["bound_violations"] = violations.size();
    return emit_status(c, j.dump(2), status);
}

int run_fit(const Common& c, long w, long ell, long max_degree)
{
    long d = numtheory::degree_d_ell(ell, w / 2);
    long prec = std::max(c.prec, 2 * (max_degree + 1) + hauptmodul::default_verification_margin(d, d, ell));
    QSeries e = forms::eisenstein(w, prec);
    QSeries el = dilate(forms::eisenstein(w, prec / ell + 2), ell).truncated(prec);
    QSeries y = forms::hauptmodul(forms::HauptmodulKind::Y, ell, prec + 1);
    auto fit = hauptmodul::discover_rational_in_Y(el, e, y, max_degree);
    if (c.format == "csv") {
        std::ostringstream out;
        out << "part,j,coeff\n";
        for (const auto& [j, v] : fit.P.terms)
            out << "P," << j << ',' << v.get_str() << '\n';
        for (const auto& [j, v] : fit.Q.terms)
            out << "Q," << j << ',' << v.get_str() << '\n';
        return emit_status(c, out.str(), kExitPass);
    }
    json j = {{"w", w},
              {"ell", ell},
              {"P", fit.P.to_string()},
              {"Q", fit.Q.to_string()},
              {"degree", fit.P.max_degree()},
              {"expected_degree", d},
              {"verified_through", fit.verified_through}};
    return emit_status(c, j.dump(2), fit.P.max_degree() == d ? kExitPass : kExitFail);
}

int run_verify(const Common& c, const std::string& id, const std::vector<std::string>& select, long delta)
{
    congruence::Overrides o;
    o.n_max = c.nmax;
    o.exponent_delta = delta;
    o.select = parse_select(select);
    auto reports = congruence::verify_congruence(catalog::find_claim(id), o);
    int status = reports_status(reports);
    if (c.format == "csv")
        return emit_status(c, reports_csv(reports), status);
    std::string text;
    for (const auto& r : reports)
        text += r.to_json() + "\n";
    return emit_status(c, text, status);
}

int run_suite_cmd(const Common& c, const std::vector<std::string>& filter, long delta)
{
    congruence::SuiteOptions o;
    for (const auto& f : filter)
        o.filter += (o.filter.empty() ? "" : " ") + f;
    o.jobs = c.jobs;
    o.overrides.n_max = c.nmax;
    o.overrides.exponent_delta = delta;
    auto rep = congruence::run_suite(o);
    int status = rep.exit_code();
    std::cerr << "claims: " << rep.count(congruence::Status::Pass) << " pass, "
              << rep.count(congruence::Status::Fail) << " fail, " << rep.count(congruence::Status::SkippedInfeasible)
              << " skipped; structure: " << rep.structure.size() - rep.structure_failures() << " pass, "
              << rep.structure_failures() << " fail\n";
    if (c.format == "csv") {
        std::string text = reports_csv(rep.claims);
        text += "\nstructure,params,pass\n";
        for (const auto& s : rep.structure)
            text += s.name + "," + csv_quote(params_text(s.params)) + "," + (s.pass() ? "true" : "false") + "\n";
        return emit_status(c, text, status);
    }
    return emit_status(c, rep.to_json(), status);
}

void list_claims()
{
    for (const auto& cl : catalog::claim_catalog())
        std::cout << cl.id << "  " << cl.statement << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact q-series computations and congruence verification"};
    app.require_subcommand(1);
    Common common;

    std::string series_name;
    auto* series = app.add_subcommand("series", "Coefficients of a named sequence or q-series (p, e4, N2, spt, E4, Y5, Z7, eta^24)");
    series->add_option("name", series_name)->required();
    add_common(series, common);

    std::string family;
    long k = 1;
    bool check = false, published = false;
    auto* tower = app.add_subcommand("tower", "Coefficients a(k, j) of a generating-function tower");
    tower->add_option("family", family, "L45, L65, L47, L67, L413 or L613")->required();
    tower->add_option("-k,--k", k, "Tower level");
    tower->add_flag("--check", check, "Check the representation against q-expansions through --prec");
    tower->add_flag("--published", published, "Compare seed rows and a(1, .) with the published tables");
    add_common(tower, common);

    long r = 2, ell = 5, m = 1;
    auto* hecke = app.add_subcommand("hecke", "Hecke operator identities for E_{2r}/eta; --nmax counts valid n");
    hecke->add_option("-r,--r", r, "Half the weight")->check(CLI::IsMember({2, 3, 4, 5, 7}));
    hecke->add_option("--ell", ell, "Prime at least 5");
    hecke->add_option("-m,--m", m, "Largest power of T_{ell^2}");
    add_common(hecke, common);

    std::string formula;
    bool rediscover = false;
    auto* mom = app.add_subcommand("moments", "Evaluate and check a moment formula (M4, N6, spt2, mu4-M4, ...)");
    mom->add_option("formula", formula)->required();
    mom->add_flag("--rediscover", rediscover, "Solve for the formula in the quasi-modular basis instead");
    add_common(mom, common);

    long mod_ell = 5;
    auto* modeq = app.add_subcommand("modeq", "Derive the modular equation of order 5, 7 or 13");
    modeq->add_option("ell", mod_ell)->required()->check(CLI::IsMember({5, 7, 13}));
    add_common(modeq, common);

    long w = 4, fit_ell = 5, max_degree = 12;
    auto* fit = app.add_subcommand("fit-rational", "Write E_w(ell tau)/E_w(tau) as P(Y)/Q(Y)");
    fit->add_option("-w,--w", w, "Weight")->check(CLI::Range(4, 16));
    fit->add_option("--ell", fit_ell)->check(CLI::IsMember({5, 7, 13}));
    fit->add_option("--max-degree", max_degree);
    add_common(fit, common);

    std::string claim;
    std::vector<std::string> select;
    long delta = 0;
    bool list = false;
    auto* verify = app.add_subcommand("verify", "Verify one catalog claim");
    verify->add_option("claim", claim);
    verify->add_option("--select", select, "Only instances with these parameters, e.g. k=2");
    verify->add_option("--exponent-delta", delta, "Added to every modulus exponent");
    verify->add_flag("--list", list, "List the catalog and exit");
    add_common(verify, common);

    std::vector<std::string> filter;
    auto* suite = app.add_subcommand("suite", "Run all claims and structural checks matching a filter");
    suite->add_option("filter", filter, "Tokens: key=value, substrings, 'claims' or 'structure'");
    suite->add_option("--exponent-delta", delta, "Added to every modulus exponent");
    add_common(suite, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (series->parsed())
            return run_series(common, series_name);
        if (tower->parsed())
            return run_tower(common, family, k, check, published);
        if (hecke->parsed())
            return run_hecke(common, r, ell, m);
        if (mom->parsed())
            return run_moments(common, formula, rediscover);
        if (modeq->parsed())
            return run_modeq(common, mod_ell);
        if (fit->parsed())
            return run_fit(common, w, fit_ell, max_degree);
        if (verify->parsed()) {
            if (list) {
                list_claims();
                return kExitPass;
            }
            require(!claim.empty(), ErrorKind::InvalidParameter, "verify needs a claim id (see --list)");
            return run_verify(common, claim, select, delta);
        }
        if (suite->parsed())
            return run_suite_cmd(common, filter, delta);
    } catch (const Error& e) {
        std::cerr << "etaq: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::InvalidParameter:
        case ErrorKind::Io:
            return kExitUsage;
        case ErrorKind::PrecisionExhausted:
            return kExitSkipped;
        default:
            return kExitFail;
        }
    }
    return kExitUsage;
}
