#include "etaq/moments.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "etaq/combination.hpp"
#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/numtheory.hpp"
#include "etaq/sequences.hpp"

namespace etaq::moments {

using numtheory::binomial;
using numtheory::ipow;

namespace {

void require_order(long order)
{
    require(order >= 2 && order % 2 == 0, ErrorKind::InvalidParameter,
            "moment order must be even and at least 2, got " + std::to_string(order));
}

// Exponent of the n-th term: n(3n-1)/2 for ranks, n(n-1)/2 for cranks.
long base_exponent(Statistic s, long n) { return s == Statistic::Rank ? n * (3 * n - 1) / 2 : n * (n - 1) / 2; }

QSeries partition_series(long prec) { return forms::euler_power(-1, prec); }

QSeries apply_theta(QSeries s, long times)
{
    for (long i = 0; i < times; ++i)
        s = theta(s);
    return s;
}

}  // namespace

std::string MomentKind::name() const
{
    std::string prefix;
    if (flavor == Flavor::Ordinary)
        prefix = statistic == Statistic::Rank ? "N" : "M";
    else
        prefix = statistic == Statistic::Rank ? "eta" : "mu";
    return prefix + std::to_string(order);
}

std::optional<MomentKind> parse_moment_kind(const std::string& name)
{
    static const std::pair<const char*, MomentKind> prefixes[] = {
        {"eta", {Statistic::Rank, Flavor::Symmetrized, 0}},
        {"mu", {Statistic::Crank, Flavor::Symmetrized, 0}},
        {"N", {Statistic::Rank, Flavor::Ordinary, 0}},
        {"M", {Statistic::Crank, Flavor::Ordinary, 0}},
    };
    for (const auto& [prefix, kind] : prefixes) {
        std::string p = prefix;
        if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0)
            continue;
        std::string digits = name.substr(p.size());
        if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return std::nullopt;
        long order = std::stol(digits);
        if (order < 2 || order % 2 != 0)
            return std::nullopt;
        MomentKind k = kind;
        k.order = order;
        return k;
    }
    return std::nullopt;
}

std::vector<mpz_class> moment_kernel(const MomentKind& kind, long len)
{
    require_order(kind.order);
    std::vector<mpz_class> out(static_cast<std::size_t>(std::max(len, 0L)));
    auto add = [&](long idx, const mpz_class& v) {
        if (idx < len)
            out[static_cast<std::size_t>(idx)] += v;
    };
    long half = kind.order / 2;
    for (long n = 1; base_exponent(kind.statistic, n) < len; ++n) {
        long e = base_exponent(kind.statistic, n);
        int sign = n % 2 == 1 ? 1 : -1;
        if (kind.flavor == Flavor::Ordinary) {
            // 2 (-1)^{n+1} q^e (1 - q^n) sum_m m^{2k} q^{nm}
            for (long m = 1; e + n * m < len; ++m) {
                mpz_class v = 2 * sign * ipow(m, static_cast<unsigned long>(kind.order));
                add(e + n * m, v);
                add(e + n * m + n, -v);
            }
        } else {
            // (-1)^{n-1} (1 + q^n) q^{e + kn} sum_m C(m + 2k - 1, 2k - 1) q^{nm}
            long base = e + half * n;
            mpz_class b = 1;
            for (long m = 0; base + n * m < len; ++m) {
                if (m > 0) {
                    b *= m + kind.order - 1;
                    b /= m;
                }
                mpz_class v = sign * b;
                add(base + n * m, v);
                add(base + n * m + n, v);
            }
        }
    }
    return out;
}

QSeries moment_series(Statistic s, long order, long prec)
{
    auto k = moment_kernel({s, Flavor::Ordinary, order}, prec);
    return QSeries::from_integers(0, std::move(k), prec) * partition_series(prec);
}

QSeries symmetrized_series(Statistic s, long order, long prec)
{
    auto k = moment_kernel({s, Flavor::Symmetrized, order}, prec);
    return QSeries::from_integers(0, std::move(k), prec) * partition_series(prec);
}

std::vector<mpz_class> spt_sequence(long k, long count)
{
    require(k >= 1, ErrorKind::InvalidParameter, "spt_k needs k >= 1");
    QSeries d = symmetrized_series(Statistic::Crank, 2 * k, count) - symmetrized_series(Statistic::Rank, 2 * k, count);
    std::vector<mpz_class> out;
    for (long n = 0; n < count; ++n) {
        mpq_class c = d.coeff(n);
        require(c.get_den() == 1 && c >= 0, ErrorKind::InternalInconsistency,
                "spt_" + std::to_string(k) + "(" + std::to_string(n) + ") = " + c.get_str() +
                    " is not a nonnegative integer");
        out.push_back(c.get_num());
    }
    return out;
}

// ---- formulas ----

std::vector<FormulaTerm> parse_formula_terms(const std::string& text)
{
    std::istringstream in(text);
    std::vector<FormulaTerm> terms;
    FormulaTerm cur;
    cur.coeff = 1;
    int sign = 1;
    bool open = false;  // a coefficient or power of n has been read
    std::string tok;
    auto bad = [&](const std::string& why) { fail(ErrorKind::InvalidParameter, "formula '" + text + "': " + why); };
    while (in >> tok) {
        if (tok == "+" || tok == "-") {
            if (open)
                bad("dangling term before '" + tok + "'");
            sign = tok == "+" ? 1 : -1;
            continue;
        }
        if ((tok[0] >= '0' && tok[0] <= '9') || tok[0] == '-') {
            if (open)
                bad("two coefficients in one term");
            mpq_class c;
            if (c.set_str(tok, 10) != 0)
                bad("bad coefficient '" + tok + "'");
            c.canonicalize();
            cur.coeff = c;
            open = true;
            continue;
        }
        if (tok == "n" || tok.rfind("n^", 0) == 0) {
            cur.n_power = tok == "n" ? 1 : std::stol(tok.substr(2));
            open = true;
            continue;
        }
        std::string name = tok;
        auto paren = tok.find('(');
        if (paren != std::string::npos) {
            name = tok.substr(0, paren);
            std::string arg = tok.substr(paren);
            if (arg == "(n)")
                cur.shift = 0;
            else if (arg.size() > 4 && arg.compare(0, 3, "(n-") == 0 && arg.back() == ')')
                cur.shift = std::stol(arg.substr(3, arg.size() - 4));
            else
                bad("bad argument '" + arg + "'");
        }
        if (!sequences::is_sequence_name(name))
            bad("unknown sequence '" + name + "'");
        cur.input = name;
        cur.coeff *= sign;
        terms.push_back(cur);
        cur = FormulaTerm{};
        cur.coeff = 1;
        sign = 1;
        open = false;
    }
    if (open)
        bad("trailing coefficient");
    return terms;
}

mpq_class moment_formula_eval(const MomentFormula& f, long n, sequences::SequenceStore& store)
{
    mpq_class sum = 0;
    for (const auto& t : f.terms) {
        mpq_class v = store.value(t.input, n - t.shift);
        if (v == 0)
            continue;
        sum += t.coeff * mpq_class(ipow(n, static_cast<unsigned long>(t.n_power))) * v;
    }
    return sum;
}

mpq_class moment_formula_eval(const std::string& id, long n)
{
    return moment_formula_eval(moment_formula(id), n, sequences::shared_store());
}

CheckResult check_formula(const MomentFormula& f, long nmax, sequences::SequenceStore& store)
{
    CheckResult c = make_check("formula " + f.id);
    for (long n = 0; n <= nmax; ++n) {
        mpq_class expected = store.value(f.target, n);
        mpq_class got = moment_formula_eval(f, n, store);
        ++c.checked;
        if (got != expected)
            note_failure(c, "n = " + std::to_string(n) + ": formula gives " + got.get_str() + ", " + f.target +
                                " = " + expected.get_str());
    }
    if (c.pass)
        c.detail = f.target + " for 0 <= n <= " + std::to_string(nmax);
    return c;
}

// ---- quasi-modular forms ----

std::vector<std::array<long, 3>> quasimodular_monomials(long n)
{
    std::vector<std::array<long, 3>> out;
    for (long w = 0; w <= n; ++w)
        for (long a = w; a >= 0; --a)
            for (long b = 0; a + 2 * b <= w; ++b) {
                long rest = w - a - 2 * b;
                if (rest % 3 == 0)
                    out.push_back({a, b, rest / 3});
            }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        long wx = x[0] + 2 * x[1] + 3 * x[2], wy = y[0] + 2 * y[1] + 3 * y[2];
        return std::tie(wx, x) < std::tie(wy, y);
    });
    return out;
}

std::string BasisElement::label() const
{
    auto th = [this](const std::string& inner) {
        if (j == 0)
            return inner;
        return (j == 1 ? std::string("Theta(") : "Theta^" + std::to_string(j) + "(") + inner + ")";
    };
    switch (kind) {
    case Kind::ThetaPE:
        return th(k == 0 ? "P" : "P*E" + std::to_string(2 * k));
    case Kind::PMonomial: {
        std::string s = "P";
        const char* names[] = {"E2", "E4", "E6"};
        for (int i = 0; i < 3; ++i)
            if (abc[static_cast<std::size_t>(i)] > 0)
                s += std::string("*") + names[i] +
                     (abc[static_cast<std::size_t>(i)] > 1 ? "^" + std::to_string(abc[static_cast<std::size_t>(i)]) : "");
        return s;
    }
    case Kind::ThetaPDelta:
        return th("P*Delta");
    case Kind::ThetaR2:
        return th("R2");
    }
    return "?";
}

std::optional<FormulaTerm> BasisElement::as_term() const
{
    FormulaTerm t;
    t.coeff = 1;
    t.n_power = j;
    switch (kind) {
    case Kind::ThetaPE:
        t.input = k == 0 ? "p" : "e" + std::to_string(2 * k);
        return t;
    case Kind::ThetaPDelta:
        t.input = "p23";
        t.shift = 1;
        return t;
    case Kind::ThetaR2:
        t.input = "N2";
        return t;
    case Kind::PMonomial:
        break;
    }
    return std::nullopt;
}

QSeries BasisElement::series(long prec) const
{
    switch (kind) {
    case Kind::ThetaPE: {
        QSeries s = partition_series(prec);
        if (k > 0)
            s = s * forms::eisenstein(2 * k, prec);
        return apply_theta(s, j);
    }
    case Kind::PMonomial: {
        QSeries s = partition_series(prec);
        const long w[] = {2, 4, 6};
        for (int i = 0; i < 3; ++i)
            if (abc[static_cast<std::size_t>(i)] > 0)
                s = s * pow_int(forms::eisenstein(w[i], prec), abc[static_cast<std::size_t>(i)]);
        return s;
    }
    case Kind::ThetaPDelta:
        return apply_theta(forms::euler_power(23, prec).shifted(1).truncated(prec), j);
    case Kind::ThetaR2:
        return apply_theta(moment_series(Statistic::Rank, 2, prec), j);
    }
    return QSeries::zero(prec);
}

QuasiModularBasis monomial_basis(long n)
{
    require(n >= 0, ErrorKind::InvalidParameter, "weight bound must be nonnegative");
    QuasiModularBasis b;
    b.n = n;
    b.monomials = quasimodular_monomials(n);
    for (const auto& m : b.monomials) {
        BasisElement e{BasisElement::Kind::PMonomial};
        e.abc = m;
        b.elements.push_back(e);
    }
    return b;
}

QuasiModularBasis moment_basis(long n, Statistic s)
{
    require(n >= 1, ErrorKind::InvalidParameter, "moment basis needs n >= 1");
    QuasiModularBasis b;
    b.n = n;
    b.monomials = quasimodular_monomials(n);
    auto add = [&](BasisElement::Kind kind, long j, long k) {
        BasisElement e{kind};
        e.j = j;
        e.k = k;
        b.elements.push_back(e);
    };
    for (long k = n; k >= 2; --k)
        for (long j = 0; j <= n - k; ++j)
            add(BasisElement::Kind::ThetaPE, j, k);
    for (long j = 0; j <= n; ++j)
        add(BasisElement::Kind::ThetaPE, j, 0);
    for (long j = 0; j <= n - 6; ++j)
        add(BasisElement::Kind::ThetaPDelta, j, 0);
    if (s == Statistic::Rank)
        for (long i = 0; i < n; ++i)
            add(BasisElement::Kind::ThetaR2, i, 0);
    return b;
}

std::vector<mpq_class> quasimodular_solve(const QSeries& target, const QuasiModularBasis& basis, long prec)
{
    constexpr long kMargin = 20;
    long need = static_cast<long>(basis.elements.size()) + kMargin;
    require(prec >= need && target.prec() >= prec, ErrorKind::PrecisionExhausted,
            "quasi-modular solve needs " + std::to_string(need) + " coefficients, have " +
                std::to_string(std::min(prec, target.prec())));
    std::vector<QSeries> series;
    for (const auto& e : basis.elements)
        series.push_back(e.series(prec));
    return solve_series_combination(series, target.truncated(prec), kMargin).coeffs;
}

MomentFormula rediscover_formula(Statistic s, long order, long prec)
{
    require_order(order);
    QuasiModularBasis basis = moment_basis(order / 2, s);
    auto coeffs = quasimodular_solve(moment_series(s, order, prec), basis, prec);
    MomentFormula f;
    f.target = MomentKind{s, Flavor::Ordinary, order}.name();
    f.id = f.target + "-solved";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        FormulaTerm t = *basis.elements[i].as_term();
        t.coeff = coeffs[i];
        f.terms.push_back(t);
    }
    return f;
}

bool same_terms(const MomentFormula& a, const MomentFormula& b)
{
    using Key = std::tuple<std::string, long, long>;
    auto collect = [](const MomentFormula& f) {
        std::map<Key, mpq_class> m;
        for (const auto& t : f.terms)
            m[{t.input, t.shift, t.n_power}] += t.coeff;
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
        return m;
    };
    return a.target == b.target && collect(a) == collect(b);
}

QSeries T_series(long k, long prec)
{
    require(k >= 1, ErrorKind::InvalidParameter, "T_k needs k >= 1");
    std::vector<QSeries> R(static_cast<std::size_t>(k + 1));
    for (long i = 1; i <= k; ++i)
        R[static_cast<std::size_t>(i)] = moment_series(Statistic::Rank, 2 * i, prec);
    auto Rk = [&](long i) -> const QSeries& { return R[static_cast<std::size_t>(i)]; };
    QSeries t = Rk(k).scaled((2 * k - 1) * (k - 1));
    for (long i = 1; i <= k - 1; ++i) {
        mpz_class two = ipow(2, static_cast<unsigned long>(2 * i - 1));
        mpq_class a = 6 * binomial(2 * k, 2 * i) * (two - 1);
        mpq_class b = binomial(2 * k, 2 * i + 2) * (ipow(2, static_cast<unsigned long>(2 * i + 1)) - 1) -
                      ipow(2, static_cast<unsigned long>(2 * i)) * binomial(2 * k, 2 * i + 1) + binomial(2 * k, 2 * i);
        t += theta(Rk(k - i)).scaled(a);
        t += Rk(k - i).scaled(b);
    }
    return t;
}

std::vector<CheckResult> check_theta_identities(long prec)
{
    QSeries e2 = forms::eisenstein(2, prec), e4 = forms::eisenstein(4, prec), e6 = forms::eisenstein(6, prec);
    QSeries P = partition_series(prec);
    std::vector<CheckResult> out;
    auto check = [&](const std::string& name, const QSeries& lhs, const QSeries& rhs) {
        CheckResult c = make_check(name);
        c.checked = prec;
        if (auto d = first_difference(lhs, rhs))
            note_failure(c, "first difference at q^" + std::to_string(*d));
        out.push_back(c);
    };
    check("theta-E2", theta(e2), (e2 * e2 - e4).scaled(mpq_class(1, 12)));
    check("theta-E4", theta(e4), (e2 * e4 - e6).scaled(mpq_class(1, 3)));
    check("theta-E6", theta(e6), (e2 * e6 - e4 * e4).scaled(mpq_class(1, 2)));
    check("theta-P", theta(P), (P - P * e2).scaled(mpq_class(1, 24)));
    return out;
}

CheckResult check_theta_closure(long n, long prec)
{
    CheckResult c = make_check("theta-closure-" + std::to_string(2 * n));
    QuasiModularBasis target_basis = monomial_basis(n);
    QuasiModularBasis bigger = monomial_basis(n + 1);
    for (const auto& e : target_basis.elements) {
        try {
            quasimodular_solve(theta(e.series(prec)), bigger, prec);
            ++c.checked;
        } catch (const Error& err) {
            note_failure(c, "Theta(" + e.label() + "): " + err.what());
        }
    }
    return c;
}

CheckResult check_T_membership(long k, long prec)
{
    CheckResult c = make_check("T" + std::to_string(k) + "-in-PM" + std::to_string(2 * k));
    try {
        auto coeffs = quasimodular_solve(T_series(k, prec), monomial_basis(k), prec);
        c.checked = prec;
        c.detail = "solved in the " + std::to_string(coeffs.size()) + "-element basis";
    } catch (const Error& err) {
        note_failure(c, err.what());
    }
    return c;
}

}  // namespace etaq::moments
