#include "etaq/qseries.hpp"

#include <algorithm>

#include "json.hpp"

#include "etaq/error.hpp"
#include "etaq/numtheory.hpp"

namespace etaq {

using numtheory::ceil_div;
using numtheory::floor_div;

namespace {

const mpz_class kZero = 0;

int check_offset(int offset24)
{
    require(offset24 >= 0 && offset24 < 24, ErrorKind::InvalidParameter, "offset24 must lie in [0, 24)");
    return offset24;
}

}  // namespace

QSeries QSeries::zero(long prec, int offset24)
{
    QSeries s;
    s.start_ = prec;
    s.prec_ = prec;
    s.offset_ = check_offset(offset24);
    return s;
}

QSeries QSeries::one(long prec) { return monomial(1, 0, prec); }

QSeries QSeries::monomial(const mpq_class& c, long n, long prec, int offset24)
{
    if (n >= prec || c == 0)
        return zero(prec, offset24);
    std::vector<mpz_class> v(static_cast<std::size_t>(prec - n));
    v[0] = c.get_num();
    return from_integers(n, std::move(v), c.get_den(), prec, offset24);
}

QSeries QSeries::from_integers(long start, std::vector<mpz_class> coeffs, long prec, int offset24)
{
    return from_integers(start, std::move(coeffs), mpz_class(1), prec, offset24);
}

QSeries QSeries::from_integers(long start, std::vector<mpz_class> coeffs, mpz_class den, long prec,
                               int offset24)
{
    require(den != 0, ErrorKind::InvalidParameter, "zero denominator");
    QSeries s;
    s.offset_ = check_offset(offset24);
    s.prec_ = prec;
    s.start_ = start;
    if (start >= prec) {
        s.start_ = prec;
        return s;
    }
    coeffs.resize(static_cast<std::size_t>(prec - start));
    s.num_ = std::move(coeffs);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

QSeries QSeries::from_rationals(long start, const std::vector<mpq_class>& coeffs, long prec, int offset24)
{
    mpz_class l = 1;
    for (const auto& c : coeffs)
        if (c != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            v[i] = coeffs[i].get_num() * (l / coeffs[i].get_den());
    return from_integers(start, std::move(v), l, prec, offset24);
}

void QSeries::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : num_)
            v = -v;
    }
    std::size_t lead = 0;
    while (lead < num_.size() && num_[lead] == 0)
        ++lead;
    if (lead == num_.size()) {
        num_.clear();
        start_ = prec_;
        den_ = 1;
        return;
    }
    if (lead > 0) {
        num_.erase(num_.begin(), num_.begin() + static_cast<long>(lead));
        start_ += static_cast<long>(lead);
    }
    if (den_ == 1)
        return;
    mpz_class g = den_;
    for (const auto& v : num_) {
        if (v != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    for (auto& v : num_)
        if (v != 0)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

const mpz_class& QSeries::raw(long n) const
{
    if (n < start_ || n >= prec_)
        return kZero;
    return num_[static_cast<std::size_t>(n - start_)];
}

mpq_class QSeries::coeff(long n) const
{
    if (n >= prec_)
        fail(ErrorKind::PrecisionExhausted,
             "coefficient " + std::to_string(n) + " requested from a series known below " + std::to_string(prec_));
    mpq_class c(raw(n), den_);
    c.canonicalize();
    return c;
}

const mpz_class& QSeries::numerator(long n) const
{
    if (n >= prec_)
        fail(ErrorKind::PrecisionExhausted,
             "coefficient " + std::to_string(n) + " requested from a series known below " + std::to_string(prec_));
    return raw(n);
}

std::vector<long> QSeries::support() const
{
    std::vector<long> s;
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0)
            s.push_back(start_ + static_cast<long>(i));
    return s;
}

std::size_t QSeries::nonzero_count() const
{
    return static_cast<std::size_t>(std::count_if(num_.begin(), num_.end(), [](const mpz_class& v) { return v != 0; }));
}

QSeries QSeries::truncated(long prec) const
{
    if (prec >= prec_)
        return *this;
    QSeries s = *this;
    s.prec_ = prec;
    if (prec <= start_) {
        s.num_.clear();
        s.start_ = prec;
        s.den_ = 1;
        return s;
    }
    s.num_.resize(static_cast<std::size_t>(prec - start_));
    s.normalize();
    return s;
}

QSeries QSeries::shifted(long k) const
{
    QSeries s = *this;
    s.start_ += k;
    s.prec_ += k;
    return s;
}

QSeries QSeries::scaled(const mpq_class& c) const
{
    if (c == 0)
        return zero(prec_, offset_);
    QSeries s = *this;
    for (auto& v : s.num_)
        v *= c.get_num();
    s.den_ *= c.get_den();
    s.normalize();
    return s;
}

QSeries QSeries::operator-() const
{
    QSeries s = *this;
    for (auto& v : s.num_)
        v = -v;
    return s;
}

namespace {

QSeries add_impl(const QSeries& a, const QSeries& b, bool subtract)
{
    require(a.offset24() == b.offset24(), ErrorKind::InvalidOperand,
            "cannot add series whose exponents differ by a non-integer");
    long prec = std::min(a.prec(), b.prec());
    long lo = std::min(a.valuation(), b.valuation());
    if (lo >= prec)
        return QSeries::zero(prec, a.offset24());
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    mpz_class fa = den / a.denominator();
    mpz_class fb = den / b.denominator();
    std::vector<mpz_class> v(static_cast<std::size_t>(prec - lo));
    for (long n = std::max(lo, a.valuation()); n < prec; ++n)
        v[static_cast<std::size_t>(n - lo)] = a.numerator(n) * fa;
    for (long n = std::max(lo, b.valuation()); n < prec; ++n) {
        auto& t = v[static_cast<std::size_t>(n - lo)];
        if (subtract)
            mpz_submul(t.get_mpz_t(), b.numerator(n).get_mpz_t(), fb.get_mpz_t());
        else
            mpz_addmul(t.get_mpz_t(), b.numerator(n).get_mpz_t(), fb.get_mpz_t());
    }
    return QSeries::from_integers(lo, std::move(v), den, prec, a.offset24());
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& other) { return *this = add_impl(*this, other, false); }

QSeries& QSeries::operator-=(const QSeries& other) { return *this = add_impl(*this, other, true); }

QSeries& QSeries::operator*=(const QSeries& other) { return *this = mul(*this, other); }

QSeries operator*(const QSeries& a, const QSeries& b)
{
    int total = a.offset_ + b.offset_;
    long carry = total >= 24 ? 1 : 0;
    int offset = total - 24 * static_cast<int>(carry);
    long va = a.start_, vb = b.start_;
    long prec = std::min(a.prec_ + vb, b.prec_ + va) + carry;
    if (a.is_zero() || b.is_zero())
        return QSeries::zero(prec, offset);
    long lo = va + vb + carry;
    if (lo >= prec)
        return QSeries::zero(prec, offset);
    // Loop over the nonzero terms of the sparser factor.
    const QSeries& outer = a.nonzero_count() <= b.nonzero_count() ? a : b;
    const QSeries& inner = &outer == &a ? b : a;
    std::vector<mpz_class> v(static_cast<std::size_t>(prec - lo));
    long inner_end = inner.start_ + static_cast<long>(inner.num_.size());
    for (std::size_t i = 0; i < outer.num_.size(); ++i) {
        const mpz_class& x = outer.num_[i];
        if (x == 0)
            continue;
        long ni = outer.start_ + static_cast<long>(i);
        long jend = std::min(inner_end, prec - carry - ni);
        for (long j = inner.start_; j < jend; ++j) {
            const mpz_class& y = inner.num_[static_cast<std::size_t>(j - inner.start_)];
            if (y != 0)
                mpz_addmul(v[static_cast<std::size_t>(ni + j + carry - lo)].get_mpz_t(), x.get_mpz_t(),
                           y.get_mpz_t());
        }
    }
    return QSeries::from_integers(lo, std::move(v), a.den_ * b.den_, prec, offset);
}

QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries div(const QSeries& a, const QSeries& b)
{
    if (b.is_zero())
        fail(ErrorKind::NotInvertible, "divisor has no known nonzero coefficient");
    long s = a.offset_ < b.offset_ ? 1 : 0;
    int offset = a.offset_ - b.offset_ + 24 * static_cast<int>(s);
    long vb = b.start_;
    long vc = a.start_ - vb - s;
    long prec = std::min(a.prec_ - vb - s, b.prec_ - vb + vc);
    if (a.is_zero() || vc >= prec)
        return QSeries::zero(a.prec_ - vb - s, offset);

    std::vector<std::pair<long, const mpz_class*>> tail;  // (k - vb, B_k) for k > vb
    for (std::size_t i = 1; i < b.num_.size(); ++i)
        if (b.num_[i] != 0)
            tail.emplace_back(static_cast<long>(i), &b.num_[i]);
    const mpz_class& lead = b.num_[0];
    std::size_t len = static_cast<std::size_t>(prec - vc);

    if (lead == 1 || lead == -1) {
        // c = (A / B) * (den_b / den_a) with A / B integral.
        std::vector<mpz_class> c(len);
        for (std::size_t n = 0; n < len; ++n) {
            mpz_class t = a.raw(vc + static_cast<long>(n) + vb + s);
            for (const auto& [k, bk] : tail) {
                if (static_cast<long>(n) < k)
                    break;
                mpz_submul(t.get_mpz_t(), bk->get_mpz_t(), c[n - static_cast<std::size_t>(k)].get_mpz_t());
            }
            if (lead < 0)
                t = -t;
            c[n] = std::move(t);
        }
        for (auto& v : c)
            v *= b.den_;
        return QSeries::from_integers(vc, std::move(c), a.den_, prec, offset);
    }

    std::vector<mpq_class> c(len);
    mpq_class blead(lead, b.den_);
    blead.canonicalize();
    for (std::size_t n = 0; n < len; ++n) {
        mpq_class t = a.coeff(vc + static_cast<long>(n) + vb + s);
        for (const auto& [k, bk] : tail) {
            if (static_cast<long>(n) < k)
                break;
            mpq_class bq(*bk, b.den_);
            bq.canonicalize();
            t -= bq * c[n - static_cast<std::size_t>(k)];
        }
        c[n] = t / blead;
    }
    return QSeries::from_rationals(vc, c, prec, offset);
}

QSeries invert(const QSeries& a)
{
    require(!a.is_zero(), ErrorKind::NotInvertible, "series has no known nonzero coefficient");
    return div(QSeries::one(a.prec() - a.valuation()), a);
}

QSeries pow_int(const QSeries& a, long k)
{
    if (k < 0)
        return pow_int(invert(a), -k);
    if (k == 0) {
        require(!a.is_zero(), ErrorKind::NotInvertible, "zeroth power of a series with unknown leading term");
        return QSeries::one(a.prec() - a.valuation());
    }
    QSeries result;
    QSeries base = a;
    bool have = false;
    while (k > 0) {
        if (k & 1) {
            result = have ? result * base : base;
            have = true;
        }
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

QSeries dilate(const QSeries& a, long d)
{
    require(d >= 1, ErrorKind::InvalidParameter, "dilation factor must be positive");
    long total = d * a.offset_;
    long shift = total / 24;
    int offset = static_cast<int>(total % 24);
    long prec = d * a.prec_ + shift;
    if (a.is_zero())
        return QSeries::zero(prec, offset);
    long lo = d * a.start_ + shift;
    std::vector<mpz_class> v(static_cast<std::size_t>(prec - lo));
    for (std::size_t i = 0; i < a.num_.size(); ++i)
        v[i * static_cast<std::size_t>(d)] = a.num_[i];
    return QSeries::from_integers(lo, std::move(v), a.den_, prec, offset);
}

QSeries theta(const QSeries& a)
{
    require(a.offset_ == 0, ErrorKind::InvalidOperand, "theta needs integral exponents");
    QSeries s = a;
    for (std::size_t i = 0; i < s.num_.size(); ++i)
        s.num_[i] *= a.start_ + static_cast<long>(i);
    s.normalize();
    return s;
}

QSeries atkin_U(const QSeries& a, long d)
{
    require(d >= 1, ErrorKind::InvalidParameter, "U_d needs d >= 1");
    require(a.offset_ == 0, ErrorKind::InvalidOperand, "U_d needs integral exponents");
    long prec = ceil_div(a.prec_, d);
    if (a.is_zero())
        return QSeries::zero(prec);
    long lo = ceil_div(a.start_, d);
    if (lo >= prec)
        return QSeries::zero(prec);
    std::vector<mpz_class> v(static_cast<std::size_t>(prec - lo));
    for (long n = lo; n < prec; ++n)
        v[static_cast<std::size_t>(n - lo)] = a.raw(d * n);
    return QSeries::from_integers(lo, std::move(v), a.den_, prec);
}

bool operator==(const QSeries& a, const QSeries& b) { return !first_difference(a, b).has_value(); }

std::optional<long> first_difference(const QSeries& a, const QSeries& b)
{
    long prec = std::min(a.prec(), b.prec());
    long lo = std::min(a.valuation(), b.valuation());
    if (a.offset24() != b.offset24()) {
        if (lo < prec)
            return lo;
        return std::nullopt;
    }
    for (long n = lo; n < prec; ++n) {
        const mpz_class& x = a.numerator(n);
        const mpz_class& y = b.numerator(n);
        if (x == 0 && y == 0)
            continue;
        if (x * b.denominator() != y * a.denominator())
            return n;
    }
    return std::nullopt;
}

bool agree_below(const QSeries& a, const QSeries& b, long n)
{
    if (n > a.prec() || n > b.prec())
        fail(ErrorKind::PrecisionExhausted, "comparison requested through index " + std::to_string(n) +
                                                " but the series are known only below " +
                                                std::to_string(std::min(a.prec(), b.prec())));
    auto d = first_difference(a.truncated(n), b.truncated(n));
    return !d.has_value();
}

std::string QSeries::to_json() const
{
    nlohmann::json j;
    j["offset24"] = offset_;
    j["prec"] = prec_;
    auto coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0)
            continue;
        mpq_class c(num_[i], den_);
        c.canonicalize();
        coeffs.push_back(nlohmann::json::array({start_ + static_cast<long>(i), c.get_str()}));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

QSeries QSeries::from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorKind::InvalidParameter, std::string("malformed series JSON: ") + e.what());
    }
    long prec = j.at("prec").get<long>();
    int offset = j.at("offset24").get<int>();
    std::vector<std::pair<long, mpq_class>> terms;
    for (const auto& t : j.at("coeffs")) {
        mpq_class c(t.at(1).get<std::string>());
        c.canonicalize();
        terms.emplace_back(t.at(0).get<long>(), c);
    }
    if (terms.empty())
        return zero(prec, offset);
    long lo = terms.front().first;
    for (const auto& t : terms)
        lo = std::min(lo, t.first);
    require(lo < prec, ErrorKind::InvalidParameter, "series JSON has a coefficient beyond its precision");
    std::vector<mpq_class> v(static_cast<std::size_t>(prec - lo));
    for (const auto& [n, c] : terms) {
        require(n < prec, ErrorKind::InvalidParameter, "series JSON has a coefficient beyond its precision");
        v[static_cast<std::size_t>(n - lo)] = c;
    }
    return from_rationals(lo, v, prec, offset);
}

}  // namespace etaq
