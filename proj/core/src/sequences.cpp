#include "etaq/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "etaq/error.hpp"
#include "etaq/forms.hpp"
#include "etaq/moments.hpp"

namespace etaq::sequences {

namespace {

std::optional<long> trailing_number(const std::string& name, const std::string& prefix)
{
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    std::string digits = name.substr(prefix.size());
    if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        return std::nullopt;
    return std::stol(digits);
}

struct Parsed {
    enum class Kind { P, EtaPower, Eisenstein, Moment, Spt } kind;
    long param = 0;
    moments::MomentKind moment{moments::Statistic::Rank, moments::Flavor::Ordinary, 2};
};

std::optional<Parsed> parse(const std::string& name)
{
    if (name == "p")
        return Parsed{Parsed::Kind::P};
    if (name == "spt")
        return Parsed{Parsed::Kind::Spt, 1};
    if (auto k = trailing_number(name, "spt"); k && *k >= 1)
        return Parsed{Parsed::Kind::Spt, *k};
    if (auto k = trailing_number(name, "p"); k && *k >= 1)
        return Parsed{Parsed::Kind::EtaPower, *k};
    if (auto w = trailing_number(name, "e"); w && *w >= 2 && *w % 2 == 0)
        return Parsed{Parsed::Kind::Eisenstein, *w};
    if (auto m = moments::parse_moment_kind(name)) {
        Parsed r{Parsed::Kind::Moment};
        r.moment = *m;
        return r;
    }
    return std::nullopt;
}

}  // namespace

bool is_sequence_name(const std::string& name) { return parse(name).has_value(); }

std::vector<std::string> example_sequence_names()
{
    return {"p", "p23", "e4", "e6", "e14", "N2", "M4", "eta6", "mu4", "spt", "spt2", "spt3"};
}

std::shared_ptr<const std::vector<mpz_class>> SequenceStore::partitions(long len)
{
    std::lock_guard<std::mutex> lock(mu_);
    if (!p_ || static_cast<long>(p_->size()) < len) {
        long size = std::max(len, p_ ? 2 * static_cast<long>(p_->size()) : 64L);
        p_ = std::make_shared<const std::vector<mpz_class>>(forms::partition_power(1, size));
    }
    return p_;
}

std::shared_ptr<const SequenceStore::Kernel> SequenceStore::kernel(const std::string& name, long len)
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = kernels_.find(name);
        if (it != kernels_.end() && static_cast<long>(it->second->num.size()) >= len)
            return it->second;
        if (it != kernels_.end())
            len = std::max(len, 2 * static_cast<long>(it->second->num.size()));
    }
    len = std::max(len, 64L);
    auto parsed = parse(name);
    require(parsed.has_value(), ErrorKind::InvalidParameter, "unknown sequence '" + name + "'");

    auto k = std::make_shared<Kernel>();
    switch (parsed->kind) {
    case Parsed::Kind::P:
        k->num.assign(static_cast<std::size_t>(len), 0);
        k->num[0] = 1;
        break;
    case Parsed::Kind::EtaPower: {
        QSeries s = forms::euler_power(parsed->param, len);
        k->convolve = false;
        for (long n = 0; n < len; ++n)
            k->num.push_back(s.numerator(n));
        break;
    }
    case Parsed::Kind::Eisenstein: {
        QSeries s = forms::eisenstein(parsed->param, len);
        k->den = s.denominator();
        for (long n = 0; n < len; ++n)
            k->num.push_back(s.numerator(n));
        break;
    }
    case Parsed::Kind::Moment:
        k->num = moments::moment_kernel(parsed->moment, len);
        break;
    case Parsed::Kind::Spt: {
        long order = 2 * parsed->param;
        auto mu = moments::moment_kernel({moments::Statistic::Crank, moments::Flavor::Symmetrized, order}, len);
        auto eta = moments::moment_kernel({moments::Statistic::Rank, moments::Flavor::Symmetrized, order}, len);
        k->num.resize(static_cast<std::size_t>(len));
        for (long n = 0; n < len; ++n)
            k->num[static_cast<std::size_t>(n)] = mu[static_cast<std::size_t>(n)] - eta[static_cast<std::size_t>(n)];
        break;
    }
    }

    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = kernels_[name];
    if (!slot || slot->num.size() < k->num.size())
        slot = k;
    return slot;
}

mpq_class SequenceStore::value(const std::string& name, long n)
{
    if (n < 0) {
        require(is_sequence_name(name), ErrorKind::InvalidParameter, "unknown sequence '" + name + "'");
        return 0;
    }
    require(max_index_ < 0 || n <= max_index_, ErrorKind::PrecisionExhausted,
            name + "(" + std::to_string(n) + ") is beyond the index budget " + std::to_string(max_index_));
    auto k = kernel(name, n + 1);
    if (!k->convolve)
        return mpq_class(k->num[static_cast<std::size_t>(n)]);
    auto p = partitions(n + 1);
    mpz_class sum = 0;
    for (long j = 0; j <= n; ++j) {
        const mpz_class& c = k->num[static_cast<std::size_t>(j)];
        if (c != 0)
            sum += c * (*p)[static_cast<std::size_t>(n - j)];
    }
    mpq_class r(sum, k->den);
    r.canonicalize();
    return r;
}

std::vector<mpq_class> SequenceStore::values(const std::string& name, long count)
{
    std::vector<mpq_class> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
    for (long n = 0; n < count; ++n)
        out.push_back(value(name, n));
    return out;
}

SequenceStore& shared_store()
{
    static SequenceStore store;
    return store;
}

}  // namespace etaq::sequences
