#include "etaq/linalg.hpp"

#include "etaq/error.hpp"

namespace etaq::linalg {

namespace {

void remove_content(std::vector<mpz_class>& row)
{
    mpz_class g = 0;
    for (const auto& v : row) {
        if (v != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& v : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target <- (p[c]/g) target - (target[c]/g) p, which zeroes target[c].
void eliminate(std::vector<mpz_class>& target, const std::vector<mpz_class>& p, std::size_t c)
{
    if (target[c] == 0)
        return;
    mpz_class g = gcd(p[c], target[c]);
    mpz_class a = p[c] / g;
    mpz_class b = target[c] / g;
    for (std::size_t j = 0; j < target.size(); ++j) {
        target[j] *= a;
        if (p[j] != 0)
            mpz_submul(target[j].get_mpz_t(), b.get_mpz_t(), p[j].get_mpz_t());
    }
    remove_content(target);
}

}  // namespace

FractionFreeEliminator::FractionFreeEliminator(std::size_t ncols) : ncols_(ncols) {}

bool FractionFreeEliminator::add_row(std::vector<mpz_class> row)
{
    require(row.size() == ncols_, ErrorKind::InvalidOperand, "row length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        eliminate(row, rows_[i], pivots_[i]);
    std::size_t c = 0;
    while (c < ncols_ && row[c] == 0)
        ++c;
    if (c == ncols_)
        return false;
    remove_content(row);
    if (row[c] < 0)
        for (auto& v : row)
            v = -v;
    for (auto& r : rows_)
        eliminate(r, row, c);
    rows_.push_back(std::move(row));
    pivots_.push_back(c);
    return true;
}

bool FractionFreeEliminator::add_row(const std::vector<mpq_class>& row)
{
    mpz_class l = 1;
    for (const auto& v : row)
        if (v != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> z(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0)
            z[j] = row[j].get_num() * (l / row[j].get_den());
    return add_row(std::move(z));
}

std::vector<std::vector<mpq_class>> FractionFreeEliminator::kernel() const
{
    std::vector<bool> is_pivot(ncols_, false);
    for (auto c : pivots_)
        is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<mpq_class> x(ncols_, mpq_class(0));
        x[f] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& r = rows_[i];
            if (r[f] == 0)
                continue;
            mpq_class v(-r[f], r[pivots_[i]]);
            v.canonicalize();
            x[pivots_[i]] = v;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<mpq_class> solve_unique(const std::vector<std::vector<mpq_class>>& a,
                                    const std::vector<mpq_class>& b)
{
    require(a.size() == b.size(), ErrorKind::InvalidOperand, "system shape mismatch");
    std::size_t n = a.empty() ? 0 : a.front().size();
    FractionFreeEliminator el(n + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<mpq_class> row = a[i];
        row.push_back(-b[i]);
        el.add_row(row);
    }
    auto ker = el.kernel();
    const std::vector<mpq_class>* sol = nullptr;
    for (const auto& k : ker)
        if (k[n] != 0)
            sol = &k;
    if (!sol)
        fail(ErrorKind::NoSolution, "linear system is inconsistent");
    if (ker.size() > 1)
        fail(ErrorKind::AmbiguousSolution, "linear system has a " + std::to_string(ker.size() - 1) +
                                               "-dimensional family of solutions");
    std::vector<mpq_class> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = (*sol)[j] / (*sol)[n];
        x[j].canonicalize();
    }
    return x;
}

}  // namespace etaq::linalg
