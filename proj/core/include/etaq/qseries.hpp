#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etaq {

// Truncated series sum_n c_n q^{n + offset24/24}.
//
// Every coefficient with index below prec() is known (indices below start()
// are known to be zero); nothing is known at or beyond prec(). The fractional
// part of the exponent is kept normalized to offset24() in [0, 24). The
// coefficients share one positive denominator so the arithmetic runs on
// integers.
class QSeries {
public:
    QSeries() = default;

    static QSeries zero(long prec, int offset24 = 0);
    static QSeries one(long prec);
    static QSeries monomial(const mpq_class& c, long n, long prec, int offset24 = 0);
    // coeffs[i] is the coefficient of index start + i; indices in
    // [start + coeffs.size(), prec) are zero and anything past prec is dropped.
    static QSeries from_integers(long start, std::vector<mpz_class> coeffs, long prec, int offset24 = 0);
    static QSeries from_integers(long start, std::vector<mpz_class> coeffs, mpz_class den, long prec,
                                 int offset24 = 0);
    static QSeries from_rationals(long start, const std::vector<mpq_class>& coeffs, long prec,
                                  int offset24 = 0);

    int offset24() const { return offset_; }
    long prec() const { return prec_; }
    // First index that may be nonzero; equals prec() when the series is zero
    // as far as it is known.
    long valuation() const { return start_; }
    bool is_zero() const { return num_.empty(); }
    // 24 * (exponent of the first nonzero term).
    long leading_exponent24() const { return 24 * start_ + offset_; }
    bool is_integral() const { return den_ == 1; }

    mpq_class coeff(long n) const;
    // Numerator of coefficient n over denominator(); n must be below prec().
    const mpz_class& numerator(long n) const;
    const mpz_class& denominator() const { return den_; }
    // Nonzero indices in increasing order.
    std::vector<long> support() const;
    std::size_t nonzero_count() const;

    QSeries truncated(long prec) const;
    // Multiplies by q^k.
    QSeries shifted(long k) const;
    QSeries scaled(const mpq_class& c) const;
    QSeries operator-() const;

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries& operator*=(const QSeries& other);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const mpq_class& c, const QSeries& a) { return a.scaled(c); }
    friend QSeries div(const QSeries& a, const QSeries& b);
    friend QSeries dilate(const QSeries& a, long d);
    friend QSeries theta(const QSeries& a);
    friend QSeries atkin_U(const QSeries& a, long d);

    // Equal offsets and equal coefficients below the common precision.
    friend bool operator==(const QSeries& a, const QSeries& b);

    std::string to_json() const;
    static QSeries from_json(const std::string& text);

private:
    const mpz_class& raw(long n) const;
    void normalize();

    long start_ = 0;
    long prec_ = 0;
    int offset_ = 0;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

QSeries mul(const QSeries& a, const QSeries& b);
QSeries div(const QSeries& a, const QSeries& b);
QSeries invert(const QSeries& a);
QSeries pow_int(const QSeries& a, long k);
QSeries dilate(const QSeries& a, long d);
QSeries theta(const QSeries& a);
QSeries atkin_U(const QSeries& a, long d);

// First index below the common precision where a and b differ.
std::optional<long> first_difference(const QSeries& a, const QSeries& b);
// True when a and b agree at every index below n; n beyond either precision
// is a precision-exhausted error rather than a mismatch.
bool agree_below(const QSeries& a, const QSeries& b, long n);

}  // namespace etaq
