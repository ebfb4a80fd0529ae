#include "nhmf/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace nhmf {

QSeries::QSeries(long truncation) : trunc_(truncation) {
    if (truncation < 0)
        throw std::invalid_argument("QSeries truncation must be >= 0");
    c_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

QSeries::QSeries(long truncation, std::vector<Rational> coeffs) : trunc_(truncation), c_(std::move(coeffs)) {
    if (truncation < 0)
        throw std::invalid_argument("QSeries truncation must be >= 0");
    if (c_.size() != static_cast<std::size_t>(truncation) + 1)
        throw std::invalid_argument("QSeries coefficient count does not match truncation");
}

QSeries QSeries::constant(const Rational& value, long truncation) {
    QSeries s(truncation);
    s.c_[0] = value;
    return s;
}

const Rational& QSeries::coeff(long n) const {
    if (n < 0 || n > trunc_)
        throw std::out_of_range("QSeries coefficient index out of range");
    return c_[static_cast<std::size_t>(n)];
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

QSeries QSeries::truncated(long n) const {
    if (n < 0 || n > trunc_)
        throw std::invalid_argument("cannot extend a QSeries by truncation");
    QSeries out(n);
    std::copy(c_.begin(), c_.begin() + n + 1, out.c_.begin());
    return out;
}

QSeries QSeries::derivative() const {
    QSeries out(trunc_);
    for (long n = 1; n <= trunc_; ++n)
        out.c_[static_cast<std::size_t>(n)] = Rational(n) * c_[static_cast<std::size_t>(n)];
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long t = std::min(a.trunc_, b.trunc_);
    QSeries out(t);
    for (long n = 0; n <= t; ++n)
        out.c_[static_cast<std::size_t>(n)] = a.c_[static_cast<std::size_t>(n)] + b.c_[static_cast<std::size_t>(n)];
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    long t = std::min(a.trunc_, b.trunc_);
    QSeries out(t);
    for (long n = 0; n <= t; ++n)
        out.c_[static_cast<std::size_t>(n)] = a.c_[static_cast<std::size_t>(n)] - b.c_[static_cast<std::size_t>(n)];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    long t = std::min(a.trunc_, b.trunc_);
    QSeries out(t);
    for (long n = 0; n <= t; ++n) {
        Rational acc(0);
        for (long m = 0; m <= n; ++m)
            acc += a.c_[static_cast<std::size_t>(m)] * b.c_[static_cast<std::size_t>(n - m)];
        out.c_[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

QSeries operator*(const Rational& s, const QSeries& a) {
    QSeries out(a.trunc_);
    for (long n = 0; n <= a.trunc_; ++n)
        out.c_[static_cast<std::size_t>(n)] = s * a.c_[static_cast<std::size_t>(n)];
    return out;
}

QSeries operator-(const QSeries& a) {
    return Rational(-1) * a;
}

Integer divisor_sigma(long n, long r) {
    if (n <= 0)
        throw std::invalid_argument("divisor_sigma requires n >= 1");
    Integer total(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
        total += p;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(r));
            total += p;
        }
    }
    return total;
}

} // namespace nhmf
