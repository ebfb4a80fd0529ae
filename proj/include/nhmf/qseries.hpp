#pragma once

#include "nhmf/rational.hpp"

#include <vector>

namespace nhmf {

/// Truncated q-expansion with exact rational coefficients. Coefficients are
/// known for exponents 0..truncation(); arithmetic truncates to the shorter
/// operand. Immutable after construction.
class QSeries {
  public:
    /// Zero series with the given truncation.
    explicit QSeries(long truncation);
    /// Takes ownership of a full coefficient vector (size truncation+1).
    QSeries(long truncation, std::vector<Rational> coeffs);

    static QSeries constant(const Rational& c, long truncation);

    long truncation() const { return trunc_; }
    const Rational& coeff(long n) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;

    /// Restriction to exponents 0..n (n <= truncation).
    QSeries truncated(long n) const;

    /// q d/dq: multiplies the n-th coefficient by n.
    QSeries derivative() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& a);
    friend QSeries operator-(const QSeries& a);

    /// Strict data equality: same truncation and identical coefficients.
    bool operator==(const QSeries& o) const = default;

  private:
    long trunc_;
    std::vector<Rational> c_; // c_[n] is the coefficient of q^n
};

/// Divisor power sum sigma_r(n) = sum_{d|n} d^r. Requires n >= 1.
Integer divisor_sigma(long n, long r);

} // namespace nhmf
