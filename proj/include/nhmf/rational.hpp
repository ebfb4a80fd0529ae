#pragma once

#include <gmpxx.h>

#include <string>

namespace nhmf {

/// Exact arbitrary-precision rational. All series and matrix arithmetic in
/// this library is carried out over this type; no floating point enters
/// except in the numeric evaluation helpers.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" (or "p" when the denominator is 1), sign on the numerator.
std::string rational_to_string(const Rational& r);

/// Parses the grammar  -?digits(/digits)?  with nonzero denominator.
/// Throws ParseError on anything else.
Rational parse_rational(const std::string& s);

} // namespace nhmf
