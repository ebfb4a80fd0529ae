#include "nhmf/nearly.hpp"

#include "nhmf/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nhmf {

MoebiusElement::MoebiusElement(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1)
        throw DomainError("Moebius element must have determinant 1");
}

MoebiusElement MoebiusElement::operator*(const MoebiusElement& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::complex<double> MoebiusElement::apply(std::complex<double> tau) const {
    return (static_cast<double>(a) * tau + static_cast<double>(b)) /
           (static_cast<double>(c) * tau + static_cast<double>(d));
}

namespace {

std::vector<QSeries> trim_trailing_zeros(std::vector<QSeries> v) {
    while (!v.empty() && v.back().is_zero())
        v.pop_back();
    return v;
}

} // namespace

NearlyForm::NearlyForm(int weight, long truncation) : weight_(weight), trunc_(truncation) {
    if (truncation < 0)
        throw std::invalid_argument("NearlyForm truncation must be >= 0");
}

NearlyForm::NearlyForm(int weight, long truncation, std::vector<QSeries> x_coeffs)
    : weight_(weight), trunc_(truncation) {
    if (truncation < 0)
        throw std::invalid_argument("NearlyForm truncation must be >= 0");
    for (const QSeries& s : x_coeffs)
        if (s.truncation() != truncation)
            throw std::invalid_argument("NearlyForm coefficients must share the form's truncation");
    cx_ = trim_trailing_zeros(std::move(x_coeffs));
}

NearlyForm NearlyForm::from_holomorphic(const HolomorphicForm& f) {
    return {f.weight(), f.truncation(), {f.series()}};
}

NearlyForm NearlyForm::constant(const Rational& c, long truncation) {
    return {0, truncation, {QSeries::constant(c, truncation)}};
}

QSeries NearlyForm::coeff_x(int j) const {
    if (j < 0)
        throw std::out_of_range("negative X-degree");
    if (j >= static_cast<int>(cx_.size()))
        return QSeries(trunc_);
    return cx_[static_cast<std::size_t>(j)];
}

bool NearlyForm::is_cuspidal() const {
    for (const QSeries& s : cx_)
        if (s.coeff(0) != 0)
            return false;
    return true;
}

NearlyForm NearlyForm::truncated(long n) const {
    std::vector<QSeries> cx;
    cx.reserve(cx_.size());
    for (const QSeries& s : cx_)
        cx.push_back(s.truncated(n));
    return {weight_, n, std::move(cx)};
}

namespace {

int sum_weight(const NearlyForm& a, const NearlyForm& b) {
    if (a.is_zero())
        return b.weight();
    if (b.is_zero())
        return a.weight();
    if (a.weight() != b.weight())
        throw DomainError("cannot add forms of different weights");
    return a.weight();
}

} // namespace

NearlyForm operator+(const NearlyForm& a, const NearlyForm& b) {
    int w = sum_weight(a, b);
    long t = std::min(a.trunc_, b.trunc_);
    std::size_t deg = std::max(a.cx_.size(), b.cx_.size());
    std::vector<QSeries> cx;
    cx.reserve(deg);
    for (std::size_t j = 0; j < deg; ++j) {
        QSeries s(t);
        if (j < a.cx_.size())
            s = s + a.cx_[j];
        if (j < b.cx_.size())
            s = s + b.cx_[j];
        cx.push_back(std::move(s));
    }
    return {w, t, std::move(cx)};
}

NearlyForm operator-(const NearlyForm& a, const NearlyForm& b) {
    return a + (Rational(-1) * b);
}

NearlyForm operator*(const NearlyForm& a, const NearlyForm& b) {
    int w = a.weight_ + b.weight_;
    long t = std::min(a.trunc_, b.trunc_);
    if (a.cx_.empty() || b.cx_.empty())
        return {w, t};
    std::size_t deg = a.cx_.size() + b.cx_.size() - 1;
    std::vector<QSeries> cx(deg, QSeries(t));
    for (std::size_t i = 0; i < a.cx_.size(); ++i)
        for (std::size_t j = 0; j < b.cx_.size(); ++j)
            cx[i + j] = cx[i + j] + a.cx_[i] * b.cx_[j];
    return {w, t, std::move(cx)};
}

NearlyForm operator*(const Rational& c, const NearlyForm& a) {
    std::vector<QSeries> cx;
    cx.reserve(a.cx_.size());
    for (const QSeries& s : a.cx_)
        cx.push_back(c * s);
    return {a.weight_, a.trunc_, std::move(cx)};
}

NearlyForm operator-(const NearlyForm& a) {
    return Rational(-1) * a;
}

bool NearlyForm::operator==(const NearlyForm& o) const {
    if (is_zero() && o.is_zero())
        return true;
    return weight_ == o.weight_ && trunc_ == o.trunc_ && cx_ == o.cx_;
}

NearlyForm e2_star(long truncation) {
    return {2, truncation, {e2_hol(truncation).series(), QSeries::constant(-12, truncation)}};
}

NearlyForm raise(const NearlyForm& f) {
    int k = f.weight();
    long t = f.truncation();
    if (f.is_zero())
        return {k + 2, t};
    int p = f.degree();
    std::vector<QSeries> cx(static_cast<std::size_t>(p) + 2, QSeries(t));
    for (int j = 0; j <= p + 1; ++j) {
        QSeries s(t);
        if (j <= p)
            s = f.coeff_x(j).derivative();
        if (j >= 1)
            s = s - Rational(k - j + 1) * f.coeff_x(j - 1);
        cx[static_cast<std::size_t>(j)] = std::move(s);
    }
    return {k + 2, t, std::move(cx)};
}

NearlyForm lower(const NearlyForm& f) {
    int k = f.weight();
    long t = f.truncation();
    int p = f.degree();
    if (p <= 0)
        return {k - 2, t};
    std::vector<QSeries> cx;
    cx.reserve(static_cast<std::size_t>(p));
    for (int j = 0; j <= p - 1; ++j)
        cx.push_back(Rational(j + 1) * f.coeff_x(j + 1));
    return {k - 2, t, std::move(cx)};
}

NearlyForm raise_n(const NearlyForm& f, int m) {
    if (m < 0)
        throw std::invalid_argument("raise_n requires m >= 0");
    NearlyForm out = f;
    for (int i = 0; i < m; ++i)
        out = raise(out);
    return out;
}

NearlyForm casimir(const NearlyForm& f) {
    int k = f.weight();
    Rational quarter_k2 = rational(static_cast<long>(k) * k, 4);
    Rational half = rational(1, 2);
    return quarter_k2 * f + half * raise(lower(f)) + half * lower(raise(f));
}

bool is_cuspidal(const NearlyForm& f) {
    return f.is_cuspidal();
}

std::complex<double> evaluate(const NearlyForm& f, std::complex<double> tau) {
    double y = tau.imag();
    if (y < kEvalHardFloor)
        throw DomainError("evaluation point too close to the real axis");
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> q = std::exp(2.0 * std::numbers::pi * i * tau);
    double x_val = 1.0 / (4.0 * std::numbers::pi * y);
    std::complex<double> total(0.0, 0.0);
    double x_pow = 1.0;
    for (int j = 0; j <= f.degree(); ++j) {
        QSeries c = f.coeff_x(j);
        // Horner evaluation of the q-polynomial.
        std::complex<double> s(0.0, 0.0);
        for (long n = c.truncation(); n >= 0; --n)
            s = s * q + std::complex<double>(c.coeff(n).get_d(), 0.0);
        total += s * x_pow;
        x_pow *= x_val;
    }
    return total;
}

std::complex<double> slash_numeric(const NearlyForm& f, const MoebiusElement& g, std::complex<double> tau) {
    if (tau.imag() < kEvalHardFloor)
        throw DomainError("evaluation point too close to the real axis");
    std::complex<double> gt = g.apply(tau);
    std::complex<double> j = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
    return std::pow(j, -f.weight()) * evaluate(f, gt);
}

std::complex<double> lift_value(const NearlyForm& f, const MoebiusElement& g) {
    return slash_numeric(f, g, std::complex<double>(0.0, 1.0));
}

} // namespace nhmf
