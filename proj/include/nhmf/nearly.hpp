#pragma once

#include "nhmf/classical.hpp"
#include "nhmf/qseries.hpp"

#include <complex>
#include <vector>

namespace nhmf {

/// Integer matrix (a b; c d) with determinant 1, acting on the upper half
/// plane by fractional linear transformations.
struct MoebiusElement {
    long a, b, c, d;
    MoebiusElement(long a_, long b_, long c_, long d_);

    static MoebiusElement identity() { return {1, 0, 0, 1}; }
    MoebiusElement operator*(const MoebiusElement& o) const;
    std::complex<double> apply(std::complex<double> tau) const;
};

/// A nearly holomorphic modular form of level one: a weight-tagged
/// polynomial in X = 1/(4 pi y) with QSeries coefficients,
///
///   F = sum_{j=0}^{p} c_j(tau) X^j,   c_j holomorphic.
///
/// The representation is unique, so equality is coefficientwise. The zero
/// form has degree -1. All c_j share one truncation. Immutable.
class NearlyForm {
  public:
    /// Zero form.
    NearlyForm(int weight, long truncation);
    /// From X-coefficients c_0..c_p; trailing zero series are trimmed.
    NearlyForm(int weight, long truncation, std::vector<QSeries> x_coeffs);

    static NearlyForm from_holomorphic(const HolomorphicForm& f);
    static NearlyForm constant(const Rational& c, long truncation);

    int weight() const { return weight_; }
    long truncation() const { return trunc_; }

    /// Largest j with c_j != 0, or -1 for the zero form.
    int degree() const { return static_cast<int>(cx_.size()) - 1; }

    /// Coefficient of X^j (zero series past the degree).
    QSeries coeff_x(int j) const;
    const std::vector<QSeries>& x_coeffs() const { return cx_; }

    bool is_zero() const { return cx_.empty(); }

    /// True iff the constant q-term of every c_j vanishes (level one has a
    /// single cusp, at infinity).
    bool is_cuspidal() const;

    NearlyForm truncated(long n) const;

    friend NearlyForm operator+(const NearlyForm& a, const NearlyForm& b);
    friend NearlyForm operator-(const NearlyForm& a, const NearlyForm& b);
    friend NearlyForm operator*(const NearlyForm& a, const NearlyForm& b);
    friend NearlyForm operator*(const Rational& c, const NearlyForm& a);
    friend NearlyForm operator-(const NearlyForm& a);

    /// Coefficientwise equality; zero forms compare equal regardless of
    /// their weight tag.
    bool operator==(const NearlyForm& o) const;

  private:
    int weight_;
    long trunc_;
    std::vector<QSeries> cx_; // cx_[j] multiplies X^j; no trailing zeros
};

/// The completed weight-2 Eisenstein series E2* = e2_hol - 12 X.
NearlyForm e2_star(long truncation);

/// Normalized Maass raising operator delta = -(1/4pi) R_k in X-coordinates:
/// delta F = sum_j [ X^j D(c_j) - (k-j) X^{j+1} c_j ].  Weight k -> k+2.
NearlyForm raise(const NearlyForm& f);

/// Normalized Maass lowering operator eps = -4pi L_k:
/// eps F = sum_{j>=1} j X^{j-1} c_j.  Weight k -> k-2, degree drops by one.
NearlyForm lower(const NearlyForm& f);

/// m-fold raising.
NearlyForm raise_n(const NearlyForm& f, int m);

/// Casimir operator (k^2/4) F + (1/2) raise(lower F) + (1/2) lower(raise F).
/// Preserves weight and degree bound; all pi factors cancel exactly.
NearlyForm casimir(const NearlyForm& f);

/// Free-standing alias of NearlyForm::is_cuspidal.
bool is_cuspidal(const NearlyForm& f);

// --- numeric spot checks (double precision) ---------------------------------

/// Im(tau) below which evaluation is refused outright.
inline constexpr double kEvalHardFloor = 0.1;
/// Im(tau) below which callers should treat results as unreliable.
inline constexpr double kEvalWarnFloor = 0.5;

/// F(tau) = sum_j (sum_n c_{j,n} e^{2 pi i n tau}) (4 pi Im tau)^{-j}.
/// Throws DomainError when Im(tau) < kEvalHardFloor.
std::complex<double> evaluate(const NearlyForm& f, std::complex<double> tau);

/// (F|_k g)(tau) = (c tau + d)^{-k} F(g tau). Both tau and g tau must be in
/// the evaluation region.
std::complex<double> slash_numeric(const NearlyForm& f, const MoebiusElement& g,
                                   std::complex<double> tau);

/// Value of the associated function on SL2(R): Phi(g) = (F|_k g)(i).
std::complex<double> lift_value(const NearlyForm& f, const MoebiusElement& g);

} // namespace nhmf
