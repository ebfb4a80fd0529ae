#pragma once

#include "nhmf/rational.hpp"

#include <vector>

namespace nhmf {

/// Dense exact rational matrix, row-major. Small: used for sl2 action
/// matrices and the decomposition solver.
class RatMat {
  public:
    RatMat() = default;
    RatMat(long rows, long cols);

    static RatMat identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational& at(long r, long c) { return data_[r * cols_ + c]; }
    const Rational& at(long r, long c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    RatMat transposed() const;

    /// Columns 0..c-1 (used for truncation-interior checks).
    RatMat left_columns(long c) const;

    friend RatMat operator+(const RatMat& a, const RatMat& b);
    friend RatMat operator-(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const Rational& c, const RatMat& a);

    bool operator==(const RatMat& o) const = default;

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank over the rationals (exact Gaussian elimination).
long rank(RatMat m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution; // valid iff status == unique
};

/// Exact solution of the (possibly overdetermined) system A x = b.
SolveResult solve_exact(RatMat a, std::vector<Rational> b);

} // namespace nhmf
