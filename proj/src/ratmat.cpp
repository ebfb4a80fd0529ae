#include "nhmf/ratmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nhmf {

RatMat::RatMat(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("RatMat dimensions must be >= 0");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMat RatMat::identity(long n) {
    RatMat m(n, n);
    for (long i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RatMat RatMat::transposed() const {
    RatMat out(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (long c = 0; c < cols_; ++c)
            out.at(c, r) = at(r, c);
    return out;
}

RatMat RatMat::left_columns(long c) const {
    if (c < 0 || c > cols_)
        throw std::out_of_range("RatMat column slice out of range");
    RatMat out(rows_, c);
    for (long r = 0; r < rows_; ++r)
        for (long j = 0; j < c; ++j)
            out.at(r, j) = at(r, j);
    return out;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMat shape mismatch in addition");
    RatMat out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMat shape mismatch in subtraction");
    RatMat out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("RatMat shape mismatch in multiplication");
    RatMat out(a.rows_, b.cols_);
    for (long r = 0; r < a.rows_; ++r)
        for (long k = 0; k < a.cols_; ++k) {
            const Rational& v = a.at(r, k);
            if (v == 0)
                continue;
            for (long c = 0; c < b.cols_; ++c)
                out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

RatMat operator*(const Rational& s, const RatMat& a) {
    RatMat out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = s * a.data_[i];
    return out;
}

namespace {

// In-place Gauss-Jordan; returns the pivot columns.
std::vector<long> eliminate(RatMat& m) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long sel = -1;
        for (long r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row)
            for (long c = 0; c < m.cols(); ++c)
                std::swap(m.at(sel, c), m.at(row, c));
        Rational inv = 1 / m.at(row, col);
        for (long c = col; c < m.cols(); ++c)
            m.at(row, c) *= inv;
        for (long r = 0; r < m.rows(); ++r) {
            if (r == row)
                continue;
            Rational f = m.at(r, col);
            if (f == 0)
                continue;
            for (long c = col; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

long rank(RatMat m) {
    return static_cast<long>(eliminate(m).size());
}

SolveResult solve_exact(RatMat a, std::vector<Rational> b) {
    if (static_cast<long>(b.size()) != a.rows())
        throw std::invalid_argument("solve_exact right-hand side length mismatch");
    long nvars = a.cols();
    RatMat aug(a.rows(), nvars + 1);
    for (long r = 0; r < a.rows(); ++r) {
        for (long c = 0; c < nvars; ++c)
            aug.at(r, c) = a.at(r, c);
        aug.at(r, nvars) = b[static_cast<std::size_t>(r)];
    }
    std::vector<long> pivots = eliminate(aug);
    for (long p : pivots)
        if (p == nvars)
            return {SolveStatus::inconsistent, {}};
    if (static_cast<long>(pivots.size()) < nvars)
        return {SolveStatus::underdetermined, {}};
    std::vector<Rational> x(static_cast<std::size_t>(nvars), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = aug.at(static_cast<long>(i), nvars);
    return {SolveStatus::unique, std::move(x)};
}

} // namespace nhmf
