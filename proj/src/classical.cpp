#include "nhmf/classical.hpp"

#include "nhmf/errors.hpp"
#include "nhmf/ratmat.hpp"

#include <stdexcept>
#include <utility>

namespace nhmf {

HolomorphicForm::HolomorphicForm(int weight, QSeries series) : weight_(weight), series_(std::move(series)) {}

Rational bernoulli(long n) {
    if (n < 0)
        throw std::invalid_argument("bernoulli index must be >= 0");
    // B_0..B_n via sum_{j=0}^{m-1} C(m+1,j) B_j = -C(m+1,m) B_m for m >= 1.
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    std::vector<Integer> binom{1, 1};
    for (long m = 1; m <= n; ++m) {
        // binom becomes row m+1 of Pascal's triangle.
        std::vector<Integer> next(static_cast<std::size_t>(m) + 2, Integer(1));
        for (long j = 1; j <= m; ++j)
            next[static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(j - 1)] + binom[static_cast<std::size_t>(j)];
        binom = std::move(next);
        Rational acc(0);
        for (long j = 0; j < m; ++j)
            acc += Rational(binom[static_cast<std::size_t>(j)]) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -acc / Rational(binom[static_cast<std::size_t>(m)]);
    }
    return b[static_cast<std::size_t>(n)];
}

namespace {

QSeries eisenstein_series(int k, long truncation) {
    Rational factor = Rational(-2 * k) / bernoulli(k);
    std::vector<Rational> c(static_cast<std::size_t>(truncation) + 1);
    c[0] = 1;
    for (long n = 1; n <= truncation; ++n)
        c[static_cast<std::size_t>(n)] = factor * Rational(divisor_sigma(n, k - 1));
    return QSeries(truncation, std::move(c));
}

} // namespace

HolomorphicForm eisenstein_q(int k, long truncation) {
    if (k < 4 || k % 2 != 0)
        throw DomainError("eisenstein_q requires even weight k >= 4");
    return {k, eisenstein_series(k, truncation)};
}

HolomorphicForm e2_hol(long truncation) {
    return {2, eisenstein_series(2, truncation)};
}

HolomorphicForm delta_q(long truncation) {
    QSeries e4 = eisenstein_series(4, truncation);
    QSeries e6 = eisenstein_series(6, truncation);
    return {12, Rational(1, 1728) * (e4 * e4 * e4 - e6 * e6)};
}

int dim_M(int k) {
    if (k < 0 || k % 2 != 0)
        return 0;
    if (k % 12 == 2)
        return k / 12;
    return k / 12 + 1;
}

int dim_S(int k) {
    if (k % 2 != 0 || k < 4)
        return 0;
    return dim_M(k) - 1;
}

std::vector<HolomorphicForm> basis_M(int k, long truncation) {
    int d = dim_M(k);
    if (d == 0)
        return {};
    if (truncation < d + 1)
        throw TruncationTooSmall("basis_M(" + std::to_string(k) + ") needs truncation >= " + std::to_string(d + 1));
    // Monomials E4^a E6^b with 4a+6b=k span M_k, and their count equals
    // dim M_k because C[E4,E6] is a free polynomial ring.
    std::vector<QSeries> monomials;
    QSeries e4 = eisenstein_series(4, truncation);
    QSeries e6 = eisenstein_series(6, truncation);
    for (int a = 0; 4 * a <= k; ++a) {
        if ((k - 4 * a) % 6 != 0)
            continue;
        int b = (k - 4 * a) / 6;
        QSeries m = QSeries::constant(1, truncation);
        for (int i = 0; i < a; ++i)
            m = m * e4;
        for (int i = 0; i < b; ++i)
            m = m * e6;
        monomials.push_back(std::move(m));
    }
    if (static_cast<int>(monomials.size()) != d)
        throw std::logic_error("basis_M monomial count mismatch");
    // Reduce to echelon form: element i becomes q^i + O(q^d). The leading
    // d x d block is nonsingular (a form vanishing to order dim M_k is zero),
    // so a pivot exists in every one of the first d columns.
    RatMat rows(d, truncation + 1);
    for (int i = 0; i < d; ++i)
        for (long n = 0; n <= truncation; ++n)
            rows.at(i, n) = monomials[static_cast<std::size_t>(i)].coeff(n);
    for (int col = 0; col < d; ++col) {
        int sel = -1;
        for (int r = col; r < d; ++r)
            if (rows.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            throw std::logic_error("basis_M echelon pivot missing");
        if (sel != col)
            for (long c = 0; c <= truncation; ++c)
                std::swap(rows.at(sel, c), rows.at(col, c));
        Rational inv = 1 / rows.at(col, col);
        for (long c = 0; c <= truncation; ++c)
            rows.at(col, c) *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col)
                continue;
            Rational f = rows.at(r, col);
            if (f == 0)
                continue;
            for (long c = 0; c <= truncation; ++c)
                rows.at(r, c) -= f * rows.at(col, c);
        }
    }
    std::vector<HolomorphicForm> basis;
    basis.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(truncation) + 1);
        for (long n = 0; n <= truncation; ++n)
            c[static_cast<std::size_t>(n)] = rows.at(i, n);
        basis.emplace_back(k, QSeries(truncation, std::move(c)));
    }
    return basis;
}

std::vector<HolomorphicForm> basis_S(int k, long truncation) {
    std::vector<HolomorphicForm> full = basis_M(k, truncation);
    std::vector<HolomorphicForm> cuspidal;
    for (auto& f : full)
        if (f.is_cusp_form())
            cuspidal.push_back(std::move(f));
    return cuspidal;
}

} // namespace nhmf
