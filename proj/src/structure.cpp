#include "nhmf/structure.hpp"

#include "nhmf/errors.hpp"
#include "nhmf/sl2rep.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nhmf {

int dim_N(int k, int p) {
    if (p < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    if (k == 0)
        return 1;
    if (k < 0 || k % 2 != 0)
        return 0;
    int total = 0;
    for (int ell = k; ell >= std::max(1, k - 2 * p); ell -= 2)
        total += dim_M(ell);
    if (k >= 2 && k < 2 + 2 * p)
        total += 1; // the raised E2* chain
    return total;
}

namespace {

int cuspidal_dim(int k, int p) {
    if (k <= 0 || k % 2 != 0)
        return 0;
    int total = 0;
    for (int ell = k; ell >= std::max(1, k - 2 * p); ell -= 2)
        total += dim_S(ell);
    return total;
}

} // namespace

SpanningSet spanning_set(int k, int p, long truncation) {
    if (p < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    SpanningSet s{k, p, truncation, false, {}};
    if (k == 0) {
        s.generators.push_back({GeneratorLabel{false, 0, 0}, NearlyForm::constant(1, truncation)});
        return s;
    }
    if (k < 0 || k % 2 != 0)
        return s;
    for (int ell = k; ell >= std::max(1, k - 2 * p); ell -= 2) {
        int v = (k - ell) / 2;
        std::vector<HolomorphicForm> basis = basis_M(ell, truncation);
        for (std::size_t i = 0; i < basis.size(); ++i)
            s.generators.push_back({GeneratorLabel{false, ell, static_cast<int>(i)},
                                    raise_n(NearlyForm::from_holomorphic(basis[i]), v)});
    }
    if (k >= 2 && k < 2 + 2 * p)
        s.generators.push_back({GeneratorLabel{true, 2, 0}, raise_n(e2_star(truncation), (k - 2) / 2)});
    return s;
}

SpanningSet cuspidal_spanning_set(int k, int p, long truncation) {
    if (p < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    SpanningSet s{k, p, truncation, true, {}};
    if (k <= 0 || k % 2 != 0)
        return s;
    for (int ell = k; ell >= std::max(1, k - 2 * p); ell -= 2) {
        int v = (k - ell) / 2;
        std::vector<HolomorphicForm> basis = basis_S(ell, truncation);
        for (std::size_t i = 0; i < basis.size(); ++i)
            s.generators.push_back({GeneratorLabel{false, ell, static_cast<int>(i)},
                                    raise_n(NearlyForm::from_holomorphic(basis[i]), v)});
    }
    return s;
}

RatMat coefficient_matrix(const SpanningSet& s, long n_max) {
    if (n_max < 0)
        throw std::invalid_argument("coefficient_matrix needs n_max >= 0");
    if (n_max > s.truncation)
        throw TruncationTooSmall("coefficient_matrix needs n_max <= truncation");
    long block = n_max + 1;
    RatMat a(static_cast<long>(s.degree_bound + 1) * block, static_cast<long>(s.generators.size()));
    for (std::size_t g = 0; g < s.generators.size(); ++g) {
        const NearlyForm& f = s.generators[g].form;
        if (f.degree() > s.degree_bound)
            throw std::logic_error("spanning generator exceeds the degree bound");
        for (int j = 0; j <= s.degree_bound; ++j) {
            QSeries c = f.coeff_x(j);
            for (long n = 0; n <= n_max; ++n)
                a.at(j * block + n, static_cast<long>(g)) = c.coeff(n);
        }
    }
    return a;
}

namespace {

// Exact solve over the spanning set, then a zero-residual check on every
// available coefficient.
Decomposition solve_over(const NearlyForm& f, const SpanningSet& s, long n_solve) {
    long block = n_solve + 1;
    RatMat a = coefficient_matrix(s, n_solve);
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(a.rows()));
    for (int j = 0; j <= s.degree_bound; ++j) {
        QSeries c = f.coeff_x(j);
        for (long n = 0; n < block; ++n)
            b.push_back(c.coeff(n));
    }
    SolveResult r = solve_exact(a, b);
    if (r.status == SolveStatus::inconsistent)
        throw NotInSpace("no exact decomposition over the spanning set");
    if (r.status == SolveStatus::underdetermined)
        throw std::logic_error("spanning set is not linearly independent");

    NearlyForm residual = f;
    for (std::size_t g = 0; g < s.generators.size(); ++g)
        residual = residual - r.solution[g] * s.generators[g].form;
    if (!residual.is_zero())
        throw NotInSpace("candidate decomposition fails beyond the solved coefficients");

    Decomposition out;
    out.weight = f.weight();
    out.truncation = f.truncation();
    std::map<int, QSeries> acc;
    for (std::size_t g = 0; g < s.generators.size(); ++g) {
        const Rational& x = r.solution[g];
        if (x == 0)
            continue;
        const GeneratorLabel& label = s.generators[g].label;
        if (label.is_e2) {
            out.e2_coeff = x;
            continue;
        }
        std::vector<HolomorphicForm> basis =
            s.cuspidal ? basis_S(label.ell, f.truncation()) : basis_M(label.ell, f.truncation());
        QSeries term = x * basis[static_cast<std::size_t>(label.index)].series();
        auto it = acc.find(label.ell);
        if (it == acc.end())
            acc.emplace(label.ell, std::move(term));
        else
            it->second = it->second + term;
    }
    for (auto& [ell, series] : acc)
        if (!series.is_zero())
            out.parts.emplace(ell, HolomorphicForm(ell, std::move(series)));
    return out;
}

Decomposition empty_decomposition(const NearlyForm& f) {
    Decomposition out;
    out.weight = f.weight();
    out.truncation = f.truncation();
    return out;
}

} // namespace

Decomposition decompose(const NearlyForm& f, int p) {
    if (p < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    if (f.is_zero())
        return empty_decomposition(f);
    if (f.degree() > p)
        throw NotInSpace("X-degree exceeds the requested bound");
    int d = dim_N(f.weight(), p);
    if (d == 0)
        throw NotInSpace("no nonzero forms of weight " + std::to_string(f.weight()) + " and degree <= " +
                         std::to_string(p));
    long n_solve = d + 10;
    if (f.truncation() < n_solve)
        throw TruncationTooSmall("decompose needs truncation >= " + std::to_string(n_solve) + " at this weight");
    return solve_over(f, spanning_set(f.weight(), p, f.truncation()), n_solve);
}

Decomposition decompose_cuspidal(const NearlyForm& f, int p) {
    if (p < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    if (!f.is_cuspidal())
        throw DomainError("decompose_cuspidal requires a cuspidal form");
    if (f.is_zero())
        return empty_decomposition(f);
    if (f.degree() > p)
        throw NotInSpace("X-degree exceeds the requested bound");
    int d = cuspidal_dim(f.weight(), p);
    if (d == 0)
        throw NotInSpace("no nonzero cuspidal forms of weight " + std::to_string(f.weight()) + " and degree <= " +
                         std::to_string(p));
    long n_solve = d + 10;
    if (f.truncation() < n_solve)
        throw TruncationTooSmall("decompose_cuspidal needs truncation >= " + std::to_string(n_solve) +
                                 " at this weight");
    return solve_over(f, cuspidal_spanning_set(f.weight(), p, f.truncation()), n_solve);
}

std::pair<Decomposition, Decomposition> eisenstein_split(const Decomposition& d) {
    Decomposition eis;
    eis.weight = d.weight;
    eis.truncation = d.truncation;
    eis.e2_coeff = d.e2_coeff;
    Decomposition cusp;
    cusp.weight = d.weight;
    cusp.truncation = d.truncation;
    for (const auto& [ell, f] : d.parts) {
        Rational a0 = f.series().coeff(0);
        if (a0 == 0) {
            if (!f.series().is_zero())
                cusp.parts.emplace(ell, f);
            continue;
        }
        QSeries e = ell == 0 ? QSeries::constant(1, f.truncation()) : eisenstein_q(ell, f.truncation()).series();
        eis.parts.emplace(ell, HolomorphicForm(ell, a0 * e));
        QSeries rest = f.series() - a0 * e;
        if (!rest.is_zero())
            cusp.parts.emplace(ell, HolomorphicForm(ell, std::move(rest)));
    }
    return {std::move(cusp), std::move(eis)};
}

NearlyForm reassemble(const Decomposition& d) {
    NearlyForm out(d.weight, d.truncation);
    if (d.e2_coeff != 0) {
        if (d.weight < 2 || d.weight % 2 != 0)
            throw DomainError("completed Eisenstein component needs even weight >= 2");
        out = out + d.e2_coeff * raise_n(e2_star(d.truncation), (d.weight - 2) / 2);
    }
    for (const auto& [ell, f] : d.parts) {
        if (f.weight() != ell)
            throw DomainError("part weight disagrees with its key");
        if (ell > d.weight || (d.weight - ell) % 2 != 0)
            throw DomainError("part weight incompatible with the total weight");
        out = out + raise_n(NearlyForm::from_holomorphic(f), (d.weight - ell) / 2);
    }
    return out;
}

Rational petersson_constant(int k, int v) {
    if (k < 1)
        throw DomainError("petersson_constant requires weight k >= 1");
    if (v < 0)
        throw std::invalid_argument("petersson_constant requires v >= 0");
    if (v == 0)
        return 1;
    WeightModule m = lowest_weight_module(k, v);
    RatMat lr = m.act_l * m.act_r;
    Rational out(1);
    for (int i = 0; i < v; ++i)
        out *= -lr.at(i, i);
    return out;
}

} // namespace nhmf
