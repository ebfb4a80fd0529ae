#pragma once

#include "nhmf/classical.hpp"
#include "nhmf/nearly.hpp"
#include "nhmf/ratmat.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nhmf {

/// Label of a spanning-set generator: either the raised basis element
/// delta^{(k-ell)/2}(i-th echelon basis element of M_ell), the raised
/// completed Eisenstein series delta^{(k-2)/2} E2*, or (weight 0 only) the
/// constant function.
struct GeneratorLabel {
    bool is_e2 = false;
    int ell = 0;
    int index = 0;

    bool operator==(const GeneratorLabel& o) const = default;
};

struct SpanningGenerator {
    GeneratorLabel label;
    NearlyForm form;
};

/// Spanning set of N_k^p (or its cuspidal subspace) at a fixed truncation.
/// The generators are linearly independent; their span realizes the direct
/// sum decomposition.
struct SpanningSet {
    int weight = 0;
    int degree_bound = 0;
    long truncation = 0;
    bool cuspidal = false;
    std::vector<SpanningGenerator> generators;
};

/// Output of the decomposition: one holomorphic form per admissible weight
/// ell plus the coefficient of the E2* chain.
struct Decomposition {
    int weight = 0;
    long truncation = 0;
    std::map<int, HolomorphicForm> parts; // ell -> f_ell, nonzero entries only
    Rational e2_coeff = 0;
};

/// dim N_k^p at level one: 1 for k = 0, otherwise the sum of dim M_ell over
/// ell = k, k-2, ..., max(1, k-2p), plus one when k is even and
/// 2 <= k < 2 + 2p (the E2* chain).
int dim_N(int k, int p);

SpanningSet spanning_set(int k, int p, long truncation);
SpanningSet cuspidal_spanning_set(int k, int p, long truncation);

/// Exact decomposition of F over spanning_set(weight(F), p, truncation(F)).
/// Solves the linear system on q-exponents <= dim_N + 10, then verifies the
/// residual on every available coefficient. Throws NotInSpace when no exact
/// solution exists and TruncationTooSmall when the input is too short.
Decomposition decompose(const NearlyForm& f, int p);

/// Cuspidal variant: rejects non-cuspidal input (DomainError); all parts
/// are cusp forms and the E2 coefficient is zero.
Decomposition decompose_cuspidal(const NearlyForm& f, int p);

/// Splits each part along constant terms: f_ell = (f_ell - a0 E_ell) + a0 E_ell
/// with the Eisenstein line one-dimensional at level one. The E2 coefficient
/// belongs entirely to the Eisenstein component. Returns (cuspidal,
/// eisenstein); the two halves reassemble to the input.
std::pair<Decomposition, Decomposition> eisenstein_split(const Decomposition& d);

/// Rebuilds c . delta^{(k-2)/2} E2* + sum_ell delta^{(k-ell)/2} f_ell.
NearlyForm reassemble(const Decomposition& d);

/// Coefficient matrix of a spanning set: one column per generator, one row
/// per (X-degree, q-exponent) pair with q-exponent <= n_max.
RatMat coefficient_matrix(const SpanningSet& s, long n_max);

/// Petersson ladder constant for the normalized operators: the factor by
/// which v-fold raising scales <f, f> for a cusp form f of weight k (the
/// (4 pi)^{-2v} scaling relative to delta^v is a documented convention; the
/// returned value equals the classical constant for R^v). Computed from the
/// action matrices of lowest_weight_module(k, v), not from a closed form.
/// Requires k >= 1; the result is always positive.
Rational petersson_constant(int k, int v);

} // namespace nhmf
