#pragma once

#include "nhmf/qseries.hpp"

#include <vector>

namespace nhmf {

/// A weight-tagged holomorphic q-expansion at level one. The tag is not a
/// membership claim: e2_hol carries weight 2 although M_2 = 0.
class HolomorphicForm {
  public:
    HolomorphicForm(int weight, QSeries series);

    int weight() const { return weight_; }
    const QSeries& series() const { return series_; }
    long truncation() const { return series_.truncation(); }

    bool is_cusp_form() const { return series_.coeff(0) == 0; }

    bool operator==(const HolomorphicForm& o) const = default;

  private:
    int weight_;
    QSeries series_;
};

/// Exact Bernoulli number B_n (B_1 = -1/2 convention).
Rational bernoulli(long n);

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
/// for even k >= 4.
HolomorphicForm eisenstein_q(int k, long truncation);

/// The quasimodular E2 = 1 - 24 sum sigma_1(n) q^n, weight tag 2.
HolomorphicForm e2_hol(long truncation);

/// The discriminant cusp form, built as (E4^3 - E6^2)/1728.
HolomorphicForm delta_q(long truncation);

int dim_M(int k);
int dim_S(int k);

/// Echelonized (Victor-Miller) basis of M_k(SL2(Z)): element i has
/// q-expansion q^i + O(q^dim). Requires truncation >= dim_M(k) + 1.
/// Empty for zero spaces; [1] for k = 0.
std::vector<HolomorphicForm> basis_M(int k, long truncation);

/// The cuspidal subset of basis_M (elements with zero constant term).
std::vector<HolomorphicForm> basis_S(int k, long truncation);

} // namespace nhmf
