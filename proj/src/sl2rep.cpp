#include "nhmf/sl2rep.hpp"

#include "nhmf/errors.hpp"
#include "nhmf/nearly.hpp"

#include <stdexcept>

namespace nhmf {

namespace {

// Ladder with weights start, start+2, ...: R e_m = e_{m+1},
// L e_m = -m(start + m - 1) e_{m-1}, the unique choice with L e_0 = 0
// satisfying [R,L] = H.
WeightModule ladder_module(long start, long depth) {
    if (depth < 0)
        throw std::invalid_argument("module depth must be >= 0");
    long n = depth + 1;
    WeightModule m;
    m.weights.resize(static_cast<std::size_t>(n));
    m.act_h = RatMat(n, n);
    m.act_r = RatMat(n, n);
    m.act_l = RatMat(n, n);
    for (long i = 0; i < n; ++i) {
        m.weights[static_cast<std::size_t>(i)] = start + 2 * i;
        m.act_h.at(i, i) = start + 2 * i;
        if (i + 1 < n)
            m.act_r.at(i + 1, i) = 1;
        if (i >= 1)
            m.act_l.at(i - 1, i) = -i * (start + i - 1);
    }
    return m;
}

} // namespace

WeightModule lowest_weight_module(long ell, long depth) {
    if (ell < 1)
        throw DomainError("lowest_weight_module requires ell >= 1");
    return ladder_module(ell, depth);
}

WeightModule verma_module(long lambda, long depth) {
    return ladder_module(lambda, depth);
}

std::vector<long> singular_weights(long lambda, long depth) {
    WeightModule m = verma_module(lambda, depth);
    std::vector<long> out;
    for (long i = 1; i <= depth; ++i) {
        bool killed = true;
        for (long r = 0; r < m.size(); ++r)
            if (m.act_l.at(r, i) != 0) {
                killed = false;
                break;
            }
        if (killed)
            out.push_back(m.weights[static_cast<std::size_t>(i)]);
    }
    return out;
}

WeightModule dual_module(const WeightModule& m) {
    WeightModule d;
    d.weights = m.weights;
    d.act_h = m.act_h;
    d.act_r = m.act_l.transposed();
    d.act_l = m.act_r.transposed();
    return d;
}

Rational casimir_scalar(long lambda) {
    return rational(lambda * lambda - 2 * lambda, 4);
}

bool CommutatorResiduals::all_zero() const {
    return hr.is_zero() && hl.is_zero() && rl.is_zero();
}

CommutatorResiduals commutator_residuals(const WeightModule& m) {
    long n = m.size();
    RatMat hr = m.act_h * m.act_r - m.act_r * m.act_h - Rational(2) * m.act_r;
    RatMat hl = m.act_h * m.act_l - m.act_l * m.act_h + Rational(2) * m.act_l;
    RatMat rl = m.act_r * m.act_l - m.act_l * m.act_r - m.act_h;
    long interior = n > 0 ? n - 1 : 0;
    // The top basis vector sees a truncated R, so drop its column wherever
    // R appears.
    return {hr.left_columns(interior), hl, rl.left_columns(interior)};
}

RatMat casimir_matrix(const WeightModule& m) {
    Rational quarter(1, 4);
    Rational half(1, 2);
    return quarter * (m.act_h * m.act_h) + half * (m.act_r * m.act_l) + half * (m.act_l * m.act_r);
}

E2ModuleReport e2_module_structure(long depth) {
    if (depth < 1)
        throw std::invalid_argument("e2_module_structure requires depth >= 1");
    const long trunc = 6;
    E2ModuleReport rep;
    rep.depth = depth;

    std::vector<NearlyForm> v;
    v.reserve(static_cast<std::size_t>(depth) + 1);
    v.push_back(NearlyForm::constant(1, trunc));
    v.push_back(e2_star(trunc));
    for (long m = 2; m <= depth; ++m)
        v.push_back(raise(v.back()));

    rep.trivial_line_stable = raise(v[0]).is_zero() && lower(v[0]).is_zero();
    rep.lowering_hits_line = !lower(v[1]).is_zero() && lower(v[1]) == Rational(-12) * v[0];

    rep.chain_weights_ok = true;
    rep.chain_degrees_ok = true;
    for (long m = 0; m <= depth; ++m) {
        const NearlyForm& f = v[static_cast<std::size_t>(m)];
        if (f.weight() != 2 * m) {
            rep.chain_weights_ok = false;
            rep.mismatches.push_back("weight of chain element " + std::to_string(m));
        }
        int expected_degree = m == 0 ? 0 : static_cast<int>(m);
        if (f.degree() != expected_degree) {
            rep.chain_degrees_ok = false;
            rep.mismatches.push_back("degree of chain element " + std::to_string(m));
        }
    }

    NearlyForm lr1 = lower(raise(v[1]));
    rep.nonsplit_witness = lr1 == Rational(-2) * v[1] && !lr1.is_zero();

    WeightModule dual = dual_module(verma_module(0, depth));
    RatMat lr = dual.act_l * dual.act_r;
    RatMat rl = dual.act_r * dual.act_l;
    rep.ladder_match = true;
    for (long m = 0; m <= depth; ++m) {
        const NearlyForm& f = v[static_cast<std::size_t>(m)];
        if (m < depth && !(lower(raise(f)) == lr.at(m, m) * f)) {
            rep.ladder_match = false;
            rep.mismatches.push_back("lower(raise(.)) eigenvalue at chain element " + std::to_string(m));
        }
        if (!(raise(lower(f)) == rl.at(m, m) * f)) {
            rep.ladder_match = false;
            rep.mismatches.push_back("raise(lower(.)) eigenvalue at chain element " + std::to_string(m));
        }
    }

    for (long m = 1; m <= depth; ++m)
        rep.quotient_weights.push_back(2 * m);
    return rep;
}

} // namespace nhmf
