#pragma once

#include "nhmf/ratmat.hpp"

#include <string>
#include <vector>

namespace nhmf {

/// A truncated sl2 weight module: basis weights plus the action matrices of
/// H, R, L in that basis. R raises the weight by 2 and is truncated at the
/// top of the basis; relation checks exclude that boundary.
struct WeightModule {
    std::vector<long> weights;
    RatMat act_h, act_r, act_l;

    long size() const { return static_cast<long>(weights.size()); }
    long depth() const { return size() - 1; }
};

/// Lowest-weight module with weights ell, ell+2, ...: R e_m = e_{m+1},
/// L e_0 = 0, and L e_m forced by the commutation relations. Requires
/// ell >= 1 (the irreducible D_{ell-1,+} range). Basis has depth+1 vectors.
WeightModule lowest_weight_module(long ell, long depth);

/// Verma module N(lambda) in the convention where -2 is the positive root
/// and L kills the generator: basis v, Rv, R^2 v, ... with weights
/// lambda, lambda+2, ...; defined for every integer lambda.
WeightModule verma_module(long lambda, long depth);

/// Weights mu > lambda at which some basis vector of verma(lambda) is
/// annihilated by L within the truncation.
std::vector<long> singular_weights(long lambda, long depth);

/// BGG-style dual at finite truncation: same weights, H fixed, R and L
/// exchanged by transposition in the weight basis.
WeightModule dual_module(const WeightModule& m);

/// Scalar by which the Casimir (1/4)H^2 + (1/2)RL + (1/2)LR acts on the
/// generator of verma(lambda): lambda^2/4 - lambda/2.
Rational casimir_scalar(long lambda);

/// Residuals of [H,R]-2R, [H,L]+2L, [R,L]-H, restricted to the columns on
/// which all composites stay inside the truncation.
struct CommutatorResiduals {
    RatMat hr, hl, rl;
    bool all_zero() const;
};
CommutatorResiduals commutator_residuals(const WeightModule& m);

/// The Casimir matrix of a module (meaningful on interior columns).
RatMat casimir_matrix(const WeightModule& m);

/// Outcome of comparing the module generated by E2* inside the nearly
/// holomorphic forms with the dual Verma module N(0)^dual.
struct E2ModuleReport {
    long depth = 0;
    bool trivial_line_stable = false;   // raise and lower kill the constants
    bool lowering_hits_line = false;    // lower(E2*) = -12, a nonzero constant
    bool chain_weights_ok = false;      // raise-chain weights are 2, 4, 6, ...
    bool chain_degrees_ok = false;      // degree(raise^m E2*) = m + 1
    bool nonsplit_witness = false;      // lower(raise(E2*)) = -2 E2*, not constant
    bool ladder_match = false;          // composite eigenvalues match N(0)^dual
    std::vector<long> quotient_weights;
    std::vector<std::string> mismatches;

    bool ok() const {
        return trivial_line_stable && lowering_hits_line && chain_weights_ok &&
               chain_degrees_ok && nonsplit_witness && ladder_match;
    }
};

/// Builds the E2* module concretely (repeated raising inside the nearly
/// module) and checks its structure against dual_module(verma(0, depth)).
E2ModuleReport e2_module_structure(long depth);

} // namespace nhmf
