#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhmf/errors.hpp"
#include "nhmf/sl2rep.hpp"

#include <vector>

using nhmf::Rational;
using nhmf::RatMat;
using nhmf::WeightModule;

namespace {

bool modules_equal(const WeightModule& a, const WeightModule& b) {
    return a.weights == b.weights && a.act_h == b.act_h && a.act_r == b.act_r &&
           a.act_l == b.act_l;
}

} // namespace

TEST_CASE("lowest weight module: ladder shape") {
    WeightModule m = nhmf::lowest_weight_module(2, 3);
    CHECK(m.weights == std::vector<long>{2, 4, 6, 8});
    CHECK(m.size() == 4);
    CHECK(m.depth() == 3);

    // H is diagonal with the weights
    for (long i = 0; i < m.size(); ++i)
        for (long j = 0; j < m.size(); ++j)
            CHECK(m.act_h.at(i, j) == (i == j ? Rational(m.weights[i]) : Rational(0)));

    // R e_m = e_{m+1}, truncated at the top
    for (long j = 0; j + 1 < m.size(); ++j)
        CHECK(m.act_r.at(j + 1, j) == 1);
    for (long i = 0; i < m.size(); ++i)
        CHECK(m.act_r.at(i, m.size() - 1) == 0);

    // L e_0 = 0 and L e_1 = -2 e_0 for lowest weight 2
    for (long i = 0; i < m.size(); ++i)
        CHECK(m.act_l.at(i, 0) == 0);
    CHECK(m.act_l.at(0, 1) == -2);
    CHECK(m.act_l.at(1, 2) == -6);
    CHECK(m.act_l.at(2, 3) == -12);
}

TEST_CASE("lowest weight module: domain checks") {
    CHECK(nhmf::lowest_weight_module(1, 4).weights ==
          std::vector<long>{1, 3, 5, 7, 9});
    CHECK_THROWS_AS(nhmf::lowest_weight_module(0, 3), nhmf::DomainError);
    CHECK_THROWS_AS(nhmf::lowest_weight_module(-2, 3), nhmf::DomainError);
}

TEST_CASE("ladder coefficients follow the forced recursion") {
    // [R,L] = H forces L e_m = -m(start+m-1) e_{m-1}; recompute that product
    // independently and compare entrywise.
    for (long start : {-4L, -1L, 0L, 1L, 2L, 7L}) {
        WeightModule m = nhmf::verma_module(start, 10);
        for (long col = 1; col <= 10; ++col) {
            Rational expect = Rational(-col) * Rational(start + col - 1);
            for (long row = 0; row < m.size(); ++row)
                CHECK(m.act_l.at(row, col) == (row == col - 1 ? expect : Rational(0)));
        }
    }
}

TEST_CASE("verma module basics") {
    WeightModule m = nhmf::verma_module(0, 3);
    CHECK(m.weights == std::vector<long>{0, 2, 4, 6});
    // L kills the generator
    for (long i = 0; i < m.size(); ++i)
        CHECK(m.act_l.at(i, 0) == 0);
    // lambda = 0 also kills the next one up: singular vector
    for (long i = 0; i < m.size(); ++i)
        CHECK(m.act_l.at(i, 1) == 0);

    WeightModule m5 = nhmf::verma_module(5, 3);
    CHECK(m5.act_l.at(0, 1) == -5);
}

TEST_CASE("singular weights") {
    CHECK(nhmf::singular_weights(0, 50) == std::vector<long>{2});
    CHECK(nhmf::singular_weights(-3, 50) == std::vector<long>{5});
    CHECK(nhmf::singular_weights(-10, 50) == std::vector<long>{12});
    for (long lambda = 1; lambda <= 10; ++lambda)
        CHECK(nhmf::singular_weights(lambda, 50).empty());
    // the singular vector sits at index 1 - lambda, so a shallow truncation
    // cannot see it
    CHECK(nhmf::singular_weights(-10, 5).empty());
    CHECK(nhmf::singular_weights(-10, 11) == std::vector<long>{12});
}

TEST_CASE("finite-dimensional quotient criterion") {
    for (long lambda = -10; lambda <= 10; ++lambda) {
        bool has_singular = !nhmf::singular_weights(lambda, 30).empty();
        CHECK(has_singular == (lambda <= 0));
    }
}

TEST_CASE("commutation relations hold away from the truncation boundary") {
    for (long lambda = -5; lambda <= 5; ++lambda) {
        WeightModule m = nhmf::verma_module(lambda, 12);
        CHECK(nhmf::commutator_residuals(m).all_zero());
        CHECK(nhmf::commutator_residuals(nhmf::dual_module(m)).all_zero());
    }
    for (long ell = 1; ell <= 6; ++ell) {
        WeightModule m = nhmf::lowest_weight_module(ell, 12);
        CHECK(nhmf::commutator_residuals(m).all_zero());
        CHECK(nhmf::commutator_residuals(nhmf::dual_module(m)).all_zero());
    }
}

TEST_CASE("commutator residuals detect a broken module") {
    WeightModule m = nhmf::verma_module(3, 6);
    m.act_l.at(0, 1) = m.act_l.at(0, 1) + 1;
    CHECK_FALSE(nhmf::commutator_residuals(m).all_zero());
}

TEST_CASE("casimir scalar") {
    CHECK(nhmf::casimir_scalar(0) == 0);
    CHECK(nhmf::casimir_scalar(2) == 0);
    CHECK(nhmf::casimir_scalar(12) == 30);
    CHECK(nhmf::casimir_scalar(1) == nhmf::rational(-1, 4));
    CHECK(nhmf::casimir_scalar(-10) == 30);
    for (long lambda = -20; lambda <= 20; ++lambda)
        CHECK(nhmf::casimir_scalar(lambda) == nhmf::casimir_scalar(2 - lambda));
}

TEST_CASE("casimir matrix is scalar on interior columns") {
    for (long lambda : {-4L, 0L, 1L, 5L, 12L}) {
        WeightModule m = nhmf::verma_module(lambda, 9);
        RatMat cas = nhmf::casimir_matrix(m);
        Rational scalar = nhmf::casimir_scalar(lambda);
        for (long j = 0; j + 1 < m.size(); ++j)
            for (long i = 0; i < m.size(); ++i)
                CHECK(cas.at(i, j) == (i == j ? scalar : Rational(0)));
    }
    // same scalar on the dual
    WeightModule d = nhmf::dual_module(nhmf::verma_module(0, 9));
    RatMat cas = nhmf::casimir_matrix(d);
    for (long j = 0; j + 1 < d.size(); ++j)
        CHECK(cas.at(j, j) == 0);
}

TEST_CASE("dual module") {
    WeightModule m = nhmf::verma_module(-2, 7);
    WeightModule d = nhmf::dual_module(m);
    CHECK(d.weights == m.weights);
    CHECK(d.act_h == m.act_h);
    CHECK(d.act_r == m.act_l.transposed());
    CHECK(d.act_l == m.act_r.transposed());
    CHECK(modules_equal(nhmf::dual_module(d), m));
}

TEST_CASE("dual of verma(0) has a trivial line at the bottom") {
    WeightModule d = nhmf::dual_module(nhmf::verma_module(0, 20));
    // the weight-0 basis vector spans a submodule on which R and L act by 0
    for (long i = 0; i < d.size(); ++i) {
        CHECK(d.act_r.at(i, 0) == 0);
        CHECK(d.act_l.at(i, 0) == 0);
    }
    // but the line does not split off: something above maps onto it
    bool hit = false;
    for (long j = 1; j < d.size(); ++j)
        if (d.act_l.at(0, j) != 0)
            hit = true;
    CHECK(hit);
}

TEST_CASE("dual ladder eigenvalues match the nearly holomorphic chain") {
    // On v_m = raise^{m-1}(E2*) the composites act by lower(raise) = -m(m+1)
    // and raise(lower) = -(m-1)m; the dual Verma module reproduces both.
    WeightModule d = nhmf::dual_module(nhmf::verma_module(0, 12));
    RatMat lr = d.act_l * d.act_r;
    RatMat rl = d.act_r * d.act_l;
    for (long m = 0; m + 1 < d.size(); ++m)
        CHECK(lr.at(m, m) == Rational(-m) * Rational(m + 1));
    for (long m = 0; m < d.size(); ++m)
        CHECK(rl.at(m, m) == Rational(-(m - 1)) * Rational(m));
}

TEST_CASE("e2 module structure report") {
    nhmf::E2ModuleReport rep = nhmf::e2_module_structure(8);
    CHECK(rep.ok());
    CHECK(rep.depth == 8);
    CHECK(rep.trivial_line_stable);
    CHECK(rep.lowering_hits_line);
    CHECK(rep.chain_weights_ok);
    CHECK(rep.chain_degrees_ok);
    CHECK(rep.nonsplit_witness);
    CHECK(rep.ladder_match);
    CHECK(rep.mismatches.empty());
    CHECK(rep.quotient_weights ==
          std::vector<long>{2, 4, 6, 8, 10, 12, 14, 16});
}
