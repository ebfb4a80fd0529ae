"""Smoke tests for the python bindings (import nhmf from build/python)."""

import math
from fractions import Fraction

import pytest

import nhmf


def test_exact_series_and_fraction_interop():
    e4 = nhmf.eisenstein_q(4, 10)
    assert e4.weight() == 4
    assert e4.series().coeff(0) == Fraction(1)
    assert e4.series().coeff(1) == Fraction(240)
    assert isinstance(e4.series().coeff(1), Fraction)

    s = nhmf.QSeries(2, [Fraction(1, 3), 2, Fraction(-7, 2)])
    assert s.coeff(0) == Fraction(1, 3)
    assert (s * s).coeff(0) == Fraction(1, 9)
    assert (s * Fraction(3)).coeff(0) == 1
    assert (Fraction(3) * s).coeff(0) == 1

    with pytest.raises(TypeError):
        nhmf.QSeries(2, [0.5, 0, 0])  # floats would silently lose exactness

    assert nhmf.bernoulli(12) == Fraction(-691, 2730)
    assert nhmf.divisor_sigma(6, 1) == 12


def test_operators_and_identities():
    n = 30
    es = nhmf.e2_star(n)
    assert es.weight() == 2
    assert es.degree() == 1

    e4 = nhmf.NearlyForm.from_holomorphic(nhmf.eisenstein_q(4, n))
    assert es * es == e4 + Fraction(12) * nhmf.raise_(es)

    assert nhmf.lower(es) == nhmf.NearlyForm.constant(Fraction(-12), n)

    delta = nhmf.NearlyForm.from_holomorphic(nhmf.delta_q(n))
    assert nhmf.casimir(delta) == Fraction(30) * delta
    assert nhmf.casimir(es).is_zero()

    comm = nhmf.lower(nhmf.raise_(delta)) - nhmf.raise_(nhmf.lower(delta))
    assert comm == Fraction(-12) * delta

    assert nhmf.raise_n(es, 4).degree() == 5


def test_decompose_round_trip():
    n = 30
    es = nhmf.e2_star(n)
    sq = es * es
    d = nhmf.decompose(sq, 2)
    assert d.weight == 4
    assert d.e2_coeff == Fraction(12)
    assert list(d.parts.keys()) == [4]
    assert d.parts[4] == nhmf.eisenstein_q(4, n)
    assert nhmf.reassemble(d) == sq

    cusp, eis = nhmf.eisenstein_split(d)
    assert cusp.parts == {}
    assert eis.e2_coeff == Fraction(12)

    text = nhmf.decomposition_to_json(d)
    assert nhmf.reassemble(nhmf.decomposition_from_json(text)) == sq

    doc = nhmf.form_to_json(sq)
    assert nhmf.form_from_json(doc) == sq


def test_spanning_set_and_dimensions():
    assert nhmf.dim_n(24, 4) == 11
    assert nhmf.dim_m(12) == 2
    s = nhmf.spanning_set(12, 1, 30)
    assert [g.label.ell for g in s.generators] == [12, 12, 10]
    assert nhmf.rank(nhmf.coefficient_matrix(s, 13)) == 3


def test_modules():
    assert nhmf.singular_weights(0, 50) == [2]
    assert nhmf.casimir_scalar(12) == Fraction(30)
    m = nhmf.verma_module(0, 10)
    assert nhmf.commutator_residuals(m).all_zero()
    d = nhmf.dual_module(m)
    assert all(d.act_r.at(i, 0) == 0 for i in range(d.size()))
    assert nhmf.e2_module_structure(6).ok()
    assert nhmf.petersson_constant(12, 2) == Fraction(312)
    assert nhmf.lowest_weight_module(2, 3).weights == [2, 4, 6, 8]


def test_numeric_evaluation():
    delta = nhmf.NearlyForm.from_holomorphic(nhmf.delta_q(60))
    tau = 0.3 + 1.2j
    s = nhmf.MoebiusElement(0, -1, 1, 0)
    assert abs(nhmf.slash_numeric(delta, s, tau) - nhmf.evaluate(delta, tau)) < 1e-10
    assert abs(nhmf.lift_value(delta, nhmf.MoebiusElement.identity()) -
               nhmf.evaluate(delta, 1j)) < 1e-15
    value = nhmf.evaluate(delta, 1j)
    assert math.isclose(value.real, 0.0017853698506421495, rel_tol=1e-9)


def test_exceptions():
    with pytest.raises(nhmf.DomainError):
        nhmf.eisenstein_q(2, 10)
    with pytest.raises(nhmf.TruncationTooSmall):
        nhmf.basis_m(12, 2)
    with pytest.raises(nhmf.ParseError):
        nhmf.form_from_json("{")
    e2 = nhmf.NearlyForm(2, 20, [nhmf.e2_hol(20).series()])
    with pytest.raises(nhmf.NotInSpace):
        nhmf.decompose(e2, 0)
    with pytest.raises(nhmf.DomainError):
        nhmf.evaluate(nhmf.NearlyForm.constant(Fraction(1), 5), 0.05j)
