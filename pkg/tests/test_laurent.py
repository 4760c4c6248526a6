import pytest

from src.core.laurent import LaurentPoly, LinearExpr
from src.utils.errors import DerivationError


def test_parse_and_str():
    p = LaurentPoly.parse("v^11+2v^9+v^7")
    assert str(p) == "v^11+2v^9+v^7"
    assert p.value_at_one() == 4
    assert (p.min_degree(), p.max_degree()) == (7, 11)


def test_arithmetic_progression():
    assert LaurentPoly.arithmetic(9, 5) == LaurentPoly({9: 1, 7: 1, 5: 1})
    assert LaurentPoly.arithmetic(15, 7, 4) == LaurentPoly({15: 1, 11: 1, 7: 1})
    assert LaurentPoly.arithmetic(3, 5).is_zero()


def test_ring_operations():
    p = LaurentPoly.parse("v^2+1")
    assert p * LaurentPoly.v_plus_vinv == LaurentPoly({3: 1, 1: 2, -1: 1})
    assert p - p == LaurentPoly.zero()
    assert p.shift(-2) == LaurentPoly({0: 1, -2: 1})
    assert p.bar() == LaurentPoly({-2: 1, 0: 1})
    assert 1 + p == LaurentPoly({2: 1, 0: 2})


def test_division_by_v_plus_vinv():
    p = LaurentPoly.parse("v^3+2v+v^-1")
    assert p.exact_div_v_plus_vinv() == LaurentPoly.parse("v^2+1")
    quotient, remainder = LaurentPoly.parse("v^3+2v").divmod_v_plus_vinv()
    assert quotient == LaurentPoly.monomial(2)
    assert remainder == LaurentPoly.monomial(1)
    with pytest.raises(DerivationError):
        LaurentPoly.parse("v^3+2v").exact_div_v_plus_vinv()


def test_pairs_round_trip():
    p = LaurentPoly.parse("v^5-3v")
    assert p.to_pairs() == [[1, -3], [5, 1]]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


def test_parity_and_positivity():
    assert LaurentPoly.parse("v^5+v^3").has_uniform_parity()
    assert not LaurentPoly.parse("v^5+v^2").has_uniform_parity()
    assert not LaurentPoly.parse("v^5-v^3").has_nonnegative_coefficients()


def test_symbolic_coefficients_evaluate():
    c = LinearExpr.variable("c")
    p = LaurentPoly({3: 1, 1: c * 2 + 1})
    assert p.is_symbolic()
    assert p.variables() == ["c"]
    assert p.evaluate({"c": 2}) == LaurentPoly({3: 1, 1: 5})
    assert (c - c).is_constant()
    assert (c + 3).value({"c": 4}) == 7


def test_positivity_needs_numeric_coefficients():
    assert LaurentPoly({3: 1, 1: LinearExpr(const=2)}).has_nonnegative_coefficients()
    with pytest.raises(DerivationError):
        LaurentPoly({3: 1, 1: LinearExpr.variable("c")}).has_nonnegative_coefficients()
