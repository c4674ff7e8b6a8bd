from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from specht_hilbert.algebra import (
    GF,
    GREVLEX,
    LEX,
    QQ,
    CharacteristicMismatch,
    Field,
    Monomial,
    Polynomial,
)
from specht_hilbert.parsing import parse_polynomial as P

N = 3


def polys(n=N, field=QQ, max_terms=4, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    coeffs = st.integers(-5, 5)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Polynomial.from_dict(d, n, field))


def lex_key(exps):
    """Independent lex comparison key: x_n decides first."""
    return tuple(reversed(exps))


def test_products():
    x1, x2, x3, x4 = (Polynomial.variable(i, 4) for i in range(1, 5))
    assert (x1 - x2) * (x1 + x2) == x1 * x1 - x2 * x2
    f = (x1 - x2) * (x3 - x4)
    assert f == x1 * x3 - x1 * x4 - x2 * x3 + x2 * x4
    assert (f + (-f)).is_zero()


def test_leading_terms():
    f = P("(x1-x2)*(x3-x4)", 4)
    assert f.leading_term() == (Monomial((0, 1, 0, 1)), 1)
    assert P("x1", 4).leading_monomial() == Monomial((1, 0, 0, 0))
    g = P("x1*x4^2 - 2*x2*x3^2", 4)
    assert g.leading_monomial() == Monomial((1, 0, 0, 2))
    with pytest.raises(ValueError):
        Polynomial.zero(3).leading_term()


def test_grevlex_leading_term():
    f = P("x1^3 + x2*x3", 3)
    assert f.leading_monomial(GREVLEX) == Monomial((3, 0, 0))
    assert P("x1*x3 + x2^2", 3).leading_monomial(GREVLEX) == Monomial((0, 2, 0))


@settings(max_examples=60, deadline=None)
@given(polys())
def test_leading_term_matches_sorted_expansion(f):
    if f.is_zero():
        return
    expected = max((m.exponents for m, _ in f.items()), key=lex_key)
    assert f.leading_monomial().exponents == expected
    exps = [m.exponents for m, _ in f.items()]
    assert exps == sorted(exps, key=lex_key, reverse=True)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f - f).is_zero()


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_leading_term_multiplicative(f, g):
    if f.is_zero() or g.is_zero():
        return
    (mf, cf), (mg, cg) = f.leading_term(), g.leading_term()
    mfg, cfg = (f * g).leading_term()
    assert mfg == mf * mg
    assert cfg == cf * cg


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.sampled_from([2, 3, 7, 101]))
def test_mod_p_agrees_with_reduction(f, g, p):
    K = GF(p)
    fp, gp = f.change_ring(field=K), g.change_ring(field=K)
    assert (f * g).change_ring(field=K) == fp * gp
    assert (f + g).change_ring(field=K) == fp + gp
    if p != 2:
        assert f.scalar_mul(Fraction(1, 2)).change_ring(field=K) == fp.scalar_mul(K.inv(2))


def test_characteristic_mismatch():
    with pytest.raises(CharacteristicMismatch):
        P("x1", 2) + P("x1", 2, GF(5))
    with pytest.raises(CharacteristicMismatch):
        P("x1", 2, GF(3)) * P("x1", 2, GF(5))


def test_field_parse():
    assert Field.parse("q") is QQ
    assert Field.parse("fp:7") == GF(7)
    with pytest.raises(ValueError):
        Field.parse("fp:8")
    with pytest.raises(ValueError):
        Field.parse("r")


def test_prime_field_arithmetic():
    K = GF(5)
    f = P("x1 - x2", 2, K)
    assert f.coefficient((0, 1)) == 4
    assert (f * f * f * f * f) == P("x1^5 - x2^5", 2, K)  # Frobenius
    assert K(Fraction(1, 2)) == 3


def test_evaluate():
    assert P("x1 - x2", 4).evaluate([7, 7, 1, 2]) == 0
    assert P("x1*x3 - x2*x3", 4).evaluate([1, 2, 3, 4]) == -3
    assert P("x1^2 + 1/2*x2", 2).evaluate([Fraction(1, 3), 1]) == Fraction(11, 18)
    assert P("x1^2 + x2", 2, GF(7)).evaluate([3, 4]) == 6
    with pytest.raises(ValueError):
        P("x1", 2).evaluate([1])


def test_homogeneity():
    assert P("x1*x2 + x3^2", 3).homogeneous_degree() == 2
    assert P("x1*x2 + x3", 3).homogeneous_degree() is None
    assert P("x1 + 1", 3).degree() == 1


def test_monomial_helpers():
    m = Monomial.squarefree({1, 3}, 4, power=2)
    assert m.exponents == (2, 0, 2, 0)
    assert m.support == {1, 3}
    assert m.degree == 4
    assert Monomial((1, 0, 1, 0)).divides(m)
    assert str(Monomial((1, 0, 0, 2))) == "x1*x4^2"


def test_substitute_zero_and_change_ring():
    f = P("x1*x3 + x2 - x3^2", 3)
    assert f.substitute_zero(3) == P("x2", 3)
    assert f.change_ring(n=5).n == 5
    with pytest.raises(ValueError):
        f.change_ring(n=2)
