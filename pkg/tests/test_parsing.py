import pytest
from hypothesis import given, settings, strategies as st

from specht_hilbert.algebra import GF, QQ, Polynomial
from specht_hilbert.parsing import PolynomialSyntaxError, parse_polynomial as P


def test_expanded_product():
    f = P("(x1-x2)*(x3-x4)", 4)
    assert len(f) == 4
    assert str(f) == "x2*x4 - x1*x4 - x2*x3 + x1*x3"


def test_zero_and_constants():
    assert P("0", 3).is_zero()
    assert P("2*3 - 6", 2).is_zero()
    assert P("-(x1)", 1) == -Polynomial.variable(1, 1)


def test_worked_example_polynomial():
    f = P("x1*x4^2 - 2*x2*x3^2 + 3*x1*x3*x4 - x2*x3*x4", 4)
    assert len(f) == 4
    assert f.coefficient((0, 1, 2, 0)) == -2
    assert f.coefficient((1, 0, 1, 1)) == 3


def test_precedence():
    assert P("x1^2*x2", 2) == P("(x1^2)*x2", 2)
    assert P("x1 + x2*x1", 2) == P("x1 + (x2*x1)", 2)
    assert P("-x1^2", 1) == -P("x1*x1", 1)
    assert P("(x1+x2)^2", 2) == P("x1^2 + 2*x1*x2 + x2^2", 2)


@pytest.mark.parametrize(
    "text, pos",
    [("2x1", 1), ("x1 +", 4), ("x5", 0), ("(x1", 3), ("x1 ** 2", 4), ("", 0), ("x1 $ x2", 3), ("x1/x2", 3)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolynomialSyntaxError) as err:
        P(text, 4)
    assert err.value.pos == pos


def test_rational_coefficients_round_trip():
    f = P("1/2*x1 - 3/4*x2^2 + 5", 2)
    assert P(str(f), 2) == f


def polys():
    exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=5)
    return st.dictionaries(exps, coeffs, max_size=5).map(lambda d: Polynomial.from_dict(d, 3, QQ))


@settings(max_examples=80, deadline=None)
@given(polys())
def test_parse_print_round_trip(f):
    assert P(str(f), 3) == f
    assert str(P(str(f), 3)) == str(f)


@settings(max_examples=40, deadline=None)
@given(polys())
def test_round_trip_mod_p(f):
    g = f.change_ring(field=GF(7)) if all(c.denominator % 7 for _, c in f.items()) else None
    if g is not None:
        assert P(str(g), 3, GF(7)) == g
