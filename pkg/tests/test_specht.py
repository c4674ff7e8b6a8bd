from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from specht_hilbert.algebra import GF, Monomial, Polynomial
from specht_hilbert.combinatorics import (
    ShapeError,
    YoungTableau,
    count_syt_hook,
    enumerate_partitions,
    enumerate_standard_tableaux,
)
from specht_hilbert.groebner import Ideal, ideals_equal, intersect_all, is_groebner_basis
from specht_hilbert.parsing import parse_polynomial as P
from specht_hilbert.specht import (
    Family,
    SpechtIdealSpec,
    UnsupportedFamily,
    classify,
    component_sets,
    initial_monomial_two_row,
    j_ideal,
    prime_component,
    radical_decomposition,
    specht_generators,
    specht_ideal,
    specht_polynomial,
    squarefree_ideal,
    squarefree_monomial_ideal,
    structured_elements,
    structured_groebner_set,
    syt_basis_rank,
    trimmed_form,
    vanishing_check,
)

# columns (3,6,4), (5,2), (1), (7)
EXAMPLE_421 = YoungTableau(((3, 5, 1, 7), (6, 2), (4,)))


def test_specht_polynomial_examples():
    assert specht_polynomial(EXAMPLE_421) == P("(x3-x6)*(x3-x4)*(x6-x4)*(x5-x2)", 7)
    assert specht_polynomial(YoungTableau(((4, 1, 3, 2),))) == Polynomial.constant(1, 4)
    assert specht_polynomial(YoungTableau(((1, 3), (2, 4)))) == P("(x1-x2)*(x3-x4)", 4)


def test_example_tableau_vanishes_on_its_column():
    f = specht_polynomial(EXAMPLE_421)
    assert f.evaluate([1, 9, 5, 5, 2, 5, 7]) == 0
    assert f.evaluate([1, 2, 3, 4, 5, 6, 7]) != 0


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 6)), st.data())
def test_column_swap_negates(letters, data):
    T = YoungTableau((tuple(letters[:2]), tuple(letters[2:4]), (letters[4],)))
    col = data.draw(st.sampled_from([(0, 1), (0, 2), (1, 2)]))
    # swap two entries in the first column (height 3)
    rows = [list(r) for r in T.rows]
    a, b = col
    rows[a][0], rows[b][0] = rows[b][0], rows[a][0]
    U = YoungTableau(tuple(tuple(r) for r in rows))
    assert specht_polynomial(U, 5) == -specht_polynomial(T, 5)


def test_equal_height_columns_commute():
    T = YoungTableau(((1, 3), (2, 4)))
    U = YoungTableau(((3, 1), (4, 2)))
    assert specht_polynomial(T) == specht_polynomial(U)


def test_generators():
    gens = [f for _, f in specht_generators((2, 1))]
    assert {g.monic() for g in gens} == {P("x2-x1", 3), P("x3-x1", 3)}
    (v,) = [f for _, f in specht_generators((1, 1, 1))]
    assert v.degree() == 3
    quad = [f for _, f in specht_generators((2, 2))]
    assert len(quad) == 2 and all(f.homogeneous_degree() == 2 for f in quad)


def test_spec_and_family():
    assert classify((3, 2)) is Family.TWO_ROW
    assert classify((5,)) is Family.TWO_ROW
    assert classify((2, 2, 1)) is Family.HOOK_TWO_ROW
    assert classify((2, 1, 1)) is Family.COLUMN_HOOK
    assert classify((3, 2, 2)) is Family.GENERAL
    s = SpechtIdealSpec.of((4, 2))
    assert s.n == 6 and s.height == 4 and s.expected_dimension == 2
    with pytest.raises(ShapeError):
        SpechtIdealSpec.of((2, 2), 5)


def test_initial_monomial_two_row():
    assert initial_monomial_two_row(YoungTableau(((1, 3), (2, 4)))) == Monomial((0, 1, 0, 1))
    assert initial_monomial_two_row(YoungTableau(((1, 2), (3, 4)))) == Monomial((0, 0, 1, 1))
    assert initial_monomial_two_row(YoungTableau(((1, 2, 3),))) == Monomial((0, 0, 0))


@pytest.mark.parametrize("n", range(2, 9))
def test_two_row_initial_terms_match_expansion(n):
    for d in range(0, n // 2 + 1):
        seen = set()
        for T in enumerate_standard_tableaux((n - d, d) if d else (n,)):
            lm = specht_polynomial(T, n).leading_monomial()
            assert lm == initial_monomial_two_row(T, n)
            seen.add(lm)
        assert len(seen) == count_syt_hook((n - d, d) if d else (n,))


def test_trimmed_form_examples():
    f = P("x1*x4^2 - 2*x2*x3^2 + 3*x1*x3*x4 - x2*x3*x4", 4)
    assert trimmed_form(f, 2) == P("x1*x4^2 - 2*x2*x3^2", 4)
    g = P("x1^2 - x2*x3", 4)
    assert trimmed_form(g, 2) == g
    h = P("x1*(x1-x2)*(x3-x4)", 4)
    assert trimmed_form(h, 2) == P("x1^2*x3 - x1^2*x4", 4)


def test_squarefree():
    assert [str(g) for g in squarefree_ideal(3, 3).generators] == ["x1*x2*x3"]
    assert len(squarefree_monomial_ideal(4, 3).gens) == 4
    assert len(squarefree_monomial_ideal(6, 4).gens) == 15


def test_structured_set_d2_contents():
    S = structured_groebner_set(2)
    assert P("x1^2*x2^2", 4) in S
    specht_quadrics = [f for f in S if f.homogeneous_degree() == 2]
    assert len(specht_quadrics) == 2
    cubes = [f for f in S if len(f) == 1 and f.homogeneous_degree() == 3]
    assert len(cubes) == 4
    assert is_groebner_basis(S)
    with pytest.raises(ValueError):
        structured_groebner_set(2, n=5)


def test_structured_elements_are_trimmed_forms():
    # every x^{2F} f_T' coincides with trm(x^F f_T) for the tableau with F in the bottom row
    for el in structured_elements(2):
        assert trimmed_form(el.polynomial, 2) == el.polynomial


def test_structured_set_generates_j():
    J = j_ideal(2)
    assert ideals_equal(Ideal(structured_groebner_set(2), 4), J)


def test_prime_components():
    assert prime_component([1], 4).is_zero()
    assert prime_component([1, 2], 3) == Ideal.from_strings(["x1-x2"], 3)
    P3 = prime_component([1, 2, 3], 3)
    assert P3 == Ideal.from_strings(["x1-x2", "x1-x3"], 3)
    assert len(P3.groebner_basis()) == 2
    with pytest.raises(ValueError):
        prime_component([], 3)
    with pytest.raises(ValueError):
        prime_component([1, 5], 4)


def test_component_counts():
    assert len(component_sets((2, 2))) == 4
    assert all(len(F) == 3 for F in component_sets((2, 2)))
    assert len(component_sets((2, 2, 1))) == 10
    assert component_sets((3, 1)) == [(1, 2, 3, 4)]
    with pytest.raises(UnsupportedFamily):
        component_sets((2, 1, 1))


@pytest.mark.parametrize("shape", [(2, 2), (3, 2), (2, 2, 1)])
def test_radical_decomposition(shape):
    assert intersect_all(radical_decomposition(shape)) == specht_ideal(shape)


def test_vanishing_examples():
    gens = [f for _, f in specht_generators((2, 2))]
    assert all(f.evaluate([5, 5, 5, 2]) == 0 for f in gens)
    assert any(f.evaluate([0, 1, 2, 3]) != 0 for f in gens)
    assert all(f.evaluate([4, 4, 4]) == 0 for _, f in specht_generators((2, 1)))
    rep = vanishing_check((3, 2), trials=30, seed=1)
    assert rep.ok and rep.equal_set_size == 4


def test_vanishing_is_seeded():
    a = vanishing_check((2, 2, 1), trials=10, seed=5)
    b = vanishing_check((2, 2, 1), trials=10, seed=5)
    assert a == b


@pytest.mark.parametrize("shape", [(2, 2), (3, 1), (2, 2, 1), (3, 2), (2, 1, 1)])
def test_dimension_is_n_minus_first_row(shape):
    from specht_hilbert.hilbert import series_of_quotient

    spec = SpechtIdealSpec.of(shape)
    assert series_of_quotient(specht_ideal(spec)).dimension == spec.expected_dimension


def test_basis_rank_small():
    assert syt_basis_rank((2, 2)).rank == 2
    assert syt_basis_rank((1, 1, 1)).rank == 1
    r = syt_basis_rank((2, 2, 1), check_all_tableaux=True)
    assert r.rank == 5 and r.ok


def test_ideal_over_prime_field():
    I = specht_ideal((2, 2), GF(3))
    assert I.field == GF(3)
    lms_q = specht_ideal((2, 2)).groebner_basis().leading_monomials()
    assert I.groebner_basis().leading_monomials() == lms_q


@pytest.mark.parametrize("d,outside", [(2, 0), (3, 2)])
def test_reduced_basis_against_structured_set(d, outside):
    # the reduced basis shares leading monomials with the structured set, but its
    # tails are interreduced, so for d = 3 two elements are not structured elements
    S = structured_groebner_set(d)
    monic = {g.monic() for g in S}
    lms = {g.leading_monomial() for g in S}
    R = j_ideal(d).groebner_basis()
    assert set(R.leading_monomials()) <= lms
    assert sum(g not in monic for g in R) == outside
