"""Specht ideals, Groebner bases over QQ and GF(p), and Hilbert series of their quotients."""

from .algebra import GF, GREVLEX, LEX, QQ, Field, Monomial, MonomialOrder, Polynomial
from .combinatorics import (
    Partition,
    YoungTableau,
    count_syt_hook,
    enumerate_partitions,
    enumerate_standard_tableaux,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    MonomialIdeal,
    buchberger,
    contract_to_subring,
    initial_ideal,
    intersect,
    is_groebner_basis,
    normal_form,
    quotient_by_linear,
    s_polynomial,
)
from .hilbert import (
    HilbertSeries,
    closed_form,
    closed_form_hook,
    closed_form_two_row,
    regularity_cm,
    series_from_monomial_ideal,
    series_of_quotient,
)
from .parsing import parse_polynomial
from .specht import (
    SpechtIdealSpec,
    prime_component,
    radical_decomposition,
    specht_ideal,
    specht_polynomial,
    structured_groebner_set,
    trimmed_form,
)

__version__ = "0.1.0"
