"""Specht polynomials, Specht ideals, trimmed forms, prime components and vanishing checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .algebra import (
    LEX,
    QQ,
    BITS,
    SLOT,
    Monomial,
    Polynomial,
    as_field,
    GF,
    support_bits,
)
from .combinatorics import (
    Partition,
    ShapeError,
    YoungTableau,
    as_partition,
    count_syt_hook,
    enumerate_standard_tableaux,
    normalize_columns,
)
from .groebner import Ideal, MonomialIdeal, intersect_all

VANISHING_PRIME = 2147483647  # 2^31 - 1


class Family(str, Enum):
    TWO_ROW = "TwoRow"
    HOOK_TWO_ROW = "HookTwoRow"
    COLUMN_HOOK = "ColumnHook"
    GENERAL = "General"


class UnsupportedFamily(ValueError):
    pass


def classify(shape) -> Family:
    lam = as_partition(shape)
    parts = lam.parts
    if len(parts) <= 2:
        return Family.TWO_ROW
    if len(parts) == 3 and parts[0] == parts[1] and parts[2] == 1:
        return Family.HOOK_TWO_ROW
    if all(p == 1 for p in parts[1:]):
        return Family.COLUMN_HOOK
    return Family.GENERAL


@dataclass(frozen=True)
class SpechtIdealSpec:
    shape: Partition
    n: int
    family: Family

    @classmethod
    def of(cls, shape, n: int | None = None) -> "SpechtIdealSpec":
        lam = as_partition(shape)
        n = lam.n if n is None else n
        if n != lam.n:
            raise ShapeError(f"{lam} is a partition of {lam.n}, not {n}")
        return cls(lam, n, classify(lam))

    @property
    def height(self) -> int:
        return self.shape[0]

    @property
    def expected_dimension(self) -> int:
        return self.n - self.shape[0]


# ------------------------------------------------------------ polynomials


def _difference(i: int, j: int, n: int, field) -> Polynomial:
    return Polynomial({1 << (BITS * (i - 1)): 1, 1 << (BITS * (j - 1)): -1}, n, field)


def specht_polynomial(T: YoungTableau, n: int | None = None, field=QQ) -> Polynomial:
    """Product over columns of (x_a - x_b) for a above b in the same column."""
    field = as_field(field)
    n = max(T.letters) if n is None else n
    f = Polynomial.constant(1, n, field)
    for col in T.columns():
        for s, t in combinations(col, 2):
            f = f * _difference(s, t, n, field)
    return f


def specht_generators(shape, n: int | None = None, field=QQ) -> list[tuple[YoungTableau, Polynomial]]:
    lam = as_partition(shape)
    n = lam.n if n is None else n
    return [(T, specht_polynomial(T, n, field)) for T in enumerate_standard_tableaux(lam)]


def specht_ideal(spec, field=QQ, order=None) -> Ideal:
    """Ideal generated by f_T over standard tableaux T of the shape."""
    if not isinstance(spec, SpechtIdealSpec):
        spec = SpechtIdealSpec.of(spec)
    field = as_field(field)
    gens = [f for _, f in specht_generators(spec.shape, spec.n, field)]
    return Ideal(gens, spec.n, field, order)


def initial_monomial_two_row(T: YoungTableau, n: int | None = None) -> Monomial:
    """Leading lex monomial of f_T for a two-row tableau: the product of the
    larger entry of each height-2 column."""
    if len(T.rows) > 2:
        raise ShapeError(f"two-row tableau expected, got shape {T.shape}")
    n = max(T.letters) if n is None else n
    U = normalize_columns(T)
    bottom = U.rows[1] if len(U.rows) == 2 else ()
    return Monomial.squarefree(bottom, n)


# ----------------------------------------------------------- trimmed forms


def trimmed_form(f: Polynomial, d: int) -> Polynomial:
    """Drop every term whose support has at least d+1 variables."""
    keep = {}
    for m, c in f.terms.items():
        if bin(support_bits(m, f.n)).count("1") <= d:
            keep[m] = c
    return Polynomial(keep, f.n, f.field, _canonical=True)


def squarefree_monomials(n: int, k: int) -> list[Monomial]:
    return [Monomial.squarefree(S, n) for S in combinations(range(1, n + 1), k)]


def squarefree_monomial_ideal(n: int, k: int) -> MonomialIdeal:
    """The ideal m^<k> of all squarefree monomials of degree k."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return MonomialIdeal.from_monomials(squarefree_monomials(n, k), n)


def squarefree_ideal(n: int, k: int, field=QQ, order=None) -> Ideal:
    field = as_field(field)
    return Ideal([Polynomial.monomial(m, field) for m in squarefree_monomials(n, k)], n, field, order)


def j_ideal(d: int, field=QQ, order=None) -> Ideal:
    """J_(d,d) = I_(d,d) + m^<d+1> in 2d variables."""
    field = as_field(field)
    n = 2 * d
    I = specht_ideal(SpechtIdealSpec.of((d, d)), field, order)
    return I + squarefree_ideal(n, d + 1, field, order)


def _tableau_shape_rows(d: int, c: int):
    return (d,) if c == d else (d, d - c)


def tableaux_on(shape_parts, letters, standard_only: bool = True):
    """Tableaux of the given shape on a letter set: standard ones, or all fillings."""
    if standard_only:
        return enumerate_standard_tableaux(Partition(shape_parts), letters)
    from itertools import permutations

    letters = sorted(letters)
    out = []
    for perm in permutations(letters):
        rows, pos = [], 0
        for length in shape_parts:
            rows.append(tuple(perm[pos:pos + length]))
            pos += length
        out.append(YoungTableau(tuple(rows)))
    return out


@dataclass(frozen=True)
class TrimmedElement:
    F: frozenset[int]
    tableau: YoungTableau
    polynomial: Polynomial


def structured_elements(d: int, field=QQ, standard_only: bool = True) -> list[TrimmedElement]:
    """x^{2F} f_{T'} for F ⊆ [2d], |F| <= d, T' of shape (d, d-|F|) on [2d] \\ F."""
    if d < 2:
        raise ValueError("structured basis needs d >= 2")
    field = as_field(field)
    n = 2 * d
    out = []
    for c in range(d + 1):
        for F in combinations(range(1, n + 1), c):
            rest = [i for i in range(1, n + 1) if i not in F]
            sq = Monomial.squarefree(F, n, power=2)
            for T in tableaux_on(_tableau_shape_rows(d, c), rest, standard_only):
                f = specht_polynomial(T, n, field).mul_monomial(sq)
                out.append(TrimmedElement(frozenset(F), T, f))
    return out


def structured_groebner_set(d: int, n: int | None = None, field=QQ, standard_only: bool = True) -> list[Polynomial]:
    """Trimmed Specht polynomials together with the squarefree (d+1)-monomials.

    Duplicates (including sign-flipped duplicates) are removed; the result is
    ordered by F-size, then F, then tableau, then the monomial generators.
    """
    if n is not None and n != 2 * d:
        raise ValueError(f"structured basis lives in n = 2d = {2 * d} variables, got n={n}")
    field = as_field(field)
    seen = set()
    out = []
    for el in structured_elements(d, field, standard_only):
        f = el.polynomial.monic()
        if f not in seen:
            seen.add(f)
            out.append(el.polynomial)
    for m in squarefree_monomials(2 * d, d + 1):
        out.append(Polynomial.monomial(m, field))
    return out


# -------------------------------------------------------- prime components


def prime_component(F, n: int, field=QQ, order=None) -> Ideal:
    """P_F = (x_i - x_min(F) : i in F)."""
    F = sorted(set(F))
    if not F:
        raise ValueError("P_F needs a nonempty F")
    if F[-1] > n or F[0] < 1:
        raise ValueError(f"F={F} is not a subset of [1..{n}]")
    field = as_field(field)
    a = F[0]
    gens = [_difference(i, a, n, field) for i in F[1:]]
    return Ideal(gens, n, field, order)


def component_size(spec: SpechtIdealSpec) -> int:
    lam = spec.shape
    if spec.family is Family.TWO_ROW:
        return spec.n - (lam[1] if len(lam) > 1 else 0) + 1
    if spec.family is Family.HOOK_TWO_ROW:
        return lam[0] + 1
    raise UnsupportedFamily(f"no radical decomposition for {lam}")


def component_sets(spec) -> list[tuple[int, ...]]:
    if not isinstance(spec, SpechtIdealSpec):
        spec = SpechtIdealSpec.of(spec)
    k = component_size(spec)
    return list(combinations(range(1, spec.n + 1), k))


def radical_decomposition(spec, field=QQ) -> list[Ideal]:
    """The primes P_F whose intersection is the Specht ideal ((n-d,d) and (d,d,1) shapes)."""
    if not isinstance(spec, SpechtIdealSpec):
        spec = SpechtIdealSpec.of(spec)
    return [prime_component(F, spec.n, field) for F in component_sets(spec)]


def intersect_components(spec, field=QQ) -> Ideal:
    comps = radical_decomposition(spec, field)
    nontrivial = [P for P in comps if not P.is_zero()]
    if len(nontrivial) < len(comps):
        return Ideal([], comps[0].n, comps[0].field)
    return intersect_all(nontrivial)


# ---------------------------------------------------------------- vanishing


@dataclass
class VanishingReport:
    shape: Partition
    trials: int
    equal_set_size: int
    failures: list
    controls_nonzero: int

    @property
    def ok(self) -> bool:
        return not self.failures and self.controls_nonzero == self.trials


def vanishing_check(spec, trials: int = 200, seed: int = 0, prime: int = VANISHING_PRIME) -> VanishingReport:
    """Random evaluation of the generators on points with a forced coincidence pattern.

    Each trial picks F of the component size, sets all coordinates in F to
    one random value and the rest generically; every generator must vanish.
    A fully random control point must make some generator nonzero.
    """
    if not isinstance(spec, SpechtIdealSpec):
        spec = SpechtIdealSpec.of(spec)
    k = component_size(spec)
    field = GF(prime)
    gens = [f for _, f in specht_generators(spec.shape, spec.n, field)]
    rng = random.Random(seed)
    failures = []
    controls = 0
    n = spec.n
    for trial in range(trials):
        F = rng.sample(range(n), k)
        common = rng.randrange(prime)
        point = [rng.randrange(prime) for _ in range(n)]
        for i in F:
            point[i] = common
        for idx, f in enumerate(gens):
            if f.evaluate(point) != 0:
                failures.append({"trial": trial, "F": sorted(i + 1 for i in F), "generator": idx})
                break
        control = [rng.randrange(prime) for _ in range(n)]
        if any(f.evaluate(control) != 0 for f in gens):
            controls += 1
    return VanishingReport(spec.shape, trials, k, failures, controls)


# --------------------------------------------------------------- basis rank


def coefficient_rank(polys: list[Polynomial], prime: int | None = None) -> int:
    """Rank of the coefficient matrix (exact over QQ, or over GF(prime))."""
    from .linalg import rank

    monos = sorted({m for f in polys for m in f.terms}, reverse=True)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for f in polys:
        row = [0] * len(monos)
        for m, c in f.terms.items():
            row[col[m]] = c
        rows.append(row)
    return rank(rows, prime)


@dataclass
class BasisRankReport:
    shape: Partition
    rank: int
    syt_count: int
    initial_monomials_distinct: bool
    spans_all_tableaux: bool | None = None

    @property
    def ok(self) -> bool:
        return self.rank == self.syt_count and self.initial_monomials_distinct and self.spans_all_tableaux is not False


def syt_basis_rank(shape, check_all_tableaux: bool = False) -> BasisRankReport:
    """Rank of {f_T : T standard} and distinctness of their lex leading monomials.

    With ``check_all_tableaux`` the rank is also compared against the span
    of f_T over every filling of the shape.
    """
    lam = as_partition(shape)
    if lam.n > 8:
        raise ValueError("syt_basis_rank is limited to n <= 8")
    gens = [f for _, f in specht_generators(lam)]
    r = coefficient_rank(gens)
    inits = [next(iter(f.terms)) for f in gens]
    distinct = len(set(inits)) == len(inits)
    spans = None
    if check_all_tableaux:
        all_polys = [specht_polynomial(T, lam.n) for T in tableaux_on(lam.parts, range(1, lam.n + 1), False)]
        unique = list({f.monic(): f for f in all_polys}.values())
        spans = coefficient_rank(unique) == r and coefficient_rank(unique + gens) == r
    return BasisRankReport(lam, r, count_syt_hook(lam), distinct, spans)
