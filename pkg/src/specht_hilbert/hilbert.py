"""Hilbert series of quotient rings, closed forms for the two families, and identity checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Iterable, Sequence

from .algebra import BITS, QQ, SLOT, GF, as_field, guard_mask, mono_degree
from .groebner import Ideal, MonomialIdeal, initial_ideal, quotient_by_linear


class OutOfRange(ValueError):
    """Closed forms are only offered where they are proved; other inputs are rejected."""


# -------------------------------------------------------- integer polynomials


def _trim(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pscale(a, k):
    return _trim([k * x for x in a])


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus_t_pow(k: int) -> list[int]:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def _divide_one_minus_t(p):
    """Exact division by (1 - t); caller guarantees p(1) == 0."""
    # p = (1 - t) q  =>  q_i = sum_{j<=i} p_j
    q = []
    acc = 0
    for x in p[:-1]:
        acc += x
        q.append(acc)
    return _trim(q or [0])


# ------------------------------------------------------------- series type


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^denom_exponent with integer numerator.

    Stored canonically: (1 - t) is divided out of the numerator while the
    denominator allows it, so equality of series is equality of fields.
    """

    numerator: tuple[int, ...]
    denom_exponent: int

    def __init__(self, numerator: Sequence[int], denom_exponent: int, canonicalize: bool = True):
        num = _trim([int(x) for x in numerator])
        e = int(denom_exponent)
        if e < 0:
            raise ValueError("negative denominator exponent")
        if canonicalize:
            while e > 0 and any(num) and sum(num) == 0:
                num = _divide_one_minus_t(num)
                e -= 1
            if not any(num):
                e = 0
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "denom_exponent", e)

    @property
    def is_canonical(self) -> bool:
        if not any(self.numerator):
            return self.denom_exponent == 0
        return self.denom_exponent == 0 or sum(self.numerator) != 0

    @property
    def dimension(self) -> int:
        """Krull dimension of the quotient: the pole order at t = 1."""
        return self.denom_exponent

    @property
    def numerator_degree(self) -> int:
        return len(self.numerator) - 1 if any(self.numerator) else -1

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    # arithmetic on rational functions ------------------------------------
    def _lift(self, e: int) -> list[int]:
        return _pmul(list(self.numerator), _one_minus_t_pow(e - self.denom_exponent))

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        e = max(self.denom_exponent, other.denom_exponent)
        return HilbertSeries(_padd(self._lift(e), other._lift(e)), e)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        e = max(self.denom_exponent, other.denom_exponent)
        return HilbertSeries(_padd(self._lift(e), _pscale(other._lift(e), -1)), e)

    def times_t_over_one_minus_t(self) -> "HilbertSeries":
        return HilbertSeries([0] + list(self.numerator), self.denom_exponent + 1)

    def divide_by_one_minus_t(self) -> "HilbertSeries":
        return HilbertSeries(self.numerator, self.denom_exponent + 1)

    def times_one_minus_t(self) -> "HilbertSeries":
        return HilbertSeries(_pmul(list(self.numerator), [1, -1]), self.denom_exponent)

    # expansion ---------------------------------------------------------
    def coefficient(self, k: int) -> int:
        e = self.denom_exponent
        if e == 0:
            return self.numerator[k] if k < len(self.numerator) else 0
        return sum(h * comb(k - i + e - 1, e - 1) for i, h in enumerate(self.numerator) if i <= k)

    def expand(self, upto: int) -> list[int]:
        return [self.coefficient(k) for k in range(upto + 1)]

    def hilbert_function(self, upto: int) -> "HilbertFunction":
        return HilbertFunction(tuple(self.expand(upto)), self.denom_exponent, self.numerator_degree - self.denom_exponent + 1)

    # io ------------------------------------------------------------------
    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "denom_exponent": self.denom_exponent}

    @classmethod
    def from_json(cls, data: dict) -> "HilbertSeries":
        return cls(data["numerator"], data["denom_exponent"])

    def __str__(self) -> str:
        num = _format_poly_t(self.numerator)
        e = self.denom_exponent
        if e == 0:
            return num
        den = "(1-t)" if e == 1 else f"(1-t)^{e}"
        if sum(1 for x in self.numerator if x) > 1:
            num = f"({num})"
        return f"{num}/{den}"


def _format_poly_t(coeffs: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        body = str(mag) if i == 0 or mag != 1 else ""
        body = body + mono if body else mono
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(sign + body)
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class HilbertFunction:
    """Values dim_K [R/I]_k for k = 0..len(values)-1.

    From degree ``polynomial_from`` on, the values agree with a polynomial of
    degree dimension - 1.
    """

    values: tuple[int, ...]
    dimension: int
    polynomial_from: int

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def one_over_one_minus_t(e: int) -> HilbertSeries:
    return HilbertSeries([1], e)


# ------------------------------------------------- monomial ideal series


def monomial_numerator(gens: Iterable[int], n: int) -> list[int]:
    """K-polynomial: H(R/M) = K(t) / (1-t)^n, by pivot-variable recursion.

    K(M) = K(M + (x)) + t * K(M : x) for a pivot variable x, with the base case
    of pairwise coprime generators, where K = prod (1 - t^deg g).
    """
    memo: dict[tuple[int, ...], list[int]] = {}
    guard = guard_mask(n)

    def support(m):
        return m | 0

    def rec(gens: tuple[int, ...]) -> list[int]:
        hit = memo.get(gens)
        if hit is not None:
            return hit
        if 0 in gens:
            memo[gens] = [0]
            return [0]
        # coprime base case
        used = 0
        coprime = True
        for g in gens:
            s = (g + _low(n)) & guard
            if used & s:
                coprime = False
                break
            used |= s
        if coprime:
            out = [1]
            for g in gens:
                dg = mono_degree(g)
                factor = [0] * (dg + 1)
                factor[0] += 1
                factor[dg] -= 1
                out = _pmul(out, factor)
            memo[gens] = out
            return out
        # pivot: the variable occurring in the most generators
        counts = [0] * n
        for g in gens:
            for i in range(n):
                if (g >> (BITS * i)) & SLOT:
                    counts[i] += 1
        i = max(range(n), key=lambda j: counts[j])
        x = 1 << (BITS * i)
        slot = SLOT << (BITS * i)
        with_x = _minimal(tuple(g for g in gens if not g & slot) + (x,), n)
        colon = _minimal(tuple(g - x if g & slot else g for g in gens), n)
        out = _padd(rec(with_x), [0] + rec(colon))
        memo[gens] = out
        return out

    return rec(_minimal(tuple(gens), n))


_LOW_CACHE: dict[int, int] = {}


def _low(n):
    v = _LOW_CACHE.get(n)
    if v is None:
        from .algebra import low_mask

        v = _LOW_CACHE[n] = low_mask(n)
    return v


def _minimal(gens: tuple[int, ...], n: int) -> tuple[int, ...]:
    from .groebner import minimalize

    return tuple(sorted(minimalize(gens, n)))


def series_from_monomial_ideal(M: MonomialIdeal | Sequence[int], n: int | None = None) -> HilbertSeries:
    if isinstance(M, MonomialIdeal):
        gens, n = M.gens, M.n
    else:
        gens = tuple(M)
        if n is None:
            raise ValueError("n is required for a bare generator list")
    return HilbertSeries(monomial_numerator(gens, n), n)


def count_standard_monomials(M: MonomialIdeal, degree: int) -> int:
    """Number of degree-k monomials outside M, by direct enumeration."""
    n = M.n
    total = 0
    for combo in combinations_with_replacement(range(n), degree):
        m = 0
        for i in combo:
            m += 1 << (BITS * i)
        if not M.contains(m):
            total += 1
    return total


def series_of_quotient(I: Ideal) -> HilbertSeries:
    """H(R/I, t) through the reduced Groebner basis and its initial ideal."""
    if I.is_zero():
        return one_over_one_minus_t(I.n)
    M = initial_ideal(I.groebner_basis())
    return series_from_monomial_ideal(M)


# ---------------------------------------------------------- closed forms


def closed_form_two_row(n: int, d: int) -> HilbertSeries:
    """Hilbert series of R/I_(n-d,d).

    h_i = C(n-d+i-1, i) for 1 <= i <= d-1 and h_d = C(n-1, d-2), over (1-t)^d.
    d = 1 gives 1/(1-t).
    """
    if d == 1 and n >= 2:
        return one_over_one_minus_t(1)
    if not (d >= 2 and n - d >= d):
        raise OutOfRange(f"closed form needs n-d >= d >= 2 (or d = 1), got n={n}, d={d}")
    h = [1] + [comb(n - d + i - 1, i) for i in range(1, d)] + [comb(n - 1, d - 2)]
    return HilbertSeries(h, d)


def closed_form_hook(d: int) -> HilbertSeries:
    """Hilbert series of R/I_(d,d,1), n = 2d+1: h_i = C(d+i-1, i), 1 <= i <= d+1."""
    if d < 1:
        raise OutOfRange(f"closed form for (d,d,1) needs d >= 1, got {d}")
    return HilbertSeries([comb(d + i - 1, i) for i in range(d + 2)], d + 1)


def closed_form(shape) -> HilbertSeries:
    """Closed form for a two-row or (d,d,1) shape; anything else is rejected."""
    from .combinatorics import as_partition

    lam = as_partition(shape)
    parts = lam.parts
    if len(parts) == 1:
        raise OutOfRange(f"no closed form for the one-row shape {lam}")
    if len(parts) == 2:
        return closed_form_two_row(lam.n, parts[1])
    if len(parts) == 3 and parts[0] == parts[1] and parts[2] == 1:
        return closed_form_hook(parts[0])
    raise OutOfRange(f"{lam} is outside the two-row and (d,d,1) families")


def regularity_cm(series: HilbertSeries) -> int:
    """Castelnuovo-Mumford regularity of a Cohen-Macaulay quotient: the numerator degree.

    The Cohen-Macaulay hypothesis is the caller's responsibility.
    """
    if not isinstance(series, HilbertSeries) or not series.is_canonical:
        raise ValueError("regularity_cm needs a canonical HilbertSeries")
    return series.numerator_degree


# ----------------------------------------------------------- identities


def _specht_series(shape, field=QQ) -> HilbertSeries:
    from .specht import SpechtIdealSpec, specht_ideal

    return series_of_quotient(specht_ideal(SpechtIdealSpec.of(shape), field))


def two_row_series(n: int, d: int, method: str = "closed-form", field=QQ) -> HilbertSeries:
    if method == "closed-form":
        return closed_form_two_row(n, d)
    return _specht_series((n - d, d) if d else (n,), field)


def hook_series(d: int, method: str = "closed-form", field=QQ) -> HilbertSeries:
    if method == "closed-form":
        return closed_form_hook(d)
    return _specht_series((d, d, 1), field)


def recursion_check_two_row(n: int, d: int, method: str = "closed-form") -> bool:
    """H(R/I_(n-d,d)) == H(S/I_(n-d-1,d)) + t/(1-t) H(S/I_(n-d,d-1))."""
    if not (n - d > d >= 2):
        raise OutOfRange(f"two-row recursion needs n-d > d >= 2, got n={n}, d={d}")
    lhs = two_row_series(n, d, method)
    rhs = two_row_series(n - 1, d, method) + two_row_series(n - 1, d - 1, method).times_t_over_one_minus_t()
    return lhs == rhs


def recursion_check_square(d: int, method: str = "closed-form") -> bool:
    """H(R/I_(d,d)) == H(S/I_(d-1,d-1,1)) + t/(1-t) H(S/I_(d,d-1))."""
    if d < 2:
        raise OutOfRange(f"square recursion needs d >= 2, got {d}")
    lhs = two_row_series(2 * d, d, method)
    rhs = hook_series(d - 1, method) + two_row_series(2 * d - 1, d - 1, method).times_t_over_one_minus_t()
    return lhs == rhs


@dataclass
class SesReport:
    d: int
    pi_image: HilbertSeries
    square: HilbertSeries
    squarefree: HilbertSeries
    j_ideal: HilbertSeries
    hook: HilbertSeries
    alternating_sum_ok: bool
    regular_element_ok: bool

    @property
    def ok(self) -> bool:
        return self.alternating_sum_ok and self.regular_element_ok


def ses_check_jdd(d: int, field=QQ) -> SesReport:
    """Hilbert-series form of 0 -> S/pi(I_(d,d,1)) -> S/I_(d,d) + S/m^<d+1> -> S/J_(d,d) -> 0.

    All four series are computed from Groebner bases; additionally
    H(R/I_(d,d,1)) must equal H(S/pi(I_(d,d,1))) / (1-t).
    """
    from .specht import SpechtIdealSpec, j_ideal, specht_ideal, squarefree_ideal

    field = as_field(field)
    hook_ideal = specht_ideal(SpechtIdealSpec.of((d, d, 1)), field)
    pi = quotient_by_linear(hook_ideal)
    h_pi = series_of_quotient(pi)
    h_sq = series_of_quotient(specht_ideal(SpechtIdealSpec.of((d, d)), field))
    h_m = series_of_quotient(squarefree_ideal(2 * d, d + 1, field))
    h_j = series_of_quotient(j_ideal(d, field))
    h_hook = series_of_quotient(hook_ideal)
    return SesReport(
        d,
        h_pi,
        h_sq,
        h_m,
        h_j,
        h_hook,
        h_pi + h_j == h_sq + h_m,
        h_pi.divide_by_one_minus_t() == h_hook,
    )


@dataclass
class CharReport:
    label: str
    series: dict
    ok: bool


def char_independence_check(builder: Callable, primes: Sequence[int] = (2, 3, 5), label: str = "") -> CharReport:
    """Series of builder(field) over QQ and each GF(p) must coincide."""
    out = {"q": series_of_quotient(builder(QQ))}
    for p in primes:
        out[f"fp:{p}"] = series_of_quotient(builder(GF(p)))
    ref = out["q"]
    return CharReport(label, out, all(s == ref for s in out.values()))
