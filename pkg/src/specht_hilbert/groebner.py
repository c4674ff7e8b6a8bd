"""Buchberger's algorithm, normal forms, initial ideals and elimination.

The engine works on raw term dicts keyed by packed monomials (see
``algebra``); the public functions wrap and unwrap ``Polynomial`` values.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import (
    BITS,
    LEX,
    QQ,
    SLOT,
    Field,
    Monomial,
    MonomialOrder,
    Polynomial,
    as_field,
    as_order,
    format_monomial,
    guard_mask,
    mono_degree,
    mono_lcm,
    support_bits,
    var,
)

DEFAULT_DEGREE_CAP = 30


class DegreeCapExceeded(RuntimeError):
    """An intermediate polynomial went past the configured degree bound."""


class NotAGroebnerBasis(ValueError):
    pass


# ------------------------------------------------------------------ kernels


def _lead(terms: dict, key) -> int:
    if key is None:
        return max(terms)
    return max(terms, key=key)


def _to_element(terms: dict, key, p: int):
    """Monic basis element as (lead monomial, tail list)."""
    lm = _lead(terms, key)
    lc = terms[lm]
    if lc != 1:
        if p:
            inv = pow(int(lc), -1, p)
            terms = {m: c * inv % p for m, c in terms.items()}
        else:
            inv = 1 / lc
            terms = {m: c * inv for m, c in terms.items()}
    tail = [(m, c) for m, c in terms.items() if m != lm]
    return lm, tail


def _reduce(terms: dict, lms: list, tails: list, inv_lcs, guard: int, p: int, key) -> dict:
    """Full normal form of ``terms`` modulo the basis (lms[i], tails[i]).

    Terms are processed from the largest down; each is divided by the first
    basis element (in list order) whose lead monomial divides it.  Basis
    elements are monic unless ``inv_lcs`` supplies inverse lead coefficients.
    """
    work = dict(terms)
    if key is None:
        heap = [-m for m in work]
    else:
        back = {}
        heap = []
        for m in work:
            k = key(m)
            back[k] = m
            heap.append(-k)
    heapq.heapify(heap)
    push = heapq.heappush
    pop = heapq.heappop
    rem = {}
    nb = len(lms)
    while heap:
        k = -pop(heap)
        m = k if key is None else back[k]
        c = work.pop(m, None)
        if c is None:
            continue
        mg = m | guard
        idx = 0
        while idx < nb:
            if (mg - lms[idx]) & guard == guard:
                break
            idx += 1
        else:
            rem[m] = c
            continue
        q = m - lms[idx]
        coef = c if inv_lcs is None else c * inv_lcs[idx]
        if p:
            coef %= p
        for tm, tc in tails[idx]:
            mm = tm + q
            v = work.get(mm)
            if v is None:
                v = -coef * tc
                if p:
                    v %= p
                work[mm] = v
                if key is None:
                    push(heap, -mm)
                else:
                    kk = key(mm)
                    back[kk] = mm
                    push(heap, -kk)
            else:
                v -= coef * tc
                if p:
                    v %= p
                if v:
                    work[mm] = v
                else:
                    del work[mm]
    return rem


def _spoly(lm_a, tail_a, lm_b, tail_b, n, p) -> dict:
    """S-polynomial of two monic elements (lead terms already cancelled)."""
    L = mono_lcm(lm_a, lm_b, n)
    qa = L - lm_a
    qb = L - lm_b
    out = {}
    for m, c in tail_a:
        out[m + qa] = c
    for m, c in tail_b:
        mm = m + qb
        v = out.get(mm)
        v = -c if v is None else v - c
        if p:
            v %= p
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    if p:
        out = {m: c % p for m, c in out.items() if c % p}
    return out


class _Engine:
    """State of one Buchberger run (Gebauer-Moller pair management, normal strategy)."""

    def __init__(self, n: int, field: Field, order: MonomialOrder, degree_cap: int):
        self.n = n
        self.p = getattr(field, "p", 0)
        self.order = order
        self.key = None if order.is_lex else order.key_function(n)
        self.guard = guard_mask(n)
        self.cap = degree_cap
        self.lms: list[int] = []
        self.tails: list[list] = []
        self.supp: list[int] = []
        self.active: list[int] = []
        self.pairs: list = []
        self.live: set = set()
        self.stats = {"pairs": 0, "reductions_to_zero": 0, "coprime": 0, "chain": 0}

    def _sort_key(self, m):
        return m if self.key is None else self.key(m)

    def reduce(self, terms: dict) -> dict:
        act = self.active
        return _reduce(terms, [self.lms[i] for i in act], [self.tails[i] for i in act], None, self.guard, self.p, self.key)

    def add(self, terms: dict):
        lm, tail = _to_element(terms, self.key, self.p)
        if mono_degree(lm) > self.cap:
            raise DegreeCapExceeded(f"basis element of degree {mono_degree(lm)} exceeds cap {self.cap}")
        h = len(self.lms)
        self.lms.append(lm)
        self.tails.append(tail)
        self.supp.append(support_bits(lm, self.n))
        self._update(h)

    def _update(self, h: int):
        n, guard = self.n, self.guard
        lms, supp = self.lms, self.supp
        lm_h, s_h = lms[h], supp[h]

        def div(a, b):
            return ((b | guard) - a) & guard == guard

        C = [(i, mono_lcm(lms[i], lm_h, n)) for i in self.active]
        D = []
        while C:
            i, L = C.pop()
            if not (supp[i] & s_h):
                D.append((i, L))
                continue
            if any(div(L2, L) for _, L2 in C) or any(div(L2, L) for _, L2 in D):
                self.stats["chain"] += 1
                continue
            D.append((i, L))
        new_pairs = []
        for i, L in D:
            if supp[i] & s_h:
                new_pairs.append((i, L))
            else:
                self.stats["coprime"] += 1
        # chain criterion on the old pairs
        dead = []
        for pr in self.live:
            a, b, L = pr
            if div(lm_h, L) and mono_lcm(lms[a], lm_h, n) != L and mono_lcm(lms[b], lm_h, n) != L:
                dead.append(pr)
        for pr in dead:
            self.live.discard(pr)
            self.stats["chain"] += 1
        for i, L in new_pairs:
            pr = (i, h, L)
            self.live.add(pr)
            heapq.heappush(self.pairs, (mono_degree(L), self._sort_key(L), i, h, L))
        self.active = [g for g in self.active if not div(lm_h, lms[g])] + [h]

    def run(self):
        while self.pairs:
            _, _, i, j, L = heapq.heappop(self.pairs)
            pr = (i, j, L)
            if pr not in self.live:
                continue
            self.live.discard(pr)
            if mono_degree(L) > self.cap:
                raise DegreeCapExceeded(f"S-pair of degree {mono_degree(L)} exceeds cap {self.cap}")
            self.stats["pairs"] += 1
            s = _spoly(self.lms[i], self.tails[i], self.lms[j], self.tails[j], self.n, self.p)
            h = self.reduce(s) if s else s
            if h:
                self.add(h)
            else:
                self.stats["reductions_to_zero"] += 1

    def reduced_basis(self) -> list[dict]:
        idx = sorted(self.active, key=lambda i: self._sort_key(self.lms[i]))
        out = []
        for pos, i in enumerate(idx):
            others = idx[:pos] + idx[pos + 1:]
            tail = dict(self.tails[i])
            red = _reduce(tail, [self.lms[j] for j in others], [self.tails[j] for j in others], None, self.guard, self.p, self.key)
            red[self.lms[i]] = 1
            out.append(red)
        # second pass uses the reduced tails so the result is fully interreduced
        lms = [self.lms[i] for i in idx]
        tails = [[(m, c) for m, c in r.items() if m != lm] for r, lm in zip(out, lms)]
        final = []
        for pos, (r, lm) in enumerate(zip(out, lms)):
            others_l = lms[:pos] + lms[pos + 1:]
            others_t = tails[:pos] + tails[pos + 1:]
            tail = {m: c for m, c in r.items() if m != lm}
            red = _reduce(tail, others_l, others_t, None, self.guard, self.p, self.key)
            red[lm] = 1 if self.p else QQ.one
            final.append(red)
        return final


def _terms_in_field(f: Polynomial, field: Field) -> dict:
    return f.terms


def _sorted_poly(terms: dict, n: int, field: Field) -> Polynomial:
    return Polynomial._raw(terms, n, field)


# ------------------------------------------------------------- public types


@dataclass
class GroebnerBasis:
    elements: list[Polynomial]
    order: MonomialOrder = LEX
    reduced: bool = True
    stats: dict = dc_field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.elements[0].n if self.elements else 0

    def leading_monomials(self) -> list[Monomial]:
        return [f.leading_monomial(self.order) for f in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.elements == other.elements

    def to_json(self) -> dict:
        return {
            "order": self.order.name,
            "reduced": self.reduced,
            "basis": [str(f) for f in self.elements],
            "leading_monomials": [str(m) for m in self.leading_monomials()],
        }


@dataclass
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (packed monomials)."""

    gens: tuple[int, ...]
    n: int

    def __post_init__(self):
        self.gens = tuple(sorted(minimalize(self.gens, self.n)))

    @classmethod
    def from_monomials(cls, monos: Iterable[Monomial], n: int) -> "MonomialIdeal":
        return cls(tuple(m.packed() for m in monos), n)

    def monomials(self) -> list[Monomial]:
        return [Monomial.from_packed(m, self.n) for m in self.gens]

    def contains(self, mono) -> bool:
        m = mono.packed() if isinstance(mono, Monomial) else mono
        guard = guard_mask(self.n)
        return any(((m | guard) - g) & guard == guard for g in self.gens)

    def is_unit(self) -> bool:
        return 0 in self.gens

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.gens, self.n))

    def __str__(self):
        return "(" + ", ".join(format_monomial(m, self.n) for m in self.gens) + ")"


def minimalize(monos: Iterable[int], n: int) -> list[int]:
    """Drop every monomial divisible by another one in the list."""
    guard = guard_mask(n)
    ms = sorted(set(monos), key=mono_degree)
    keep: list[int] = []
    for m in ms:
        mg = m | guard
        if not any((mg - g) & guard == guard for g in keep):
            keep.append(m)
    return keep


class Ideal:
    """Ideal of K[x_1..x_n] given by generators, with a cached reduced Groebner basis."""

    def __init__(self, generators: Iterable[Polynomial], n: int | None = None, field=None, order=None, *, degree_cap: int = DEFAULT_DEGREE_CAP):
        gens = [g for g in generators]
        if n is None:
            if not gens:
                raise ValueError("n is required for an ideal without generators")
            n = gens[0].n
        if field is None:
            field = gens[0].field if gens else QQ
        self.field = as_field(field)
        self.n = n
        self.order = as_order(order)
        for g in gens:
            if g.n != n:
                raise ValueError(f"generator in {g.n} variables, ideal in {n}")
            if g.field != self.field:
                from .algebra import CharacteristicMismatch

                raise CharacteristicMismatch(f"generator over {g.field}, ideal over {self.field}")
        self.generators = [g for g in gens if not g.is_zero()]
        self.degree_cap = degree_cap
        self._gb: GroebnerBasis | None = None

    @classmethod
    def from_strings(cls, texts: Sequence[str], n: int, field=QQ, order=None) -> "Ideal":
        from .parsing import parse_polynomial

        field = as_field(field)
        return cls([parse_polynomial(t, n, field) for t in texts], n, field, order)

    def groebner_basis(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def with_order(self, order) -> "Ideal":
        return Ideal(self.generators, self.n, self.field, order, degree_cap=self.degree_cap)

    def change_field(self, field) -> "Ideal":
        field = as_field(field)
        gens = [g.change_ring(field=field) for g in self.generators]
        return Ideal(gens, self.n, field, self.order, degree_cap=self.degree_cap)

    def contains(self, f: Polynomial) -> bool:
        gb = self.groebner_basis()
        return normal_form(f, gb.elements, self.order).is_zero()

    def is_zero(self) -> bool:
        return not self.generators

    def __contains__(self, f):
        return self.contains(f)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + other.generators, self.n, self.field, self.order, degree_cap=self.degree_cap)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideals_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]}, n={self.n}, field={self.field!r})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.descriptor(),
            "order": self.order.name,
            "generators": [str(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, data) -> "Ideal":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, list):
            from .parsing import infer_nvars

            data = {"generators": data, "n": infer_nvars(data)}
        gens = data["generators"]
        n = data.get("n")
        if n is None:
            from .parsing import infer_nvars

            n = infer_nvars(gens)
        return cls.from_strings(gens, n, as_field(data.get("field", "q")), data.get("order", "lex"))


# ------------------------------------------------------------ operations


def _unpack_list(G: Sequence[Polynomial]):
    if not G:
        return None, None
    n, field = G[0].n, G[0].field
    for g in G:
        if g.n != n or g.field != field:
            raise ValueError("basis polynomials must share ambient and field")
        if g.is_zero():
            raise ValueError("zero polynomial in basis")
    return n, field


def s_polynomial(f: Polynomial, g: Polynomial, order=LEX) -> Polynomial:
    """lcm-scaled combination of f and g cancelling their leading terms."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    f._check(g)
    order = as_order(order)
    key = None if order.is_lex else order.key_function(f.n)
    p = getattr(f.field, "p", 0)
    lm_f, tail_f = _to_element(f.terms, key, p)
    lm_g, tail_g = _to_element(g.terms, key, p)
    # scale back to the actual leading coefficients: S = lc_g * (L/lm_f) f - lc_f * (L/lm_g) g, up to a unit
    s = _spoly(lm_f, tail_f, lm_g, tail_g, f.n, p)
    lc_f = f.terms[lm_f]
    lc_g = g.terms[lm_g]
    scale = lc_f * lc_g
    if p:
        return Polynomial({m: c * scale % p for m, c in s.items()}, f.n, f.field)
    return Polynomial({m: c * scale for m, c in s.items()}, f.n, f.field)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order=LEX) -> Polynomial:
    """Remainder of f under full division by G.

    Each term, largest first, is divided by the first element of G (in the
    given order) whose leading monomial divides it.
    """
    if not G:
        return f
    n, field = _unpack_list(G)
    f._check(G[0])
    order = as_order(order)
    key = None if order.is_lex else order.key_function(n)
    p = getattr(field, "p", 0)
    lms, tails, invs = [], [], []
    for g in G:
        lm = _lead(g.terms, key)
        lms.append(lm)
        tails.append([(m, c) for m, c in g.terms.items() if m != lm])
        invs.append(field.inv(g.terms[lm]))
    rem = _reduce(f.terms, lms, tails, invs, guard_mask(n), p, key)
    return Polynomial._raw(rem, n, field)


def buchberger(ideal: Ideal | Sequence[Polynomial], order=None, *, degree_cap: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of an ideal (monic, sorted by increasing leading monomial)."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal(list(ideal), order=order)
    order = ideal.order if order is None else as_order(order)
    cap = ideal.degree_cap if degree_cap is None else degree_cap
    gens = ideal.generators
    if not gens:
        return GroebnerBasis([], order, True)
    eng = _Engine(ideal.n, ideal.field, order, cap)
    for g in sorted(gens, key=lambda g: (g.degree(), len(g.terms))):
        if g.degree() > cap:
            raise DegreeCapExceeded(f"generator of degree {g.degree()} exceeds cap {cap}")
        h = eng.reduce(g.terms)
        if h:
            eng.add(h)
    eng.run()
    basis = [Polynomial._raw(t, ideal.n, ideal.field) for t in eng.reduced_basis()]
    return GroebnerBasis(basis, order, True, dict(eng.stats))


@dataclass
class GBCertificate:
    ok: bool
    pair: tuple[int, int] | None = None
    remainder: Polynomial | None = None
    pairs_checked: int = 0

    def __bool__(self):
        return self.ok


def is_groebner_basis(G: Sequence[Polynomial] | GroebnerBasis, order=None) -> GBCertificate:
    """Buchberger criterion: every S-polynomial must reduce to zero modulo G.

    Pairs with coprime leading monomials are skipped (they always reduce to
    zero).  On failure the offending index pair and its remainder are returned.
    """
    if isinstance(G, GroebnerBasis):
        order = G.order if order is None else order
        G = G.elements
    order = as_order(order)
    G = list(G)
    if not G:
        return GBCertificate(True)
    n, field = _unpack_list(G)
    key = None if order.is_lex else order.key_function(n)
    p = getattr(field, "p", 0)
    elems = [_to_element(g.terms, key, p) for g in G]
    lms = [e[0] for e in elems]
    tails = [e[1] for e in elems]
    guard = guard_mask(n)
    supp = [support_bits(m, n) for m in lms]
    checked = 0
    for i, j in combinations(range(len(G)), 2):
        if not (supp[i] & supp[j]):
            continue
        checked += 1
        s = _spoly(lms[i], tails[i], lms[j], tails[j], n, p)
        if not s:
            continue
        r = _reduce(s, lms, tails, None, guard, p, key)
        if r:
            return GBCertificate(False, (i, j), Polynomial._raw(r, n, field), checked)
    return GBCertificate(True, None, None, checked)


def initial_ideal(G: GroebnerBasis | Sequence[Polynomial], order=None, *, check: bool = True) -> MonomialIdeal:
    """Monomial ideal generated by the leading monomials of a Groebner basis."""
    if isinstance(G, Ideal):
        G = G.groebner_basis()
    if isinstance(G, GroebnerBasis):
        order = G.order if order is None else as_order(order)
        trusted = G.reduced
        elems = G.elements
    else:
        order = as_order(order)
        trusted = False
        elems = list(G)
    if not elems:
        raise ValueError("empty basis; the zero ideal has no generators to read off")
    if check and not trusted:
        cert = is_groebner_basis(elems, order)
        if not cert:
            raise NotAGroebnerBasis(f"S-pair {cert.pair} does not reduce to zero")
    n = elems[0].n
    return MonomialIdeal(tuple(g.leading_monomial(order).packed() for g in elems), n)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    """Equality via reduced Groebner bases in a common order."""
    if I.n != J.n or I.field != J.field:
        return False
    if I.order != J.order:
        J = J.with_order(I.order)
    return I.groebner_basis().elements == J.groebner_basis().elements


def contained_in(I: Ideal, J: Ideal) -> bool:
    """True if every generator of I lies in J."""
    return all(J.contains(g) for g in I.generators)


def _extend(f: Polynomial, n: int) -> Polynomial:
    return Polynomial(dict(f.terms), n, f.field, _canonical=True)


def intersect(I: Ideal, J: Ideal, *, verify: bool = True) -> Ideal:
    """I ∩ J by eliminating an auxiliary variable t from (t·I, (1-t)·J).

    t is appended as x_{n+1}; under lex with the highest variable largest it
    is eliminated first.  With ``verify`` each generator of the result is
    checked to lie in both I and J.
    """
    if I.n != J.n or I.field != J.field:
        raise ValueError("intersect needs ideals in the same ring")
    n, field = I.n, I.field
    if I.is_zero() or J.is_zero():
        return Ideal([], n, field, I.order)
    t = Polynomial.variable(n + 1, n + 1, field)
    one_minus_t = Polynomial.constant(1, n + 1, field) - t
    gens = [t * _extend(f, n + 1) for f in I.generators] + [one_minus_t * _extend(g, n + 1) for g in J.generators]
    gb = buchberger(Ideal(gens, n + 1, field, LEX, degree_cap=max(I.degree_cap, J.degree_cap)))
    tmask = SLOT << (BITS * n)
    kept = [Polynomial(dict(g.terms), n, field, _canonical=True) for g in gb.elements if not any(m & tmask for m in g.terms)]
    result = Ideal(kept, n, field, I.order, degree_cap=I.degree_cap)
    if verify:
        for g in result.generators:
            if not (I.contains(g) and J.contains(g)):
                raise ArithmeticError("intersection generator escaped one of the ideals")
    return result


def intersect_all(ideals: Sequence[Ideal], *, verify: bool = False) -> Ideal:
    it = iter(ideals)
    acc = next(it)
    for J in it:
        acc = intersect(acc, J, verify=verify)
        acc = Ideal(acc.groebner_basis().elements, acc.n, acc.field, acc.order, degree_cap=acc.degree_cap)
    return acc


def contract_to_subring(I: Ideal, keep: Iterable[int] | int) -> Ideal:
    """I ∩ K[x_1..x_k], returned as an ideal of the smaller ring.

    Uses the lex basis of I: with x_n > ... > x_1 the elements free of
    x_{k+1..n} generate the elimination ideal.
    """
    if isinstance(keep, int):
        k = keep
    else:
        ks = sorted(set(keep))
        k = len(ks)
        if ks != list(range(1, k + 1)):
            raise ValueError(f"kept variables must be an initial segment x1..xk, got {ks}")
    if not 0 <= k <= I.n:
        raise ValueError(f"cannot keep {k} of {I.n} variables")
    gb = I.groebner_basis() if I.order.is_lex else I.with_order(LEX).groebner_basis()
    drop = 0
    for i in range(k, I.n):
        drop |= SLOT << (BITS * i)
    kept = [Polynomial(dict(g.terms), k, I.field, _canonical=True) for g in gb.elements if not any(m & drop for m in g.terms)]
    return Ideal(kept, k, I.field, I.order, degree_cap=I.degree_cap)


def quotient_by_linear(I: Ideal, variable: int | None = None) -> Ideal:
    """Image of I under x_n -> 0, as an ideal of K[x_1..x_{n-1}]."""
    v = I.n if variable is None else variable
    if v != I.n:
        raise ValueError("only the last variable can be sent to zero")
    images = []
    for g in I.generators:
        h = g.substitute_zero(v)
        if not h.is_zero():
            images.append(Polynomial(dict(h.terms), I.n - 1, I.field, _canonical=True))
    return Ideal(images, I.n - 1, I.field, I.order, degree_cap=I.degree_cap)


def monomial_ideal_as_ideal(M: MonomialIdeal, field=QQ, order=None) -> Ideal:
    field = as_field(field)
    return Ideal([Polynomial({m: field.one}, M.n, field, _canonical=True) for m in M.gens], M.n, field, order)
