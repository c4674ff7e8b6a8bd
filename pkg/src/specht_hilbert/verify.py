"""Verification suites: each checks one family of identities and returns a report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Callable

from .algebra import GF, QQ, Monomial, Polynomial, mono_degree
from .combinatorics import (
    Partition,
    YoungTableau,
    count_syt_hook,
    enumerate_partitions,
    enumerate_standard_tableaux,
)
from .groebner import Ideal, contract_to_subring, initial_ideal, intersect, is_groebner_basis, quotient_by_linear
from .hilbert import (
    char_independence_check,
    closed_form,
    closed_form_hook,
    closed_form_two_row,
    recursion_check_square,
    recursion_check_two_row,
    regularity_cm,
    series_of_quotient,
    ses_check_jdd,
)
from .specht import (
    SpechtIdealSpec,
    intersect_components,
    initial_monomial_two_row,
    j_ideal,
    specht_ideal,
    specht_polynomial,
    squarefree_ideal,
    structured_groebner_set,
    syt_basis_rank,
    trimmed_form,
    vanishing_check,
)


@dataclass
class Case:
    id: str
    status: str
    witness: object = None
    seconds: float = 0.0

    def to_json(self, timings: bool = True) -> dict:
        out = {"id": self.id, "status": self.status, "witness": self.witness}
        if timings:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class VerificationReport:
    suite: str
    cases: list[Case] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.cases)

    def to_json(self, timings: bool = True) -> dict:
        return {"suite": self.suite, "pass": self.passed, "cases": [c.to_json(timings) for c in self.cases]}

    def run(self, case_id: str, check: Callable[[], object]):
        """Run one check; a truthy result passes, anything else is kept as the witness."""
        start = time.perf_counter()
        try:
            result = check()
        except Exception as exc:  # a crash is a failed case, not a crashed suite
            result = f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        if result is True:
            self.cases.append(Case(case_id, "pass", None, elapsed))
        else:
            self.cases.append(Case(case_id, "fail", _jsonable(result), elapsed))
        return result


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _two_row_shapes(lo: int, hi: int):
    for n in range(lo, hi + 1):
        for d in range(2, n // 2 + 1):
            yield n, d


def _eq(a, b):
    return True if a == b else {"got": str(a), "expected": str(b)}


# ------------------------------------------------------------------ suites


def suite_counts(max_n: int = 8, **_) -> VerificationReport:
    rep = VerificationReport("counts")
    for n in range(1, max_n + 1):
        for lam in enumerate_partitions(n):
            rep.run(f"hook{lam}", lambda lam=lam: _eq(len(enumerate_standard_tableaux(lam)), count_syt_hook(lam)))
    for d in range(1, 4):
        rep.run(f"syt(d,d,1) d={d}", lambda d=d: _eq(count_syt_hook((d, d, 1)), comb(2 * d + 1, d + 2)))
    return rep


def suite_initial_terms(max_n: int = 8, **_) -> VerificationReport:
    rep = VerificationReport("initial-terms")
    for n in range(2, max_n + 1):
        for d in range(1, n // 2 + 1):
            def check(n=n, d=d):
                seen = {}
                for T in enumerate_standard_tableaux((n - d, d)):
                    lead = specht_polynomial(T, n).leading_monomial()
                    if initial_monomial_two_row(T, n) != lead:
                        return {"tableau": str(T), "formula": str(initial_monomial_two_row(T, n)), "expansion": str(lead)}
                    if lead in seen:
                        return {"collision": [str(seen[lead]), str(T)]}
                    seen[lead] = T
                return True

            rep.run(f"two-row ({n - d},{d})", check)
    for n in range(1, min(max_n, 7) + 1):
        for lam in enumerate_partitions(n):
            def check(lam=lam):
                r = syt_basis_rank(lam)
                return True if r.ok else {"rank": r.rank, "syt": r.syt_count, "distinct": r.initial_monomials_distinct}

            rep.run(f"basis-rank {lam}", check)
    return rep


def _matching_tableaux(letters, pairs: int):
    """Column-normalized tableaux of shape (m, pairs) on the letters, one per f_T up to sign.

    f_T only depends (up to sign) on which letters share a height-2 column,
    so these run over sets of ``pairs`` disjoint pairs.
    """
    letters = sorted(letters)
    out = []

    def rec(avail, cols):
        if len(cols) == pairs:
            used = {y for c in cols for y in c}
            top = [c[0] for c in cols] + [x for x in letters if x not in used]
            bottom = [c[1] for c in cols]
            out.append(YoungTableau((tuple(top), tuple(bottom)) if bottom else (tuple(top),)))
            return
        if len(avail) < 2 * (pairs - len(cols)):
            return
        a, rest = avail[0], avail[1:]
        for b in rest:
            rec([x for x in rest if x != b], cols + [(a, b)])
        rec(rest, cols)

    rec(letters, [])
    return out


def _monomials_upto(n: int, k: int):
    for deg in range(k + 1):
        for combo in combinations_with_replacement(range(1, n + 1), deg):
            e = [0] * n
            for i in combo:
                e[i - 1] += 1
            yield Monomial(tuple(e))


def trm_lemma_check(d: int, max_a: int = 2):
    """Both directions of the trimmed-form lemma on n = 2d, for |a| <= max_a.

    Returns a dict with ``ok`` and the number of instances checked in each
    direction, or the first counterexample.

    Equality is tested up to sign: the lemma's column normalizations only fix
    f_T up to sign.
    """
    n = 2 * d
    full = list(range(1, n + 1))
    square_tabs = _matching_tableaux(full, d)
    fT = {T: specht_polynomial(T, n) for T in square_tabs}
    targets_cache = {}

    def targets(a: Monomial):
        F = sorted(a.support)
        c = len(F)
        key = a.exponents
        if key not in targets_cache:
            vals = set()
            if c <= d:
                rest = [i for i in full if i not in F]
                xa_xF = (a * Monomial.squarefree(F, n))
                for Tp in _matching_tableaux(rest, d - c):
                    g = specht_polynomial(Tp, n).mul_monomial(xa_xF)
                    vals.add(g)
                    vals.add(-g)
            targets_cache[key] = vals
        return targets_cache[key]

    forward = 0
    for a in _monomials_upto(n, max_a):
        for T, f in fT.items():
            t = trimmed_form(f.mul_monomial(a), d)
            if t.is_zero():
                continue
            forward += 1
            if len(a.support) > d or t not in targets(a):
                return {"ok": False, "direction": "forward", "a": str(a), "tableau": str(T), "trm": str(t)}
    backward = 0
    for a in _monomials_upto(n, max_a):
        F = sorted(a.support)
        if len(F) > d:
            continue
        produced = set()
        for f in fT.values():
            t = trimmed_form(f.mul_monomial(a), d)
            if not t.is_zero():
                produced.add(t)
                produced.add(-t)
        for g in targets(a):
            backward += 1
            if g not in produced:
                return {"ok": False, "direction": "converse", "a": str(a), "target": str(g)}
    return {"ok": True, "forward": forward, "converse": backward}


def suite_trm_lemma(ds=(2, 3), **_) -> VerificationReport:
    rep = VerificationReport("trm-lemma")
    f = Polynomial.parse("x1*x4^2 - 2*x2*x3^2 + 3*x1*x3*x4 - x2*x3*x4", 4)
    rep.run("worked example", lambda: _eq(trimmed_form(f, 2), Polynomial.parse("x1*x4^2 - 2*x2*x3^2", 4)))
    for d in ds:
        def check(d=d):
            r = trm_lemma_check(d, max_a=d + 1)
            return True if r["ok"] and r["forward"] and r["converse"] else r

        rep.run(f"lemma n={2 * d}", check)
    return rep


def suite_grobner_jdd(ds=(2, 3), **_) -> VerificationReport:
    rep = VerificationReport("grobner-jdd")
    for d in ds:
        n = 2 * d
        G = structured_groebner_set(d)
        J = j_ideal(d)

        def criterion(G=G):
            cert = is_groebner_basis(G)
            return True if cert else {"pair": cert.pair, "remainder": str(cert.remainder)}

        rep.run(f"d={d} buchberger-criterion", criterion)
        rep.run(f"d={d} generates J", lambda G=G, J=J, n=n: Ideal(G, n) == J)
        rep.run(f"d={d} initial ideals", lambda G=G, J=J: _eq(initial_ideal(G, check=False), initial_ideal(J.groebner_basis())))
        rep.run(f"d={d} char-free series", lambda d=d: char_independence_check(lambda K, d=d: j_ideal(d, K)).ok)
    return rep


def suite_radical(max_n: int = 6, **_) -> VerificationReport:
    rep = VerificationReport("radical")
    shapes = [(n - d, d) for n, d in _two_row_shapes(4, max_n)]
    shapes += [s for s in [(2, 2, 1), (3, 3, 1)] if sum(s) <= max(max_n, 5)]
    for lam in shapes:
        rep.run(f"components {Partition(lam)}", lambda lam=lam: intersect_components(lam) == specht_ideal(lam))
    return rep


def suite_contraction(max_n: int = 7, **_) -> VerificationReport:
    rep = VerificationReport("contraction")
    for n, d in [(5, 2), (6, 2), (7, 2), (7, 3)]:
        if n <= max_n:
            rep.run(
                f"I({n - d},{d}) ∩ S",
                lambda n=n, d=d: contract_to_subring(specht_ideal((n - d, d)), n - 1) == specht_ideal((n - d - 1, d)),
            )
    for d in (2, 3):
        if 2 * d <= max_n:
            rep.run(
                f"I({d},{d}) ∩ S",
                lambda d=d: contract_to_subring(specht_ideal((d, d)), 2 * d - 1) == specht_ideal((d - 1, d - 1, 1)),
            )
    for d in (2,):
        if 2 * d + 1 <= max(max_n, 5):
            def pi_check(d=d):
                pi = quotient_by_linear(specht_ideal((d, d, 1)))
                return pi == intersect(specht_ideal((d, d)), squarefree_ideal(2 * d, d + 1))

            rep.run(f"pi(I({d},{d},1))", pi_check)
    return rep


def suite_closed_form(max_n: int = 7, **_) -> VerificationReport:
    rep = VerificationReport("closed-form")
    for n, d in _two_row_shapes(4, max_n):
        def check(n=n, d=d):
            s = series_of_quotient(specht_ideal((n - d, d)))
            cf = closed_form_two_row(n, d)
            if s != cf:
                return {"groebner": str(s), "closed": str(cf)}
            if regularity_cm(s) != d or s.dimension != d:
                return {"regularity": regularity_cm(s), "dimension": s.dimension}
            return True

        rep.run(f"({n - d},{d})", check)
    for d in (2, 3):
        if 2 * d + 1 <= max(max_n, 5):
            def check(d=d):
                I = specht_ideal((d, d, 1))
                s = series_of_quotient(I)
                cf = closed_form_hook(d)
                if s != cf:
                    return {"groebner": str(s), "closed": str(cf)}
                if regularity_cm(s) != d + 1 or s.dimension != d + 1:
                    return {"regularity": regularity_cm(s), "dimension": s.dimension}
                degs = {g.homogeneous_degree() for g in I.generators}
                return _eq(degs, {d + 2})

            rep.run(f"({d},{d},1)", check)
    return rep


def suite_recursion(max_n: int = 7, **_) -> VerificationReport:
    rep = VerificationReport("recursion")
    closed_n = max_n + 2
    for n in range(5, closed_n + 1):
        for d in range(2, n):
            if n - d > d:
                rep.run(f"two-row closed n={n} d={d}", lambda n=n, d=d: recursion_check_two_row(n, d))
                if n <= max_n:
                    rep.run(f"two-row groebner n={n} d={d}", lambda n=n, d=d: recursion_check_two_row(n, d, "groebner"))
    for d in range(2, closed_n // 2 + 1):
        rep.run(f"square closed d={d}", lambda d=d: recursion_check_square(d))
        if 2 * d <= max_n:
            rep.run(f"square groebner d={d}", lambda d=d: recursion_check_square(d, "groebner"))
    return rep


def suite_ses_jdd(ds=(2, 3), **_) -> VerificationReport:
    rep = VerificationReport("ses-jdd")
    for d in ds:
        def check(d=d):
            r = ses_check_jdd(d)
            if not r.ok:
                return {"pi": str(r.pi_image), "square": str(r.square), "m": str(r.squarefree), "J": str(r.j_ideal), "hook": str(r.hook)}
            return _eq(r.pi_image.divide_by_one_minus_t(), closed_form_hook(d))

        rep.run(f"d={d}", check)
    return rep


def suite_char_free(max_n: int = 7, primes=(2, 3, 5), **_) -> VerificationReport:
    rep = VerificationReport("char-free")

    def run(label, builder):
        def check():
            r = char_independence_check(builder, primes, label)
            return True if r.ok else {k: str(v) for k, v in r.series.items()}

        rep.run(label, check)

    for d in (2, 3):
        run(f"J({d},{d})", lambda K, d=d: j_ideal(d, K))
    for n, d in _two_row_shapes(4, max_n):
        run(f"I({n - d},{d})", lambda K, n=n, d=d: specht_ideal((n - d, d), K))
    run("I(2,2,1)", lambda K: specht_ideal((2, 2, 1), K))
    run("vandermonde", lambda K: specht_ideal((1, 1, 1), K))
    return rep


def suite_vanishing(max_n: int = 7, trials: int = 200, seed: int = 0, **_) -> VerificationReport:
    rep = VerificationReport("vanishing")
    shapes = [(n - d, d) for n in range(2, max_n + 1) for d in range(1, n // 2 + 1)]
    shapes += [s for s in [(2, 2, 1), (3, 3, 1)] if sum(s) <= max_n]
    for i, lam in enumerate(shapes):
        def check(lam=lam, i=i):
            r = vanishing_check(lam, trials=trials, seed=seed + i)
            return True if r.ok else {"failures": r.failures[:3], "controls_nonzero": r.controls_nonzero}

        rep.run(f"{Partition(lam)}", check)
    return rep


SUITES = {
    "initial-terms": suite_initial_terms,
    "trm-lemma": suite_trm_lemma,
    "grobner-jdd": suite_grobner_jdd,
    "radical": suite_radical,
    "contraction": suite_contraction,
    "recursion": suite_recursion,
    "ses-jdd": suite_ses_jdd,
    "char-free": suite_char_free,
    "vanishing": suite_vanishing,
    "closed-form": suite_closed_form,
    "counts": suite_counts,
}


def run_suite(name: str, *, max_n: int | None = None, d: int | None = None, seed: int = 0, trials: int = 200) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(name)
    kwargs = {"seed": seed, "trials": trials}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if d is not None:
        kwargs["ds"] = (d,)
    return SUITES[name](**kwargs)
