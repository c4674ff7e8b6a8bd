"""Exact coefficient fields, monomials, monomial orders and sparse polynomials.

Monomials are packed into a single Python int, ``BITS`` bits per variable with
x_1 in the lowest slot.  With x_n in the highest slot, integer comparison is
exactly the lex order x_n > x_{n-1} > ... > x_1, multiplication is addition,
and divisibility is a masked subtraction.  The top bit of every slot is a
guard bit that must stay clear, so exponents are limited to ``MAX_EXP``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import gmpy2
from gmpy2 import mpq

BITS = 8
SLOT = (1 << BITS) - 1
MAX_EXP = (1 << (BITS - 1)) - 1


class CharacteristicMismatch(ValueError):
    """Raised when objects over different coefficient fields are combined."""


class ExponentOverflow(OverflowError):
    pass


# --------------------------------------------------------------------- fields


class Field:
    """Coefficient field: ``QQ`` (gmpy2 rationals) or ``GF(p)`` (ints mod p).

    Scalars are plain ``mpq`` or ``int`` values; the field object owns the
    conversion and inversion rules.
    """

    characteristic: int

    def __call__(self, value):
        raise NotImplementedError

    def inv(self, c):
        raise NotImplementedError

    @staticmethod
    def parse(text: str) -> "Field":
        """Parse ``"q"`` or ``"fp:<prime>"``."""
        t = text.strip().lower()
        if t in ("q", "qq"):
            return QQ
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError as exc:
                raise ValueError(f"bad field descriptor {text!r}") from exc
            return GF(p)
        raise ValueError(f"bad field descriptor {text!r}; expected 'q' or 'fp:<prime>'")


class RationalField(Field):
    characteristic = 0
    zero = mpq(0)
    one = mpq(1)

    def __call__(self, value):
        if isinstance(value, str):
            return mpq(Fraction(value))
        return mpq(value)

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / c

    def descriptor(self) -> str:
        return "q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    zero = 0
    one = 1

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, (Fraction, type(mpq(0)))):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, c):
        if c % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(c), -1, self.p)

    def descriptor(self) -> str:
        return f"fp:{self.p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def as_field(field) -> Field:
    if field is None:
        return QQ
    if isinstance(field, Field):
        return field
    if isinstance(field, int):
        return QQ if field == 0 else GF(field)
    return Field.parse(str(field))


# ------------------------------------------------------------------ monomials


@lru_cache(maxsize=None)
def guard_mask(n: int) -> int:
    return sum(1 << (BITS * i + BITS - 1) for i in range(n))


@lru_cache(maxsize=None)
def low_mask(n: int) -> int:
    """MAX_EXP in every slot; adding it to a monomial sets the guard bits of its support."""
    return sum(MAX_EXP << (BITS * i) for i in range(n))


def pack(exps: Sequence[int]) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e < 0:
            raise ValueError("negative exponent")
        if e > MAX_EXP:
            raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXP}")
        m |= e << (BITS * i)
    return m


def unpack(m: int, n: int) -> tuple[int, ...]:
    return tuple((m >> (BITS * i)) & SLOT for i in range(n))


def mono_degree(m: int) -> int:
    d = 0
    while m:
        d += m & SLOT
        m >>= BITS
    return d


def divides(a: int, b: int, guard: int) -> bool:
    """True if monomial a divides monomial b."""
    return ((b | guard) - a) & guard == guard


def mono_lcm(a: int, b: int, n: int) -> int:
    m = 0
    for i in range(n):
        s = BITS * i
        m |= max((a >> s) & SLOT, (b >> s) & SLOT) << s
    return m


def support_bits(m: int, n: int) -> int:
    return (m + low_mask(n)) & guard_mask(n)


def var(i: int) -> int:
    """Packed monomial x_i (1-based)."""
    return 1 << (BITS * (i - 1))


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    @classmethod
    def from_packed(cls, m: int, n: int) -> "Monomial":
        return cls(unpack(m, n))

    @classmethod
    def squarefree(cls, subset: Iterable[int], n: int, power: int = 1) -> "Monomial":
        """x^F (power 1) or x^{2F} (power 2) for a 1-based index set F."""
        e = [0] * n
        for i in subset:
            e[i - 1] = power
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def packed(self) -> int:
        return pack(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        return format_monomial(self.packed(), self.n)


def format_monomial(m: int, n: int) -> str:
    factors = []
    for i in range(n):
        e = (m >> (BITS * i)) & SLOT
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


# --------------------------------------------------------------------- orders


class MonomialOrder:
    """A monomial order, exposed as an integer-valued sort key on packed monomials.

    ``lex`` is lex with x_n > ... > x_1, whose key is the packed int itself.
    ``grevlex`` uses the same variable priority and is the graded extension point.
    """

    def __init__(self, name: str = "lex"):
        if name not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {name!r}")
        self.name = name
        self.is_lex = name == "lex"
        self._cache: dict[tuple[int, int], object] = {}

    def key_function(self, n: int):
        if self.is_lex:
            return _identity
        cached = self._cache.get(("grevlex", n))
        if cached is None:
            cached = _grevlex_key(n)
            self._cache[("grevlex", n)] = cached
        return cached

    def compare(self, a: int, b: int, n: int) -> int:
        key = self.key_function(n)
        ka, kb = key(a), key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"


def _identity(m):
    return m


def _grevlex_key(n: int):
    shift = BITS * n

    @lru_cache(maxsize=1 << 18)
    def key(m: int) -> int:
        deg = 0
        k = 0
        for i in range(n):
            e = (m >> (BITS * i)) & SLOT
            deg += e
            k |= (SLOT - e) << (BITS * (n - 1 - i))
        return (deg << shift) | k

    return key


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def as_order(order) -> MonomialOrder:
    if order is None:
        return LEX
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(str(order))


# ---------------------------------------------------------------- polynomials


class Polynomial:
    """Immutable sparse polynomial in x_1..x_n over an exact field.

    ``terms`` maps packed monomials to nonzero coefficients and is kept in
    descending lex order, so the lex leading term is the first entry.
    """

    __slots__ = ("terms", "n", "field", "_hash")

    def __init__(self, terms: Mapping[int, object], n: int, field: Field = QQ, *, _canonical=False):
        self.n = n
        self.field = field
        if _canonical:
            self.terms = terms
        else:
            conv = field
            cleaned = {}
            for m, c in terms.items():
                c = conv(c)
                if c != 0:
                    cleaned[m] = c
            self.terms = {m: cleaned[m] for m in sorted(cleaned, reverse=True)}
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def from_dict(cls, exps_to_coeff: Mapping[Sequence[int], object], n: int, field=QQ) -> "Polynomial":
        field = as_field(field)
        acc: dict[int, object] = {}
        for exps, c in exps_to_coeff.items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not have length {n}")
            m = pack(exps)
            acc[m] = acc.get(m, field.zero) + field(c)
        return cls(acc, n, field)

    @classmethod
    def _raw(cls, terms: dict, n: int, field: Field) -> "Polynomial":
        """Wrap an already reduced term dict (no zero coefficients), sorting it."""
        return cls({m: terms[m] for m in sorted(terms, reverse=True)}, n, field, _canonical=True)

    @classmethod
    def zero(cls, n: int, field=QQ) -> "Polynomial":
        return cls({}, n, as_field(field), _canonical=True)

    @classmethod
    def constant(cls, c, n: int, field=QQ) -> "Polynomial":
        field = as_field(field)
        return cls({0: c}, n, field)

    @classmethod
    def variable(cls, i: int, n: int, field=QQ) -> "Polynomial":
        if not 1 <= i <= n:
            raise ValueError(f"x{i} is outside x1..x{n}")
        field = as_field(field)
        return cls({var(i): field.one}, n, field, _canonical=True)

    @classmethod
    def monomial(cls, mono: Monomial, field=QQ, coeff=1) -> "Polynomial":
        field = as_field(field)
        return cls({mono.packed(): coeff}, mono.n, field)

    @classmethod
    def parse(cls, text: str, n: int, field=QQ) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(text, n, field)

    # queries ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """(Monomial, coefficient) pairs in descending lex order."""
        for m, c in self.terms.items():
            yield Monomial.from_packed(m, self.n), c

    def coefficient(self, mono) -> object:
        m = mono.packed() if isinstance(mono, Monomial) else pack(mono)
        return self.terms.get(m, self.field.zero)

    def monomials(self) -> list[Monomial]:
        return [Monomial.from_packed(m, self.n) for m in self.terms]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None when f is not homogeneous (or zero)."""
        degs = {mono_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.homogeneous_degree() is not None

    def variables_used(self) -> frozenset[int]:
        bits = 0
        for m in self.terms:
            bits |= m
        return frozenset(i + 1 for i in range(self.n) if (bits >> (BITS * i)) & SLOT)

    def leading_term(self, order=LEX) -> tuple[Monomial, object]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        order = as_order(order)
        if order.is_lex:
            m = next(iter(self.terms))
        else:
            m = max(self.terms, key=order.key_function(self.n))
        return Monomial.from_packed(m, self.n), self.terms[m]

    def leading_monomial(self, order=LEX) -> Monomial:
        return self.leading_term(order)[0]

    # arithmetic ------------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.field != other.field:
            raise CharacteristicMismatch(f"cannot combine polynomials over {self.field} and {other.field}")
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n} variables")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, type(mpq(0)))):
            return Polynomial.constant(other, self.n, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(add_terms(self.terms, other.terms, self.field, 1), self.n, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(add_terms(self.terms, other.terms, self.field, -1), self.n, self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = getattr(self.field, "p", 0)
        if p:
            terms = {m: (-c) % p for m, c in self.terms.items()}
        else:
            terms = {m: -c for m, c in self.terms.items()}
        return Polynomial(terms, self.n, self.field, _canonical=True)

    def scalar_mul(self, c) -> "Polynomial":
        c = self.field(c)
        if c == 0:
            return Polynomial.zero(self.n, self.field)
        p = getattr(self.field, "p", 0)
        if p:
            terms = {m: v * c % p for m, v in self.terms.items()}
        else:
            terms = {m: v * c for m, v in self.terms.items()}
        return Polynomial(terms, self.n, self.field, _canonical=True)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(mul_terms(self.terms, other.terms, self.n, self.field), self.n, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self, order=LEX) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self.scalar_mul(self.field.inv(lc))

    def mul_monomial(self, mono: Monomial) -> "Polynomial":
        shift = mono.packed()
        guard = guard_mask(self.n)
        terms = {}
        for m, c in self.terms.items():
            mm = m + shift
            if mm & guard:
                raise ExponentOverflow("exponent overflow in monomial product")
            terms[mm] = c
        return Polynomial(terms, self.n, self.field, _canonical=True)

    def evaluate(self, point: Sequence) -> object:
        """Exact value at a point with coordinates in the coefficient field."""
        if len(point) != self.n:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.n}")
        vals = [self.field(a) for a in point]
        p = getattr(self.field, "p", 0)
        total = self.field.zero
        for m, c in self.terms.items():
            t = c
            i = 0
            while m:
                e = m & SLOT
                if e:
                    t = t * (pow(vals[i], e, p) if p else vals[i] ** e)
                    if p:
                        t %= p
                m >>= BITS
                i += 1
            total += t
        return total % p if p else total

    def substitute_zero(self, i: int) -> "Polynomial":
        """Image under x_i -> 0."""
        mask = SLOT << (BITS * (i - 1))
        return Polynomial({m: c for m, c in self.terms.items() if not m & mask}, self.n, self.field, _canonical=True)

    def change_ring(self, n: int | None = None, field=None) -> "Polynomial":
        """Same polynomial in more (or fewer, if unused) variables, or over another field.

        Changing to GF(p) reduces rational coefficients mod p.
        """
        n = self.n if n is None else n
        field = self.field if field is None else as_field(field)
        if n < self.n and any(i > n for i in self.variables_used()):
            raise ValueError("cannot drop a variable that occurs in the polynomial")
        if field == self.field:
            return Polynomial(dict(self.terms), n, field, _canonical=True)
        return Polynomial(self.terms, n, field)

    # comparison / printing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.n, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.field, tuple(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self.terms, self.n)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, n={self.n}, field={self.field!r})"


def add_terms(a: dict, b: dict, field: Field, sign: int) -> dict:
    p = getattr(field, "p", 0)
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        v = (c if sign > 0 else -c) if v is None else (v + c if sign > 0 else v - c)
        if p:
            v %= p
        if v == 0:
            out.pop(m, None)
        else:
            out[m] = v
    return out


def mul_terms(a: dict, b: dict, n: int, field: Field) -> dict:
    p = getattr(field, "p", 0)
    guard = guard_mask(n)
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = ma + mb
            if m & guard:
                raise ExponentOverflow("exponent overflow in monomial product")
            v = out.get(m, 0) + ca * cb
            out[m] = v % p if p else v
    return {m: c for m, c in out.items() if c != 0}


def format_coefficient(c) -> str:
    if isinstance(c, int):
        return str(c)
    c = mpq(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(terms: Mapping[int, object], n: int) -> str:
    """Render in the input grammar, terms in descending lex order."""
    if not terms:
        return "0"
    pieces = []
    for m, c in terms.items():
        neg = c < 0
        mag = -c if neg else c
        mono = format_monomial(m, n)
        coeff = format_coefficient(mag)
        if m == 0:
            body = coeff
        elif coeff == "1":
            body = mono
        else:
            body = f"{coeff}*{mono}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def evaluate(f: Polynomial, point: Sequence):
    return f.evaluate(point)


def leading_term(f: Polynomial, order=LEX):
    return f.leading_term(order)
