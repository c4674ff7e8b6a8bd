"""Partitions, Young tableaux on arbitrary letter sets, and standard-tableau counts."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Raised for malformed partitions or tableaux that do not fit their shape."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ShapeError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ShapeError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the comma syntax used on the command line, e.g. ``"3,2,1"``."""
        try:
            parts = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
        except ValueError as exc:
            raise ShapeError(f"cannot parse partition {text!r}") from exc
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def column_heights(self) -> list[int]:
        return [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]

    def cells(self):
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield r, c

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(shape) -> Partition:
    if isinstance(shape, Partition):
        return shape
    if isinstance(shape, str):
        return Partition.parse(shape)
    return Partition(tuple(shape))


@dataclass(frozen=True)
class YoungTableau:
    """A bijective filling of a Young diagram.

    ``rows`` lists the entries row by row, top to bottom.  The letters may be
    any finite set of positive integers, not only ``1..n``.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows if len(row) > 0)
        if not rows:
            raise ShapeError("empty tableau")
        Partition(tuple(len(r) for r in rows))  # shape check
        flat = [x for r in rows for x in r]
        if len(set(flat)) != len(flat):
            raise ShapeError(f"repeated letter in tableau {rows}")
        if any(x < 1 for x in flat):
            raise ShapeError("letters must be positive integers")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_json(cls, text: str) -> "YoungTableau":
        return cls(tuple(tuple(r) for r in json.loads(text)))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def letters(self) -> frozenset[int]:
        return frozenset(x for r in self.rows for x in r)

    @property
    def n(self) -> int:
        return self.shape.n

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    def column_entries(self, j: int) -> list[int]:
        """Entries of the j-th column (1-based), top to bottom."""
        if not 1 <= j <= len(self.rows[0]):
            raise IndexError(f"column {j} out of range 1..{len(self.rows[0])}")
        return [r[j - 1] for r in self.rows if len(r) >= j]

    @property
    def is_standard(self) -> bool:
        rows_ok = all(a < b for r in self.rows for a, b in zip(r, r[1:]))
        cols_ok = all(a < b for c in self.columns() for a, b in zip(c, c[1:]))
        return rows_ok and cols_ok

    def relabel(self, mapping) -> "YoungTableau":
        return YoungTableau(tuple(tuple(mapping[x] for x in r) for r in self.rows))

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 1:
        raise ValueError("enumerate_partitions needs n >= 1")
    out: list[Partition] = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def enumerate_standard_tableaux(shape, letters: Iterable[int] | None = None) -> list[YoungTableau]:
    """Standard tableaux of ``shape`` filled with ``letters`` (default ``1..n``).

    Letters are placed in increasing order, each into an addable cell, which
    produces every standard filling exactly once.  The result is sorted by
    row reading word.
    """
    shape = as_partition(shape)
    letters = sorted(range(1, shape.n + 1) if letters is None else set(letters))
    if len(letters) != shape.n:
        raise ShapeError(f"{len(letters)} letters for a shape of size {shape.n}")
    parts = shape.parts
    rows: list[list[int]] = [[] for _ in parts]
    out: list[YoungTableau] = []

    def rec(k):
        if k == len(letters):
            out.append(YoungTableau(tuple(tuple(r) for r in rows)))
            return
        for i, cap in enumerate(parts):
            if len(rows[i]) < cap and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(letters[k])
                rec(k + 1)
                rows[i].pop()

    rec(0)
    out.sort(key=YoungTableau.reading_word)
    return out


def hook_lengths(shape) -> list[int]:
    shape = as_partition(shape)
    heights = shape.column_heights()
    return [(shape[r] - c - 1) + (heights[c] - r - 1) + 1 for r, c in shape.cells()]


def count_syt_hook(shape) -> int:
    """Number of standard tableaux via the hook length formula."""
    shape = as_partition(shape)
    return factorial(shape.n) // prod(hook_lengths(shape))


def normalize_columns(tableau: YoungTableau) -> YoungTableau:
    """Sort each column increasingly, keeping the column contents in place."""
    cols = [sorted(c) for c in tableau.columns()]
    rows = tuple(tuple(cols[j][i] for j in range(len(tableau.rows[i]))) for i in range(len(tableau.rows)))
    return YoungTableau(rows)


def tableaux_from_rows(rows: Sequence[Sequence[int]]) -> YoungTableau:
    return YoungTableau(tuple(tuple(r) for r in rows))
