"""Exact Gaussian elimination for small dense matrices."""

from __future__ import annotations

from gmpy2 import mpq


def rank(rows, prime: int | None = None) -> int:
    """Rank of a matrix given as a list of rows, over QQ or GF(prime)."""
    if prime:
        m = [[int(x) % prime for x in r] for r in rows]
    else:
        m = [[mpq(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        if prime:
            inv = pow(m[r][c], -1, prime)
            m[r] = [x * inv % prime for x in m[r]]
        else:
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                if prime:
                    m[i] = [(a - f * b) % prime for a, b in zip(m[i], m[r])]
                else:
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r
