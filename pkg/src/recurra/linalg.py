"""Exact nullspace computation via fraction-free (Bareiss) elimination.

Input rows may mix ints and Fractions; each row is cleared to integers
first, so all elimination arithmetic stays in Z and every division is
exact. Results are deterministic: basis vectors come out ordered by their
free column, each with the free coordinate set to 1.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of {x : A x = 0} for the matrix with the given rows.

    Returns one vector per free column, ascending. An empty row list (or a
    matrix of zero rows) yields the standard basis of the full space.
    """
    if ncols is None:
        if not rows:
            raise ValueError("column count required for an empty matrix")
        ncols = len(rows[0])
    m = _integer_rows(rows)
    for row in m:
        if len(row) != ncols:
            raise ValueError("ragged matrix")

    pivots: list[tuple[int, int]] = []  # (row, col) in echelon order
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        for r in range(rank + 1, len(m)):
            if all(v == 0 for v in m[r]):
                continue
            head = m[r][col]
            lead = m[rank][col]
            for c in range(col + 1, ncols):
                q, rem = divmod(m[r][c] * lead - head * m[rank][c], prev)
                if rem:  # Bareiss divisions are exact; anything else is a bug
                    raise AssertionError("fraction-free elimination lost exactness")
                m[r][c] = q
            m[r][col] = 0
        prev = m[rank][col]
        pivots.append((rank, col))
        rank += 1
        if rank == len(m):
            break

    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, col in reversed(pivots):
            s = sum((m[row][c] * v[c] for c in range(col + 1, ncols)), Fraction(0))
            v[col] = -s / m[row][col]
        basis.append(tuple(v))
    return basis
