"""Exact rational linear algebra: kernels, ranks, and incremental spans.

Forward elimination is fraction-free: rows are scaled to integers and
reduced by cross-multiplication with per-row gcd normalization, so rank
decisions never depend on floating-point thresholds.
"""

from __future__ import annotations

import math
from bisect import insort
from typing import Sequence

from .core import rational


def _integerize(row: Sequence) -> list[int]:
    lcm = 1
    for x in row:
        d = int(x.denominator)
        lcm = lcm * d // math.gcd(lcm, d)
    return [int(x.numerator) * (lcm // int(x.denominator)) for x in row]


def _gcd_normalize(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = math.gcd(g, abs(x))
    if g > 1:
        return [x // g for x in row]
    return row


def echelon_form(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Integer row echelon form; returns (matrix, pivots) with pivots as (row, col)."""
    m = [_gcd_normalize(_integerize(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = _gcd_normalize([piv * a - f * b for a, b in zip(m[i], m[r])])
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon_form(rows)[1])


def kernel_basis(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Exact kernel of the constraint rows, one basis vector per free column.

    Vectors come back in ascending free-column order (reduced echelon order);
    the free coordinate of each vector is 1.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty constraint system")
        ncols = len(rows[0])
    m, pivots = echelon_form(rows)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in (c for c in range(ncols) if c not in pivot_cols):
        x = [rational(0)] * ncols
        x[f] = rational(1)
        for pr, pc in reversed(pivots):
            s = rational(0)
            for j in range(pc + 1, ncols):
                if x[j] and m[pr][j]:
                    s += m[pr][j] * x[j]
            x[pc] = -s / m[pr][pc]
        basis.append(tuple(x))
    return basis


class EchelonSpan:
    """Incrementally maintained exact row space for rank and membership tests."""

    def __init__(self):
        self._rows: list[tuple[int, tuple]] = []  # (pivot col, monic row), sorted

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def _reduce(self, vec) -> list:
        v = list(vec)
        for p, row in self._rows:
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        v = self._reduce(vec)
        p = next((i for i, c in enumerate(v) if c), None)
        if p is None:
            return False
        piv = v[p]
        insort(self._rows, (p, tuple(rational(c) / piv for c in v)))
        return True

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))


def spans_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    sa, sb = EchelonSpan(), EchelonSpan()
    for v in a:
        sa.add(v)
    for v in b:
        sb.add(v)
    if sa.dimension != sb.dimension:
        return False
    return all(sa.contains(v) for v in b)


def float_kernel_basis(rows: Sequence[Sequence[float]], ncols: int,
                       tol: float = 1e-9) -> list[tuple[float, ...]]:
    """Kernel over floats for the few solver paths that carry irrational data."""
    m = [list(map(float, r)) for r in rows]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        pr = max(range(r, len(m)), key=lambda i: abs(m[i][c]))
        if abs(m[pr][c]) <= tol:
            continue
        m[r], m[pr] = m[pr], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and abs(m[i][c]) > 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in (c for c in range(ncols) if c not in pivot_cols):
        x = [0.0] * ncols
        x[f] = 1.0
        for pr, pc in pivots:
            x[pc] = -m[pr][f]
        basis.append(tuple(x))
    return basis
