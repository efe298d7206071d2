"""Brute-force equation oracle via real multiplication operators.

Every equation here is linear over the reals (conjugation is R-linear even
though it is not algebra-linear), so ax = xb and ax = conj(x)b reduce to
exact 2^n x 2^n kernel computations.  The closed-form solvers are validated
against these kernels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .core import EXACT, Element, basis_element, multiply, rational
from .linalg import kernel_basis


def _require_exact(*els: Element) -> None:
    for a in els:
        if a.backend != EXACT:
            raise ValueError("oracle operations require the exact backend")


@dataclass(frozen=True)
class LinearOperator:
    """Real matrix acting on coefficient vectors; rows of exact scalars."""

    level: int
    matrix: tuple

    @property
    def dim(self) -> int:
        return 1 << self.level

    def apply(self, coeffs) -> tuple:
        return tuple(sum(r * c for r, c in zip(row, coeffs) if c) for row in self.matrix)

    def apply_element(self, x: Element) -> Element:
        return Element(self.level, self.apply(x.coeffs))

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.level, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.matrix, other.matrix)))

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.level, tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.matrix, other.matrix)))

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """Matrix of self applied after other."""
        n = self.dim
        cols = [other.apply(tuple(1 if i == j else 0 for i in range(n))) for j in range(n)]
        out_cols = [self.apply(c) for c in cols]
        return LinearOperator(self.level, tuple(
            tuple(out_cols[j][i] for j in range(n)) for i in range(n)))


def operator_from_map(level: int, fn: Callable[[Element], Element]) -> LinearOperator:
    n = 1 << level
    cols = [fn(basis_element(level, j)).coeffs for j in range(n)]
    return LinearOperator(level, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def left_mul_matrix(a: Element) -> LinearOperator:
    """Matrix of x -> a*x; column j is coeffs(a * e_j)."""
    _require_exact(a)
    return operator_from_map(a.level, lambda e: multiply(a, e))


def right_mul_matrix(a: Element) -> LinearOperator:
    """Matrix of x -> x*a; column j is coeffs(e_j * a)."""
    _require_exact(a)
    return operator_from_map(a.level, lambda e: multiply(e, a))


def identity_operator(level: int) -> LinearOperator:
    n = 1 << level
    return LinearOperator(level, tuple(tuple(1 if i == j else 0 for j in range(n))
                                       for i in range(n)))


def conjugation_matrix(level: int) -> LinearOperator:
    """diag(1, -1, ..., -1): the matrix of x -> conj(x)."""
    n = 1 << level
    return LinearOperator(level, tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class Nullspace:
    """Exact kernel: independent basis Elements, reduced echelon order."""

    dimension: int
    basis: tuple

    def to_json_dict(self) -> dict:
        return {"dimension": self.dimension, "basis": [e.to_json_dict() for e in self.basis]}


def nullspace(op: LinearOperator) -> Nullspace:
    vecs = kernel_basis(op.matrix, ncols=op.dim)
    return Nullspace(len(vecs), tuple(Element(op.level, v) for v in vecs))


def oracle_solve_sim(a: Element, b: Element) -> Nullspace:
    """All exact solutions of ax = xb: kernel of L_a - R_b."""
    _require_exact(a, b)
    if a.level != b.level:
        raise ValueError("level mismatch")
    return nullspace(left_mul_matrix(a) - right_mul_matrix(b))


def oracle_solve_consim(a: Element, b: Element) -> Nullspace:
    """All exact solutions of ax = conj(x)b: kernel of L_a - R_b . conj."""
    _require_exact(a, b)
    if a.level != b.level:
        raise ValueError("level mismatch")
    op = left_mul_matrix(a) - right_mul_matrix(b).compose(conjugation_matrix(a.level))
    return nullspace(op)


def _two_term_candidates(level: int) -> list[Element]:
    n = 1 << level
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                coeffs = [0] * n
                coeffs[i] = 1
                coeffs[j] = s
                out.append(Element(level, tuple(coeffs)))
    return out


def zero_divisor_search(level: int, budget: int = 2000,
                        seed: int = 0) -> Optional[tuple[Element, Element]]:
    """First nonzero pair (a, x) with ax = 0 exactly, or None.

    Exhausts the structured +-e_i +- e_j family first (the classical sedenion
    zero divisors live there), then tries `budget` random two-term samples.
    Levels <= 3 are division algebras, so the search comes back empty there.
    """
    cands = _two_term_candidates(level)
    for a in cands:
        for x in cands:
            if multiply(a, x).is_zero():
                return a, x
    if level <= 3:
        return None
    rng = random.Random(seed)
    n = 1 << level
    for _ in range(budget):
        pair = []
        for _ in range(2):
            i, j = rng.sample(range(n), 2)
            coeffs = [0] * n
            coeffs[i] = rational(rng.randint(1, 3))
            coeffs[j] = rational(rng.choice((-3, -2, -1, 1, 2, 3)))
            pair.append(Element(level, tuple(coeffs)))
        a, x = pair
        if multiply(a, x).is_zero():
            return a, x
    return None
