"""Arbitrary-level Cayley-Dickson elements and arithmetic.

The 2^n-dimensional algebra at level n is built by recursive doubling:
an element is a pair (a', a'') of level n-1 elements, multiplied by

    (a', a'')(b', b'') = (a'b' - conj(b'')a'',  b''a' + a''conj(b'))

Level 0 is the scalars, level 1 the complex numbers, then quaternions,
octonions, sedenions, and so on.  Coefficients are either exact rationals
(authoritative for identity checking) or binary doubles (for operations
that need square roots).
"""

from __future__ import annotations

import json
import math
import numbers
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

try:  # GMP-backed rationals are ~3x faster; fractions is the portable fallback
    from gmpy2 import mpq as rational
except ImportError:  # pragma: no cover
    rational = Fraction

Scalar = Union[int, Fraction, float]

#: structure_table refuses levels above this unless overridden (table is O(4^n))
MAX_TABLE_LEVEL = 8

EXACT = "exact"
FLOAT = "float"


def is_exact_scalar(c) -> bool:
    """True for int and exact rationals, False for floats."""
    return isinstance(c, numbers.Rational)


def scalar_to_str(c) -> str:
    """Canonical text for one coefficient: "p/q" for exact, positional decimal for float."""
    if is_exact_scalar(c):
        return str(c)  # int, Fraction, and mpq all print canonical "p" or "p/q"
    s = repr(c)
    if "e" in s or "E" in s:
        # exponent notation would collide with basis tokens; expand positionally
        from decimal import Decimal

        s = format(Decimal(s), "f")
    return s


@dataclass(frozen=True)
class Element:
    """One hypercomplex number: 2^level coefficients over a uniform backend.

    coeffs[i] is the coordinate along basis unit e_i, with e_0 = 1.
    """

    level: int
    coeffs: tuple

    @property
    def backend(self) -> str:
        return FLOAT if isinstance(self.coeffs[0], float) else EXACT

    @property
    def dim(self) -> int:
        return 1 << self.level

    def __add__(self, other: "Element") -> "Element":
        _check_compat(self, other)
        return Element(self.level, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        _check_compat(self, other)
        return Element(self.level, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element(self.level, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalar * element; element * element goes through __mul__
        return self.scale(other)

    def scale(self, c) -> "Element":
        if self.backend == EXACT and not is_exact_scalar(c):
            raise TypeError("float scalar on exact element; convert with to_float first")
        if self.backend == FLOAT:
            c = float(c)
        return Element(self.level, tuple(c * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_real(self) -> bool:
        return not any(self.coeffs[1:])

    def __str__(self) -> str:
        return format_element(self)

    def to_json_dict(self) -> dict:
        coeffs = [float(c) if self.backend == FLOAT else scalar_to_str(c) for c in self.coeffs]
        return {"level": self.level, "coeffs": coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _check_compat(a: Element, b: Element) -> None:
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} vs {b.level}")
    if a.backend != b.backend:
        raise ValueError(f"backend mismatch: {a.backend} vs {b.backend}")


def make_element(level: int, coeffs: Sequence) -> Element:
    """Validate and build an Element; coeffs length must be exactly 2^level."""
    if level < 0:
        raise ValueError("level must be non-negative")
    coeffs = tuple(coeffs)
    if len(coeffs) != 1 << level:
        raise ValueError(f"length must be {1 << level} at level {level}, got {len(coeffs)}")
    n_float = sum(1 for c in coeffs if isinstance(c, float))
    if n_float not in (0, len(coeffs)):
        raise ValueError("mixed backends: coefficients must be all exact or all float")
    if n_float == 0 and not all(is_exact_scalar(c) for c in coeffs):
        raise TypeError("coefficients must be int, Fraction, exact rational, or float")
    return Element(level, coeffs)


def element_from_json_dict(d: dict) -> Element:
    def scal(s):
        if isinstance(s, str):
            if "/" in s:
                num, den = s.split("/")
                return rational(int(num), int(den))
            return rational(int(s), 1)
        return float(s)

    return make_element(int(d["level"]), [scal(s) for s in d["coeffs"]])


def zero(level: int, backend: str = EXACT) -> Element:
    c = 0.0 if backend == FLOAT else 0
    return Element(level, (c,) * (1 << level))


def one(level: int, backend: str = EXACT) -> Element:
    return scalar_element(level, 1.0 if backend == FLOAT else 1)


def basis_element(level: int, index: int, backend: str = EXACT) -> Element:
    if not 0 <= index < (1 << level):
        raise ValueError(f"basis index {index} out of range at level {level}")
    z, o = (0.0, 1.0) if backend == FLOAT else (0, 1)
    return Element(level, tuple(o if i == index else z for i in range(1 << level)))


def scalar_element(level: int, c) -> Element:
    backend = FLOAT if isinstance(c, float) else EXACT
    return Element(level, (c,) + ((0.0 if backend == FLOAT else 0),) * ((1 << level) - 1))


def add(a: Element, b: Element) -> Element:
    return a + b


def sub(a: Element, b: Element) -> Element:
    return a - b


def scalar_mul(c, a: Element) -> Element:
    return a.scale(c)


# -- multiplication by recursive doubling (the defining formula) --

def _conj_vec(v: tuple) -> tuple:
    return (v[0],) + tuple(-c for c in v[1:])


def _mul_vec(a: tuple, b: tuple, zero_scalar) -> tuple:
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    a1, a2 = a[:h], a[h:]
    b1, b2 = b[:h], b[h:]
    za1, za2 = not any(a1), not any(a2)
    zb1, zb2 = not any(b1), not any(b2)
    zvec = (zero_scalar,) * h
    # (a1,a2)(b1,b2) = (a1 b1 - conj(b2) a2,  b2 a1 + a2 conj(b1))
    p1 = zvec if (za1 or zb1) else _mul_vec(a1, b1, zero_scalar)
    p2 = zvec if (zb2 or za2) else _mul_vec(_conj_vec(b2), a2, zero_scalar)
    p3 = zvec if (zb2 or za1) else _mul_vec(b2, a1, zero_scalar)
    p4 = zvec if (za2 or zb1) else _mul_vec(a2, _conj_vec(b1), zero_scalar)
    return tuple(x - y for x, y in zip(p1, p2)) + tuple(x + y for x, y in zip(p3, p4))


def multiply(a: Element, b: Element) -> Element:
    """Product via recursive doubling; exact backend gives exact coefficients."""
    _check_compat(a, b)
    zs = 0.0 if a.backend == FLOAT else 0
    return Element(a.level, _mul_vec(a.coeffs, b.coeffs, zs))


def conjugate(a: Element) -> Element:
    return Element(a.level, _conj_vec(a.coeffs))


def re(a: Element):
    return a.coeffs[0]


def im(a: Element) -> Element:
    z = 0.0 if a.backend == FLOAT else 0
    return Element(a.level, (z,) + a.coeffs[1:])


def norm_sq(a: Element):
    """Sum of squared coefficients; exact on the exact backend."""
    return sum(c * c for c in a.coeffs)


def norm(a: Element) -> float:
    return math.sqrt(float(norm_sq(a)))


def inverse(a: Element) -> Element:
    """conj(a) / |a|^2; two-sided inverse at every level."""
    n2 = norm_sq(a)
    if not n2:
        raise ZeroDivisionError("inverse of zero element")
    if a.backend == EXACT:  # int/int would fall back to float division
        return Element(a.level, tuple(rational(c) / n2 for c in _conj_vec(a.coeffs)))
    return Element(a.level, tuple(c / n2 for c in _conj_vec(a.coeffs)))


def embed(a: Element, level: int) -> Element:
    """Zero-pad into a higher level; the doubling indexing makes this exact."""
    if level < a.level:
        raise ValueError("cannot embed into a lower level")
    pad = (0.0 if a.backend == FLOAT else 0,) * ((1 << level) - a.dim)
    return Element(level, a.coeffs + pad)


def to_float(a: Element) -> Element:
    return Element(a.level, tuple(float(c) for c in a.coeffs))


def to_exact(a: Element) -> Element:
    if a.backend == EXACT:
        return a
    return Element(a.level, tuple(Fraction(c) for c in a.coeffs))


def pow_element(a: Element, k: int) -> Element:
    """a^k by repeated squaring; well-defined by power-associativity."""
    if k < 0:
        return pow_element(inverse(a), -k)
    acc = one(a.level, a.backend)
    base = a
    while k:
        if k & 1:
            acc = multiply(acc, base)
        base = multiply(base, base)
        k >>= 1
    return acc


# -- structure constants --

@dataclass(frozen=True)
class StructureTable:
    """Signed basis products: entries[i][j] = (sign, k) meaning e_i e_j = sign * e_k."""

    level: int
    entries: tuple

    def to_json_dict(self) -> dict:
        return {"level": self.level,
                "entries": [[[s, k] for (s, k) in row] for row in self.entries]}


_TABLE_CACHE: dict[int, StructureTable] = {}
_TABLE_LOCK = threading.Lock()


def structure_table(level: int, max_level: int | None = None) -> StructureTable:
    """Basis multiplication table, derived from the doubling formula and memoized."""
    cap = MAX_TABLE_LEVEL if max_level is None else max_level
    if level > cap:
        raise ValueError(f"level {level} above table cap {cap}")
    with _TABLE_LOCK:
        table = _TABLE_CACHE.get(level)
        if table is None:
            table = _build_table(level)
            _TABLE_CACHE[level] = table
        return table


def _build_table(level: int) -> StructureTable:
    n = 1 << level
    basis = [basis_element(level, i) for i in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = multiply(basis[i], basis[j]).coeffs
            k = next(idx for idx, c in enumerate(prod) if c)
            row.append((1 if prod[k] > 0 else -1, k))
        rows.append(tuple(row))
    return StructureTable(level, tuple(rows))


def multiply_via_table(a: Element, b: Element, table: StructureTable | None = None) -> Element:
    """Independent multiplication path: coefficient convolution against the table."""
    _check_compat(a, b)
    if table is None:
        table = structure_table(a.level)
    zs = 0.0 if a.backend == FLOAT else 0
    out = [zs] * a.dim
    entries = table.entries
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        row = entries[i]
        for j, cb in enumerate(b.coeffs):
            if not cb:
                continue
            sign, k = row[j]
            term = ca * cb
            out[k] = out[k] + term if sign > 0 else out[k] - term
    return Element(a.level, tuple(out))


# -- subalgebra closure --

@dataclass(frozen=True)
class SubalgebraBasis:
    """Multiplication-closed independent basis inside a fixed ambient level."""

    ambient_level: int
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, x: Element) -> bool:
        from .linalg import EchelonSpan

        span = EchelonSpan()
        for e in self.basis:
            span.add(e.coeffs)
        return span.contains(x.coeffs)


def subalgebra_basis(generators: Iterable[Element]) -> SubalgebraBasis:
    """Smallest multiplication-closed rational span containing 1 and the generators.

    Closure is iterative: append any product that escapes the current exact
    span until no product does.  Terminates because dimension <= 2^n.
    """
    from .linalg import EchelonSpan

    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    level = gens[0].level
    for g in gens:
        if g.level != level:
            raise ValueError("generators must share a level")
        if g.backend != EXACT:
            raise ValueError("subalgebra closure requires the exact backend")

    span = EchelonSpan()
    basis: list[Element] = []
    for cand in [one(level)] + gens:
        if span.add(cand.coeffs):
            basis.append(cand)

    frontier = list(basis)
    while frontier:
        new: list[Element] = []
        for x in frontier:
            for y in basis:
                for prod in (multiply(x, y), multiply(y, x)):
                    if span.add(prod.coeffs):
                        basis.append(prod)
                        new.append(prod)
        frontier = new
    return SubalgebraBasis(level, tuple(basis))


# -- sampling --

def random_element(rng: random.Random, level: int, backend: str = EXACT,
                   nonzero: bool = False, non_real: bool = False) -> Element:
    """Random element; exact coefficients are small rationals (num in [-9,9], den in {1,2,3})."""
    n = 1 << level
    while True:
        if backend == FLOAT:
            coeffs = tuple(rng.uniform(-2.0, 2.0) for _ in range(n))
        else:
            coeffs = tuple(rational(rng.randint(-9, 9), rng.choice((1, 2, 3)))
                           for _ in range(n))
        a = Element(level, coeffs)
        if nonzero and a.is_zero():
            continue
        if non_real and not any(coeffs[1:]):
            continue
        return a


def format_element(a: Element) -> str:
    """Human form "a0 + a1e1 - a2e2"; zero terms dropped, reparses to the same element."""
    parts: list[str] = []
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        mag, neg = scalar_to_str(abs(c)), c < 0
        if i == 0:
            text = mag
        elif mag in ("1", "1.0"):
            text = f"e{i}"
        else:
            text = f"{mag}e{i}"
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f"- {text}" if neg else f"+ {text}")
    if not parts:
        return "0.0" if a.backend == FLOAT else "0"
    return " ".join(parts)
