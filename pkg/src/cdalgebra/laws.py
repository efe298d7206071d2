"""Catalog of algebraic laws, per-level verification, and counterexample search.

Each law compares two exact expression evaluations.  The catalog records at
which doubling levels a law is claimed to hold: commutativity dies after the
complexes, associativity after the quaternions, alternativity and the
composition property after the octonions, while flexibility, power
associativity, the quadratic identity, trace symmetry, and the inverse
formula survive every doubling.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (Element, basis_element, conjugate, im, inverse, multiply,
                   norm_sq, one, random_element, re, scalar_element)
from .linalg import EchelonSpan
from .oracle import oracle_solve_sim

HOLDS = "holds_on_samples"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Law:
    """One identity: `check` returns (lhs, rhs) pairs to compare exactly,
    or None when a precondition (like invertibility) is unmet."""

    name: str
    arity: int
    max_level: Optional[int]  # None: claimed at every level
    check: Callable

    def claims(self, level: int) -> bool:
        return self.max_level is None or level <= self.max_level


def _commutativity(a, b):
    return [(multiply(a, b), multiply(b, a))]


def _associativity(a, b, c):
    return [(multiply(multiply(a, b), c), multiply(a, multiply(b, c)))]


def _alternativity(a, b):
    a2 = multiply(a, a)
    return [(multiply(a, multiply(a, b)), multiply(a2, b)),
            (multiply(multiply(b, a), a), multiply(b, a2))]


def _composition(a, b):
    lvl = a.level
    return [(scalar_element(lvl, norm_sq(multiply(a, b))),
             scalar_element(lvl, norm_sq(a) * norm_sq(b)))]


def _flexibility(a, b):
    return [(multiply(multiply(a, b), a), multiply(a, multiply(b, a)))]


def _conj_flexibility(a, b):
    ca = conjugate(a)
    return [(multiply(multiply(a, b), ca), multiply(a, multiply(b, ca)))]


def _power_associativity(a):
    a2 = multiply(a, a)
    return [(multiply(a, a2), multiply(a2, a)),
            (multiply(a, multiply(a, a2)), multiply(a2, a2))]


def _quadratic(a):
    lvl = a.level
    a2 = multiply(a, a)
    lhs = a2 - a.scale(2 * re(a)) + scalar_element(lvl, norm_sq(a))
    ia = im(a)
    return [(lhs, scalar_element(lvl, 0)),
            (multiply(ia, ia), scalar_element(lvl, -norm_sq(ia)))]


def _trace_symmetry(a, b):
    lvl = a.level
    return [(scalar_element(lvl, re(multiply(a, b))),
             scalar_element(lvl, re(multiply(b, a))))]


def _inverse_formula(a):
    if a.is_zero():
        return None
    inv = inverse(a)
    unit = one(a.level)
    return [(multiply(a, inv), unit), (multiply(inv, a), unit)]


_CATALOG = (
    Law("commutativity", 2, 1, _commutativity),
    Law("associativity", 3, 2, _associativity),
    Law("alternativity", 2, 3, _alternativity),
    Law("composition", 2, 3, _composition),
    Law("flexibility", 2, None, _flexibility),
    Law("conj_flexibility", 2, None, _conj_flexibility),
    Law("power_associativity", 1, None, _power_associativity),
    Law("quadratic", 1, None, _quadratic),
    Law("trace_symmetry", 2, None, _trace_symmetry),
    Law("inverse_formula", 1, None, _inverse_formula),
)


def law_catalog() -> list[Law]:
    return list(_CATALOG)


@dataclass(frozen=True)
class Counterexample:
    witness: tuple
    left: Element
    right: Element
    clause: int

    def to_json_dict(self) -> dict:
        return {"witness": [w.to_json_dict() for w in self.witness],
                "left": self.left.to_json_dict(),
                "right": self.right.to_json_dict(),
                "clause": self.clause}


@dataclass(frozen=True)
class LawReport:
    law: str
    level: int
    trials: int
    verdict: str
    counterexample: Optional[Counterexample] = None

    def to_json_dict(self) -> dict:
        d = {"law": self.law, "level": self.level, "trials": self.trials,
             "verdict": self.verdict}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.to_json_dict()
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _evaluate(law: Law, elements: tuple) -> Optional[Counterexample]:
    clauses = law.check(*elements)
    if clauses is None:
        return None
    for idx, (lhs, rhs) in enumerate(clauses):
        if lhs.coeffs != rhs.coeffs:
            return Counterexample(elements, lhs, rhs, idx)
    return None


def check_law(law: Law, elements: list[Element]) -> LawReport:
    """Evaluate one law on one tuple of exact elements."""
    if len(elements) != law.arity:
        raise ValueError(f"{law.name} takes {law.arity} elements, got {len(elements)}")
    for e in elements:
        if e.backend != "exact":
            raise ValueError("law checking requires the exact backend")
    cex = _evaluate(law, tuple(elements))
    verdict = COUNTEREXAMPLE if cex else HOLDS
    return LawReport(law.name, elements[0].level, 1, verdict, cex)


def scan_level(level: int, trials: int, seed: int) -> list[LawReport]:
    """Sweep every cataloged law at one level.

    Arity <= 2 laws are first checked exhaustively on all basis tuples
    (levels <= 4 only; the sweep is quadratic in the dimension), then on
    `trials` seeded random rational elements.  Deterministic for a fixed
    (level, trials, seed).
    """
    rng = random.Random(seed)
    basis = [basis_element(level, i) for i in range(1 << level)]
    reports = []
    for law in law_catalog():
        cex = None
        count = 0
        if law.arity <= 2 and level <= 4:
            for tup in itertools.product(basis, repeat=law.arity):
                count += 1
                cex = _evaluate(law, tup)
                if cex:
                    break
        if cex is None:
            for _ in range(trials):
                tup = tuple(random_element(rng, level) for _ in range(law.arity))
                count += 1
                cex = _evaluate(law, tup)
                if cex:
                    break
        verdict = COUNTEREXAMPLE if cex else HOLDS
        reports.append(LawReport(law.name, level, count, verdict, cex))
    return reports


# -- the span experiment on the paper's open guess ----------------------------

@dataclass(frozen=True)
class SpanTrial:
    level: int
    trial: int
    d_oracle: int
    d_pair: int
    d_module: int

    @property
    def equal(self) -> bool:
        return self.d_pair == self.d_oracle

    def to_csv(self) -> str:
        return (f"{self.level},{self.trial},{self.d_oracle},"
                f"{self.d_pair},{self.d_module},{1 if self.equal else 0}")


@dataclass(frozen=True)
class SpanExperimentReport:
    level: int
    trials: tuple

    @property
    def agree_count(self) -> int:
        return sum(1 for t in self.trials if t.equal)

    def csv_lines(self) -> list[str]:
        lines = ["level,trial,d_oracle,d_pair,d_module,equal"]
        lines += [t.to_csv() for t in self.trials]
        lines.append(f"# pair span matched the oracle kernel on "
                     f"{self.agree_count}/{len(self.trials)} trials")
        return lines

    def to_json_dict(self) -> dict:
        return {"level": self.level,
                "rows": [{"trial": t.trial, "d_oracle": t.d_oracle, "d_pair": t.d_pair,
                          "d_module": t.d_module, "equal": t.equal} for t in self.trials],
                "agree_count": self.agree_count,
                "trials": len(self.trials)}


def _rank_of(elements) -> int:
    span = EchelonSpan()
    for e in elements:
        span.add(e.coeffs)
    return span.dimension


def span_experiment(level: int, trials: int, seed: int) -> SpanExperimentReport:
    """Measure whether the two-solution span matches the full kernel of ax = xb.

    Per trial: draw a random similar pair by exact conjugation b = (pa)p^-1,
    rejecting the degenerate b = conj(a); tabulate the oracle kernel dimension,
    the dimension of span{x1, x2}, and the rank of the parametric-module image
    (over the full algebra at level 2, over the subalgebra generated by a and b
    at level 3).  No expected value is asserted at level 3: the equivalence is
    an open question, this experiment only reports the tally.
    """
    if level not in (2, 3):
        raise ValueError("span experiment runs at level 2 or 3")
    from .solvers import solve_sim

    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        while True:
            a = random_element(rng, level, non_real=True)
            p = random_element(rng, level, nonzero=True)
            b = multiply(multiply(p, a), inverse(p))
            if b.coeffs != conjugate(a).coeffs:
                break
        sol = solve_sim(a, b)
        x1, x2 = sol.points
        d_pair = _rank_of([x1, x2])
        d_oracle = oracle_solve_sim(a, b).dimension
        d_module = _rank_of([sol.module_map(q) for q in sol.module_domain_basis()])
        rows.append(SpanTrial(level, t, d_oracle, d_pair, d_module))
    return SpanExperimentReport(level, tuple(rows))
