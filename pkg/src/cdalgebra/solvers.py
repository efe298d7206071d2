"""Closed-form solvers: similarity, consimilarity, canonical forms, roots,
conjugate transforms, and quadratics.

Semantics are level-aware.  Through the octonions (level 3) the solvability
conditions are necessary and sufficient; from the sedenions on (level 4 and
above, where zero divisors appear) they are sufficient only, and every
returned representative is verified against its source equation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import (EXACT, FLOAT, Element, basis_element, conjugate, im,
                   inverse, multiply, norm, norm_sq, one, pow_element,
                   rational, re, scalar_element, subalgebra_basis, to_float,
                   zero)
from .linalg import EchelonSpan, float_kernel_basis, kernel_basis

REL_TOL = 1e-10
ABS_TOL = 1e-12

# SolutionSet variants
EMPTY = "empty"
FINITE = "finite_points"
SCALING = "scaling_family"
AFFINE = "affine_subspace"
MODULE = "parametric_module"

# condition semantics
IFF = "iff"
SUFFICIENT = "sufficient"

# completeness
GENERAL = "general"
PARTICULAR = "particular"

TWO_SIDED = "two_sided"
ONE_SIDED = "one_sided"


class VerificationError(RuntimeError):
    """A computed solution failed its substitution check."""


def scalars_close(x: float, y: float, rel: float = REL_TOL, abs_: float = ABS_TOL) -> bool:
    return abs(x - y) <= abs_ + rel * max(abs(x), abs(y))


def elements_close(x: Element, y: Element, rel: float = REL_TOL, abs_: float = ABS_TOL) -> bool:
    d = math.sqrt(sum((float(p) - float(q)) ** 2 for p, q in zip(x.coeffs, y.coeffs)))
    scale = max(norm(x), norm(y))
    return d <= abs_ + rel * scale


def exact_sqrt(q):
    """Exact rational square root, or None when q is not a perfect square."""
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return rational(rn, rd)
    return None


def _check_pair(a: Element, b: Element) -> None:
    if a.level != b.level:
        raise ValueError(f"level mismatch: {a.level} vs {b.level}")
    if a.backend != b.backend:
        raise ValueError(f"backend mismatch: {a.backend} vs {b.backend}")


def _eq_elements(x: Element, y: Element) -> bool:
    if x.backend == EXACT and y.backend == EXACT:
        return x.coeffs == y.coeffs
    return elements_close(x, y)


def _align(x: Element, backend: str) -> Element:
    return to_float(x) if backend == FLOAT and x.backend == EXACT else x


def _semantics(level: int) -> str:
    return IFF if level <= 3 else SUFFICIENT


def _element_json(e: Element) -> dict:
    d = e.to_json_dict()
    d["text"] = str(e)
    return d


@dataclass(frozen=True)
class SolutionSet:
    """Tagged solution description for one equation.

    variant selects which payload fields are meaningful:
      finite_points      -> points
      scaling_family     -> direction (solutions are lambda * direction)
      affine_subspace    -> basis (rational/real span; see note for flagged
                            sphere cases, where the basis vectors are
                            individual solutions and the span is not)
      parametric_module  -> module_left/module_right with
                            x = module_left * p + p * module_right, p ranging
                            over `domain` (None means the full algebra);
                            points carries distinguished particular solutions
    """

    variant: str
    level_semantics: str
    completeness: str
    points: tuple = ()
    direction: Element | None = None
    basis: tuple = ()
    module_left: Element | None = None
    module_right: Element | None = None
    domain: tuple | None = None
    note: str | None = None

    @property
    def is_empty(self) -> bool:
        return self.variant == EMPTY

    def module_map(self, p: Element) -> Element:
        if self.variant != MODULE:
            raise ValueError("not a parametric module")
        return multiply(self.module_left, p) + multiply(p, self.module_right)

    def module_domain_basis(self) -> tuple:
        if self.domain is not None:
            return self.domain
        level, backend = self.module_left.level, self.module_left.backend
        return tuple(basis_element(level, i, backend) for i in range(1 << level))

    def representatives(self) -> list[Element]:
        """Verified sample solutions; spanning for the linear variants."""
        if self.variant == FINITE:
            return list(self.points)
        if self.variant == SCALING:
            return [self.direction]
        if self.variant == AFFINE:
            return list(self.basis)
        if self.variant == MODULE:
            reps = [self.module_map(p) for p in self.module_domain_basis()]
            return [r for r in reps if not r.is_zero()]
        return []

    def to_json_dict(self) -> dict:
        d = {"variant": self.variant,
             "level_semantics": self.level_semantics,
             "completeness": self.completeness}
        if self.variant == FINITE:
            d["points"] = [_element_json(p) for p in self.points]
        elif self.variant == SCALING:
            d["direction"] = _element_json(self.direction)
        elif self.variant == AFFINE:
            d["basis"] = [_element_json(e) for e in self.basis]
        elif self.variant == MODULE:
            d["map"] = {"left_factor": _element_json(self.module_left),
                        "right_factor": _element_json(self.module_right)}
            d["domain"] = ("full" if self.domain is None
                           else [_element_json(e) for e in self.domain])
            d["points"] = [_element_json(p) for p in self.points]
        d["representatives"] = [_element_json(r) for r in self.representatives()]
        if self.note:
            d["note"] = self.note
        return d


def _empty(level: int, note: str | None = None) -> SolutionSet:
    return SolutionSet(EMPTY, _semantics(level), GENERAL, note=note)


# -- similarity ---------------------------------------------------------------

@dataclass(frozen=True)
class SimilarityClass:
    """Invariants (Re a, |Im a|^2) that decide similarity at division levels."""

    real_part: object
    im_norm_sq: object

    @property
    def im_norm(self) -> float:
        return math.sqrt(float(self.im_norm_sq))

    def matches(self, other: "SimilarityClass", rel: float = REL_TOL) -> bool:
        both_exact = not (isinstance(self.real_part, float) or isinstance(other.real_part, float))
        if both_exact:
            return self.real_part == other.real_part and self.im_norm_sq == other.im_norm_sq
        return (scalars_close(float(self.real_part), float(other.real_part), rel)
                and scalars_close(float(self.im_norm_sq), float(other.im_norm_sq), rel))


def similarity_class(a: Element) -> SimilarityClass:
    return SimilarityClass(re(a), norm_sq(im(a)))


def similar(a: Element, b: Element) -> bool:
    """Re a = Re b and |Im a| = |Im b|; exact when both operands are exact."""
    if a.level != b.level:
        raise ValueError("level mismatch")
    return similarity_class(a).matches(similarity_class(b))


def consimilar(a: Element, b: Element) -> bool:
    """Equal norms; the consimilarity invariant at every level."""
    if a.level != b.level:
        raise ValueError("level mismatch")
    if a.backend == EXACT and b.backend == EXACT:
        return norm_sq(a) == norm_sq(b)
    return scalars_close(float(norm_sq(a)), float(norm_sq(b)))


def _kernel_elements(rows: list[list], level: int, backend: str) -> list[Element]:
    n = 1 << level
    if backend == EXACT:
        return [Element(level, v) for v in kernel_basis(rows, ncols=n)]
    frows = [[float(x) for x in r] for r in rows]
    return [Element(level, v) for v in float_kernel_basis(frows, ncols=n)]


def _im_hyperplane_basis(a: Element) -> list[Element]:
    # {x : Re x = 0 and sum_{i>=1} a_i x_i = 0}
    n = a.dim
    row0 = [1] + [0] * (n - 1)
    row1 = [0] + list(a.coeffs[1:])
    if a.backend == FLOAT:
        row0 = [1.0] + [0.0] * (n - 1)
    return _kernel_elements([row0, row1], a.level, a.backend)


def _re_ax_zero_basis(a: Element) -> list[Element]:
    # {x : Re(ax) = 0}, i.e. a_0 x_0 - a_1 x_1 - ... = 0
    row = [a.coeffs[0]] + [-c for c in a.coeffs[1:]]
    return _kernel_elements([row], a.level, a.backend)


def solve_sim(a: Element, b: Element) -> SolutionSet:
    """Solve ax = xb.

    Empty iff a and b are not similar (a necessary-and-sufficient test through
    level 3, sufficient-only from level 4 on).  Otherwise:

    * b != conj(a), level <= 3: the parametric module
      x = (Im a) p + p (Im b), with p over the full algebra (level <= 2) or
      over the subalgebra generated by a and b (level 3); the two
      distinguished particular solutions x1 = Im a + Im b and
      x2 = |Im a||Im b| - (Im a)(Im b) ride along in `points`.
    * b != conj(a), level >= 4: the scaling family lambda x1 only (x2 stops
      being a solution once alternativity fails).
    * b = conj(a): the hyperplane of imaginary x orthogonal to Im a, which is
      the general solution at every level.

    Real inputs are a classical extension: equal reals commute with
    everything, distinct reals admit only x = 0.
    """
    _check_pair(a, b)
    level, backend = a.level, a.backend
    sem = _semantics(level)
    if a.is_real() and b.is_real():
        if _eq_elements(a, b):
            full = tuple(basis_element(level, i, backend) for i in range(a.dim))
            return SolutionSet(AFFINE, sem, GENERAL, basis=full,
                               note="extension: equal real inputs, every x solves")
        return _empty(level, note="extension: distinct real inputs")
    if not similar(a, b):
        return _empty(level)
    if _eq_elements(b, conjugate(a)):
        basis = tuple(_im_hyperplane_basis(a))
        return SolutionSet(AFFINE, sem, GENERAL, basis=basis,
                           note="b = conj(a): imaginary x with <Im a, Im x> = 0")
    ia, ib = im(a), im(b)
    x1 = ia + ib
    if backend == EXACT:
        s = norm_sq(ia)  # |Im a||Im b| = |Im a|^2 exactly, since the pair is similar
    else:
        s = math.sqrt(float(norm_sq(ia))) * math.sqrt(float(norm_sq(ib)))
    x2 = scalar_element(level, s) - multiply(ia, ib)
    if level >= 4:
        return SolutionSet(SCALING, sem, PARTICULAR, direction=x1,
                           note="sufficient only: lambda (Im a + Im b); "
                                "the x2 companion fails beyond the octonions")
    domain = None
    if level == 3:
        if backend == EXACT:
            domain = subalgebra_basis([a, b]).basis
        else:
            domain = (one(level, FLOAT), a, b, multiply(a, b))
    return SolutionSet(MODULE, sem, GENERAL, points=(x1, x2),
                       module_left=ia, module_right=ib, domain=domain)


def canonical_form(a: Element) -> tuple[Element, SolutionSet]:
    """Similarity-canonical complex form Re a + |Im a| e1, with witness.

    The witness solves a x = x canonical.  Exact when |Im a|^2 is a perfect
    rational square, otherwise computed on the float backend.  Real inputs
    are returned unchanged with witness {1}, flagged degenerate.
    """
    level = a.level
    if a.is_real():
        wit = SolutionSet(FINITE, _semantics(level), PARTICULAR,
                          points=(one(level, a.backend),),
                          note="degenerate: real input is its own canonical form")
        return a, wit
    if a.backend == EXACT:
        s = exact_sqrt(norm_sq(im(a)))
        if s is not None:
            zer = 0
            c = Element(level, (re(a), s) + (zer,) * (a.dim - 2))
            return c, solve_sim(a, c)
        a = to_float(a)
    s = math.sqrt(float(norm_sq(im(a))))
    c = Element(level, (float(re(a)), s) + (0.0,) * (a.dim - 2))
    return c, solve_sim(a, c)


# -- consimilarity ------------------------------------------------------------

def solve_consim(a: Element, b: Element) -> SolutionSet:
    """Solve ax = conj(x) b.

    Empty iff |a| != |b| (necessary and sufficient through level 3).  When
    a + conj(b) != 0 the scaling family lambda (conj(a) + b) is returned (a
    particular family; the paper gives no general form here).  When
    a + conj(b) = 0 the equation collapses to Re(ax) = 0, whose hyperplane is
    the general solution at every level.
    """
    _check_pair(a, b)
    level = a.level
    sem = _semantics(level)
    if not consimilar(a, b):
        return _empty(level)
    if _eq_elements(a + conjugate(b), zero(level, a.backend)):
        basis = tuple(_re_ax_zero_basis(a))
        return SolutionSet(AFFINE, sem, GENERAL, basis=basis,
                           note="a + conj(b) = 0: solutions are exactly Re(ax) = 0")
    return SolutionSet(SCALING, sem, PARTICULAR, direction=conjugate(a) + b,
                       note="family lambda (conj(a) + b)")


def consim_to_norm_witness(a: Element) -> Element:
    """Witness p = |a| + conj(a) with conj(p) (|a| p^-1) = a.

    Exact when |a| is rational; otherwise float, verified to tolerance.
    Raises on the degenerate p = 0 (a a non-positive real).
    """
    if a.is_zero():
        raise ValueError("zero element has no consimilarity witness")
    nval = exact_sqrt(norm_sq(a)) if a.backend == EXACT else None
    if nval is None:
        a = to_float(a)
        nval = norm(a)
    p = scalar_element(a.level, nval) + conjugate(a)
    if p.is_zero():
        raise ValueError("degenerate witness p = 0 (a = -|a|)")
    lhs = multiply(conjugate(p), inverse(p).scale(nval))
    if a.backend == EXACT:
        ok = lhs.coeffs == a.coeffs
    else:
        ok = elements_close(lhs, a)
    if not ok:
        raise VerificationError("consimilarity witness failed its substitution check")
    return p


# -- roots --------------------------------------------------------------------

def sqrt(a: Element) -> SolutionSet:
    """All square roots of a.

    Non-real a: the exact pair +-|a|^(1/2) (|a| + a)/||a| + a|, which is the
    complete root set at every level.  Positive reals give +-sqrt(a); negative
    reals at level >= 1 give the root sphere (flagged: solutions are the
    norm-sqrt(|a|) elements of the imaginary span, and each returned basis
    vector is itself a root); at level 0 a negative real has no root.
    """
    level, backend = a.level, a.backend
    sem = _semantics(level)
    if a.is_zero():
        return SolutionSet(FINITE, sem, GENERAL, points=(a,))
    if a.is_real():
        a0 = re(a)
        if a0 > 0:
            s = exact_sqrt(a0) if backend == EXACT else None
            if s is None:
                pt = scalar_element(level, math.sqrt(float(a0)))
            else:
                pt = scalar_element(level, s)
            return SolutionSet(FINITE, sem, GENERAL, points=(pt, -pt))
        if level == 0:
            return _empty(level, note="negative real: no root at level 0")
        r = exact_sqrt(-a0) if backend == EXACT else None
        if r is None:
            r = math.sqrt(float(-a0))
        basis = tuple(basis_element(level, i,
                                    FLOAT if isinstance(r, float) else EXACT).scale(r)
                      for i in range(1, 1 << level))
        return SolutionSet(AFFINE, sem, GENERAL, basis=basis,
                           note="root sphere: solutions are exactly the elements of "
                                "this imaginary span with norm |a|^(1/2); each basis "
                                "vector shown is itself a root")
    af = to_float(a)
    n = norm(af)
    t = scalar_element(level, n) + af
    x = t.scale(math.sqrt(n) / norm(t))
    return SolutionSet(FINITE, sem, GENERAL, points=(x, -x))


def _complex_roots(re_part: float, im_part: float, m: int) -> list[complex]:
    base = complex(re_part, im_part)
    r0, theta = abs(base) ** (1.0 / m), cmath.phase(base)
    return [cmath.rect(r0, (theta + 2 * math.pi * k) / m) for k in range(m)]


def nth_root(a: Element, m: int) -> SolutionSet:
    """The m-th roots of a non-real a via its canonical complex form.

    Through level 3: map a to c = Re a + |Im a| e1 with witness x, take the m
    complex roots of c, and transport each back through r -> x r x^-1.  From
    level 4 on that transport is not justified (it needs an associative
    witness subalgebra), so the roots are instead taken inside the commutative
    plane spanned by 1 and a, where power associativity makes them valid at
    every level.  Each candidate must survive an r^m = a check to be returned.
    """
    if m <= 0:
        raise ValueError("root degree must be positive")
    if a.is_real():
        raise ValueError("nth_root requires a non-real element")
    level = a.level
    sem = _semantics(level)
    af = to_float(a)
    if m == 1:
        return SolutionSet(FINITE, sem, GENERAL, points=(af,))
    note = None
    if level == 1:
        cands = [Element(1, (rk.real, rk.imag))
                 for rk in _complex_roots(af.coeffs[0], af.coeffs[1], m)]
    elif level <= 3:
        c, wit = canonical_form(af)
        x = next((r for r in wit.representatives() if norm(r) > 1e-9), None)
        if x is None:
            raise VerificationError("no usable canonical-form witness")
        xinv = inverse(x)
        cands = []
        for rk in _complex_roots(c.coeffs[0], c.coeffs[1], m):
            rel = Element(level, (rk.real, rk.imag) + (0.0,) * (af.dim - 2))
            cands.append(multiply(multiply(x, rel), xinv))
    else:
        ia = im(af)
        u = ia.scale(1.0 / norm(ia))  # the imaginary unit of the plane of a
        cands = [scalar_element(level, rk.real) + u.scale(rk.imag)
                 for rk in _complex_roots(float(re(af)), norm(ia), m)]
        note = "roots taken inside span{1, a}; conjugation transport is not justified here"
    points = tuple(r for r in cands if elements_close(pow_element(r, m), af, rel=1e-9))
    if len(points) < m:
        note = f"{m - len(points)} candidate(s) failed verification and were dropped"
    return SolutionSet(FINITE, sem, PARTICULAR, points=points, note=note)


# -- conjugate transforms -----------------------------------------------------

def solve_conj_transform(a: Element, b: Element) -> SolutionSet:
    """Solve conj(x) a x = b for non-real a, b at levels <= 3.

    Solvable iff Re a = lambda Re b and |Im a| = lambda |Im b| for some
    lambda > 0; then x = v / (sqrt(lambda) |v|) with
    v = (Im a) p + lambda p (Im b), p scanned deterministically (subalgebra
    basis of A(a,b) first, then standard basis) until a candidate verifies.
    The resulting |x|^2 = 1/lambda.
    """
    _check_pair(a, b)
    level = a.level
    if level >= 4:
        raise ValueError("conj(x) a x = b is unsupported at level >= 4: "
                         "the reduction through ax = x b / |x|^2 is not justified there")
    if a.is_real() or b.is_real():
        raise ValueError("requires non-real a and b")
    exact = a.backend == EXACT
    re_a, re_b = re(a), re(b)
    n2a, n2b = norm_sq(im(a)), norm_sq(im(b))
    if (re_b != 0) if exact else (abs(float(re_b)) > ABS_TOL):
        if exact:
            lam_x = rational(re_a) / rational(re_b)
            if lam_x <= 0:
                return _empty(level, note="lambda = Re a / Re b is not positive")
            if n2a != lam_x * lam_x * n2b:
                return _empty(level, note="imaginary norms inconsistent with lambda")
            lam = float(lam_x)
        else:
            lam = float(re_a) / float(re_b)
            if lam <= 0:
                return _empty(level, note="lambda = Re a / Re b is not positive")
            if not scalars_close(float(n2a), lam * lam * float(n2b), rel=1e-8):
                return _empty(level, note="imaginary norms inconsistent with lambda")
    else:
        nonzero_re_a = (re_a != 0) if exact else (abs(float(re_a)) > ABS_TOL)
        if nonzero_re_a:
            return _empty(level, note="Re b = 0 forces Re a = 0")
        lam = math.sqrt(float(n2a) / float(n2b))
    af, bf = to_float(a), to_float(b)
    ia, ib = im(af), im(bf)
    candidates: list[Element] = []
    if level == 3 and exact:
        candidates += [to_float(p) for p in subalgebra_basis([a, b]).basis]
    candidates += [basis_element(level, i, FLOAT) for i in range(1 << level)]
    saw_nonzero = False
    for p in candidates:
        v = multiply(ia, p) + multiply(p, ib).scale(lam)
        nv = norm(v)
        if nv <= 1e-12:
            continue
        saw_nonzero = True
        x = v.scale(1.0 / (math.sqrt(lam) * nv))
        lhs = multiply(conjugate(x), multiply(af, x))
        if elements_close(lhs, bf, rel=1e-9):
            return SolutionSet(FINITE, IFF, PARTICULAR, points=(x,),
                               note=f"lambda = {lam!r}; |x|^2 = 1/lambda")
    if not saw_nonzero:
        raise ValueError("all p candidates give zero numerator")
    raise VerificationError("no p candidate produced a verified solution")


def solve_xax(a: Element, b: Element) -> SolutionSet:
    """Solve x a x = b at levels <= 3 by reducing to (ax)^2 = ab.

    Candidates are x = a^-1 s over the square roots s of ab, kept only when
    x a x = b verifies.  When ab is a negative real the root sphere makes the
    solutions a continuum; the verified sphere representatives are returned
    with a note.
    """
    _check_pair(a, b)
    level = a.level
    if level >= 4:
        raise ValueError("x a x = b is unsupported at level >= 4: "
                         "it is not equivalent to (ax)(ax) = ab there")
    if a.is_zero():
        raise ValueError("a must be invertible")
    ab = multiply(a, b)
    roots = sqrt(ab)
    if roots.is_empty:
        return _empty(level, note="ab has no square root at this level")
    cands = roots.representatives()
    backend = cands[0].backend
    a_al, b_al = _align(a, backend), _align(b, backend)
    ainv = inverse(a_al)
    exact_out = backend == EXACT
    out = []
    for s in cands:
        x = multiply(ainv, s)
        lhs = multiply(multiply(x, a_al), x)
        ok = lhs.coeffs == b_al.coeffs if exact_out else elements_close(lhs, b_al, rel=1e-9)
        if ok:
            out.append(x)
    if not out:
        return _empty(level, note="no verified candidate from the square-root reduction")
    sphere = roots.variant == AFFINE
    completeness = GENERAL if (level <= 2 and not sphere) else PARTICULAR
    note = None
    if sphere:
        note = ("ab is a negative real: solutions form a continuum; the points are "
                "the verified images a^-1 s of the root-sphere representatives")
    return SolutionSet(FINITE, _semantics(level), completeness,
                       points=tuple(out), note=note)


def solve_quadratic(b: Element, c: Element, form: str = TWO_SIDED) -> SolutionSet:
    """Solve x^2 + bx + xb + c = 0 (two-sided) or x^2 + xb + c = 0 (one-sided).

    Two-sided completes the square: (x + b)^2 = b^2 - c, valid by pure
    bilinearity at every level, so x = -b + s over sqrt(b^2 - c).  One-sided
    requires c in the subalgebra A(b) (checked exactly on the exact backend)
    and solves inside that commutative plane: x = -b/2 + s over
    sqrt(b^2/4 - c).  All roots are substitution-verified.
    """
    _check_pair(b, c)
    level = b.level
    sem = _semantics(level)
    exact = b.backend == EXACT

    if form == TWO_SIDED:
        disc = multiply(b, b) - c
        roots = sqrt(disc)
        if roots.is_empty:
            return _empty(level, note="b^2 - c is a negative real at level 0")
        cands = roots.representatives()
        backend = cands[0].backend
        b_al, c_al = _align(b, backend), _align(c, backend)
        out = []
        for s in cands:
            x = s - b_al
            resid = (multiply(x, x) + multiply(b_al, x) + multiply(x, b_al) + c_al)
            if (resid.is_zero() if backend == EXACT
                    else elements_close(resid, zero(level, FLOAT), rel=1e-9, abs_=1e-9 * max(1.0, norm(c_al)))):
                out.append(x)
            else:
                raise VerificationError("two-sided quadratic root failed substitution")
        sphere = roots.variant == AFFINE
        note = ("b^2 - c is a negative real: solutions are -b + s over the whole root "
                "sphere; representatives shown" if sphere else None)
        return SolutionSet(FINITE, sem, roots.completeness if not sphere else PARTICULAR,
                           points=tuple(out), note=note)

    if form != ONE_SIDED:
        raise ValueError(f"unknown quadratic form {form!r}")

    # one-sided: c must lie in A(b) = span{1, b}
    if exact:
        span = EchelonSpan()
        span.add(one(level).coeffs)
        span.add(b.coeffs)
        if not span.contains(c.coeffs):
            raise ValueError("one-sided quadratic requires c in the subalgebra generated by b")
    else:
        ib = im(b)
        n2 = float(norm_sq(ib))
        if n2 > 0:
            beta = sum(float(p) * float(q) for p, q in zip(c.coeffs[1:], ib.coeffs[1:])) / n2
        else:
            beta = 0.0
        proj = scalar_element(level, float(re(c))) + ib.scale(beta) if n2 > 0 else to_float(
            scalar_element(level, re(c)))
        if not elements_close(to_float(c), proj, rel=1e-9, abs_=1e-9):
            raise ValueError("one-sided quadratic requires c in the subalgebra generated by b")

    quarter = rational(1, 4) if exact else 0.25
    disc = multiply(b, b).scale(quarter) - c
    roots: list[Element] = []
    if disc.is_real():
        d0 = re(disc)
        if float(d0) >= 0:
            roots = sqrt(disc).representatives()
        else:
            if b.is_real():
                return _empty(level, note="negative discriminant with real b: "
                                          "no solution inside A(b) = R")
            ibf = im(to_float(b))
            u = ibf.scale(1.0 / norm(ibf))
            rad = math.sqrt(-float(d0))
            roots = [u.scale(rad), u.scale(-rad)]
    else:
        roots = sqrt(disc).representatives()
    out = []
    for s in roots:
        bk = s.backend
        b_al, c_al = _align(b, bk), _align(c, bk)
        x = s - b_al.scale(rational(1, 2) if bk == EXACT else 0.5)
        resid = multiply(x, x) + multiply(x, b_al) + c_al
        if (resid.is_zero() if bk == EXACT
                else elements_close(resid, zero(level, FLOAT), rel=1e-9, abs_=1e-9 * max(1.0, norm(c_al)))):
            out.append(x)
        else:
            raise VerificationError("one-sided quadratic root failed substitution")
    return SolutionSet(FINITE, sem, PARTICULAR, points=tuple(out),
                       note="roots taken inside the commutative subalgebra generated by b")
