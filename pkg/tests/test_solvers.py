import math
import random

import pytest

import cdalgebra as cd
from cdalgebra import solvers as sv
from cdalgebra.linalg import EchelonSpan, spans_equal
from cdalgebra.oracle import oracle_solve_consim, oracle_solve_sim

from _util import el, equal_norm_pair, similar_pair_by_conjugation, \
    similar_pair_by_permutation


def _span_contains(elements, x):
    span = EchelonSpan()
    for e in elements:
        span.add(e.coeffs)
    return span.contains(x.coeffs)


class TestSimilar:
    def test_i_and_j(self):
        assert sv.similar(cd.basis_element(2, 1), cd.basis_element(2, 2))

    def test_real_parts_differ(self):
        assert not sv.similar(el(2, 1, 1, 0, 0), el(2, 2, 1, 0, 0))

    def test_mixed_backend_tolerance(self):
        a = el(2, 1, 1, 1, 1)                       # |Im a|^2 = 3
        b = cd.make_element(2, [1.0, math.sqrt(3.0), 0.0, 0.0])
        assert sv.similar(a, b)

    def test_similarity_class_fields(self):
        cls = sv.similarity_class(el(2, 2, 0, 3, 4))
        assert cls.real_part == 2 and cls.im_norm_sq == 25
        assert cls.im_norm == pytest.approx(5.0)

    def test_equivalence_relation(self):
        rng = random.Random(3)
        pops = [cd.random_element(rng, 2, non_real=True) for _ in range(6)]
        for a in pops:
            assert sv.similar(a, a)
            for b in pops:
                assert sv.similar(a, b) == sv.similar(b, a)
                for c in pops:
                    if sv.similar(a, b) and sv.similar(b, c):
                        assert sv.similar(a, c)


class TestSolveSim:
    def test_i_j_particular_solution(self):
        i, j = cd.basis_element(2, 1), cd.basis_element(2, 2)
        sol = sv.solve_sim(i, j)
        assert sol.variant == sv.MODULE and sol.completeness == sv.GENERAL
        x1 = sol.points[0]
        assert x1.coeffs == (0, 1, 1, 0)  # p = 1 gives x = i + j
        # i(i+j) = -1+k = (i+j)j
        assert cd.multiply(i, x1).coeffs == (-1, 0, 0, 1)
        assert cd.multiply(x1, j).coeffs == (-1, 0, 0, 1)

    def test_conjugate_pair_affine_subspace(self):
        i = cd.basis_element(2, 1)
        sol = sv.solve_sim(i, -i)
        assert sol.variant == sv.AFFINE
        assert spans_equal([e.coeffs for e in sol.basis],
                           [cd.basis_element(2, 2).coeffs, cd.basis_element(2, 3).coeffs])

    def test_dissimilar_is_empty(self):
        sol = sv.solve_sim(cd.basis_element(2, 1), el(2, 1, 0, 1, 0))
        assert sol.is_empty and sol.level_semantics == sv.IFF

    def test_module_representatives_solve_exactly(self):
        rng = random.Random(5)
        for level in (2, 3):
            for _ in range(15):
                a, b = similar_pair_by_conjugation(rng, level)
                sol = sv.solve_sim(a, b)
                if sol.variant != sv.MODULE:
                    continue
                for x in sol.representatives():
                    assert cd.multiply(a, x).coeffs == cd.multiply(x, b).coeffs
                for x in sol.points:
                    assert cd.multiply(a, x).coeffs == cd.multiply(x, b).coeffs

    def test_level2_pair_span_equals_oracle_kernel(self):
        rng = random.Random(7)
        for _ in range(25):
            a, b = similar_pair_by_conjugation(rng, 2)
            if b.coeffs == cd.conjugate(a).coeffs:
                continue
            sol = sv.solve_sim(a, b)
            kern = oracle_solve_sim(a, b)
            assert kern.dimension == 2
            assert spans_equal([p.coeffs for p in sol.points],
                               [e.coeffs for e in kern.basis])

    def test_level2_degenerate_hyperplane_equals_oracle_kernel(self):
        rng = random.Random(9)
        for _ in range(15):
            a = cd.random_element(rng, 2, non_real=True)
            sol = sv.solve_sim(a, cd.conjugate(a))
            kern = oracle_solve_sim(a, cd.conjugate(a))
            assert spans_equal([e.coeffs for e in sol.basis],
                               [e.coeffs for e in kern.basis])

    def test_sedenion_scaling_family(self):
        rng = random.Random(11)
        a, b = similar_pair_by_permutation(rng, 4)
        sol = sv.solve_sim(a, b)
        assert sol.variant == sv.SCALING
        assert sol.level_semantics == sv.SUFFICIENT
        assert sol.completeness == sv.PARTICULAR
        x = sol.direction
        assert cd.multiply(a, x).coeffs == cd.multiply(x, b).coeffs

    def test_sedenion_x2_regression(self):
        # frozen witness: x1 solves but the quaternion/octonion x2 formula fails
        a = el(4, *([0, 1, 1] + [0] * 13))            # e1 + e2
        b = el(4, *([0, 1] + [0] * 10 + [1, 0, 0, 0]))  # e1 + e12
        assert sv.similar(a, b)
        x1 = cd.im(a) + cd.im(b)
        assert cd.multiply(a, x1).coeffs == cd.multiply(x1, b).coeffs
        x2 = cd.scalar_element(4, cd.norm_sq(cd.im(a))) - cd.multiply(cd.im(a), cd.im(b))
        assert cd.multiply(a, x2).coeffs != cd.multiply(x2, b).coeffs

    def test_level5_inherits_sedenion_semantics(self):
        rng = random.Random(61)
        a, b = similar_pair_by_permutation(rng, 5)
        sol = sv.solve_sim(a, b)
        assert sol.variant == sv.SCALING and sol.level_semantics == sv.SUFFICIENT
        x = sol.direction
        assert cd.multiply(a, x).coeffs == cd.multiply(x, b).coeffs
        a2, b2 = equal_norm_pair(rng, 5)
        sol2 = sv.solve_consim(a2, b2)
        x2 = sol2.direction
        assert cd.multiply(a2, x2).coeffs == cd.multiply(cd.conjugate(x2), b2).coeffs

    def test_real_pair_extension(self):
        sol = sv.solve_sim(cd.scalar_element(2, 3), cd.scalar_element(2, 3))
        assert sol.variant == sv.AFFINE and len(sol.basis) == 4
        assert sv.solve_sim(cd.scalar_element(2, 3), cd.scalar_element(2, 4)).is_empty

    def test_level_mismatch(self):
        with pytest.raises(ValueError, match="level mismatch"):
            sv.solve_sim(cd.one(2), cd.one(3))


class TestCanonicalForm:
    def test_sqrt3_case(self):
        a = cd.to_float(el(2, 1, 1, 1, 1))
        c, wit = sv.canonical_form(a)
        assert c.coeffs[0] == pytest.approx(1.0)
        assert c.coeffs[1] == pytest.approx(math.sqrt(3.0))
        for x in wit.representatives():
            assert sv.elements_close(cd.multiply(a, x), cd.multiply(x, c))

    def test_negative_complex_coefficient(self):
        a = el(2, 2, -3, 0, 0)
        c, wit = sv.canonical_form(a)
        assert c.coeffs == (2, 3, 0, 0)
        assert wit.variant == sv.AFFINE
        assert _span_contains(wit.basis, cd.basis_element(2, 2))
        for x in wit.basis:
            assert cd.multiply(a, x).coeffs == cd.multiply(x, c).coeffs

    def test_perfect_square_stays_exact(self):
        a = el(2, 4, 0, 3, 0)
        c, wit = sv.canonical_form(a)
        assert c.backend == cd.EXACT and c.coeffs == (4, 3, 0, 0)
        for x in wit.representatives():
            assert cd.multiply(a, x).coeffs == cd.multiply(x, c).coeffs

    def test_real_input_flagged(self):
        a = cd.scalar_element(2, 5)
        c, wit = sv.canonical_form(a)
        assert c.coeffs == a.coeffs
        assert "degenerate" in wit.note
        assert wit.points[0].coeffs == cd.one(2).coeffs


class TestSolveConsim:
    def test_i_j_family(self):
        i, j = cd.basis_element(2, 1), cd.basis_element(2, 2)
        sol = sv.solve_consim(i, j)
        assert sol.variant == sv.SCALING
        x = sol.direction
        assert x.coeffs == (0, -1, 1, 0)  # conj(i) + j
        # i(-i+j) = 1+k and conj(-i+j) j = (i-j)j = k+1
        assert cd.multiply(i, x).coeffs == (1, 0, 0, 1)
        assert cd.multiply(cd.conjugate(x), j).coeffs == (1, 0, 0, 1)

    def test_norm_mismatch_empty(self):
        assert sv.solve_consim(cd.scalar_element(2, 1), cd.scalar_element(2, 2)).is_empty

    def test_degenerate_all_imaginary(self):
        sol = sv.solve_consim(cd.scalar_element(2, 1), cd.scalar_element(2, -1))
        assert sol.variant == sv.AFFINE and len(sol.basis) == 3
        for idx in (1, 2, 3):
            assert _span_contains(sol.basis, cd.basis_element(2, idx))

    def test_family_solves_at_levels_2_to_4(self):
        rng = random.Random(13)
        for level in (2, 3, 4):
            for _ in range(10):
                a, b = equal_norm_pair(rng, level)
                sol = sv.solve_consim(a, b)
                assert sol.variant == sv.SCALING
                for lam in (1, 2, cd.rational(-1, 2)):
                    x = sol.direction.scale(lam)
                    assert cd.multiply(a, x).coeffs == cd.multiply(cd.conjugate(x), b).coeffs

    def test_degenerate_matches_oracle(self):
        rng = random.Random(17)
        for level in (2, 3):
            a = cd.random_element(rng, level, nonzero=True)
            b = -cd.conjugate(a)
            sol = sv.solve_consim(a, b)
            kern = oracle_solve_consim(a, b)
            assert spans_equal([e.coeffs for e in sol.basis],
                               [e.coeffs for e in kern.basis])

    def test_consimilarity_necessary_condition(self):
        # the "only if" direction of the norm criterion, checked mechanically at
        # levels <= 3: distinct norms force an empty oracle kernel, equal norms
        # a nonempty one
        rng = random.Random(19)
        for level in (2, 3):
            for _ in range(10):
                a, b = equal_norm_pair(rng, level)
                assert oracle_solve_consim(a, b).dimension >= 1
                bad = b + cd.one(level) if cd.norm_sq(b + cd.one(level)) != cd.norm_sq(a) \
                    else b.scale(2)
                assert oracle_solve_consim(a, bad).dimension == 0


class TestConsimWitness:
    def test_unit_i(self):
        p = sv.consim_to_norm_witness(cd.basis_element(2, 1))
        assert p.coeffs == (1, -1, 0, 0)

    def test_consimilar_predicate(self):
        assert sv.consimilar(cd.basis_element(2, 1), cd.basis_element(2, 2))
        assert not sv.consimilar(cd.one(2), cd.scalar_element(2, 2))

    def test_witness_reproduces_a(self):
        rng = random.Random(23)
        for level in (2, 3, 4):
            for _ in range(10):
                a = cd.random_element(rng, level, non_real=True, backend=cd.FLOAT)
                p = sv.consim_to_norm_witness(a)
                lhs = cd.multiply(cd.conjugate(p), cd.inverse(p).scale(cd.norm(a)))
                assert sv.elements_close(lhs, a)

    def test_normalized_elements_consimilar(self):
        rng = random.Random(29)
        a = cd.random_element(rng, 2, non_real=True, backend=cd.FLOAT)
        b = cd.random_element(rng, 2, non_real=True, backend=cd.FLOAT)
        assert sv.consimilar(a.scale(1 / cd.norm(a)), b.scale(1 / cd.norm(b)))

    def test_degenerate_negative_real(self):
        with pytest.raises(ValueError, match="degenerate"):
            sv.consim_to_norm_witness(cd.scalar_element(2, -4))


class TestSqrt:
    def test_sqrt_i(self):
        sol = sv.sqrt(cd.basis_element(2, 1))
        assert len(sol.points) == 2
        r = math.sqrt(2) / 2
        x = sol.points[0]
        assert x.coeffs[0] == pytest.approx(r) and x.coeffs[1] == pytest.approx(r)
        assert sol.points[1].coeffs == tuple(-c for c in x.coeffs)

    def test_positive_real(self):
        sol = sv.sqrt(cd.scalar_element(2, 4))
        assert {p.coeffs[0] for p in sol.points} == {2, -2}

    def test_root_sphere(self):
        sol = sv.sqrt(cd.scalar_element(2, -9))
        assert sol.variant == sv.AFFINE and "root sphere" in sol.note
        rep = sol.basis[1]  # 3j
        assert rep.coeffs == (0, 0, 3, 0)
        assert cd.multiply(rep, rep).coeffs == (-9, 0, 0, 0)

    def test_zero(self):
        assert sv.sqrt(cd.zero(2)).points[0].is_zero()

    def test_negative_real_level_zero(self):
        assert sv.sqrt(cd.scalar_element(0, -1)).is_empty

    def test_round_trip_levels_2_to_4(self):
        rng = random.Random(31)
        for level in (2, 3, 4):
            for _ in range(20):
                a = cd.random_element(rng, level, non_real=True, backend=cd.FLOAT)
                sol = sv.sqrt(a)
                assert len(sol.points) == 2
                x, y = sol.points
                assert y.coeffs == tuple(-c for c in x.coeffs)
                assert sv.elements_close(cd.multiply(x, x), a)


class TestPowAndRoots:
    def test_pow_squares(self):
        assert cd.pow_element(el(1, 1, 1), 2).coeffs == (0, 2)

    def test_pow_forms_agree_at_level_4(self):
        rng = random.Random(37)
        a = cd.random_element(rng, 4)
        a2 = cd.multiply(a, a)
        forms = {cd.multiply(a, a2).coeffs, cd.multiply(a2, a).coeffs,
                 cd.pow_element(a, 3).coeffs}
        assert len(forms) == 1

    def test_nth_root_matches_sqrt(self):
        i = cd.basis_element(2, 1)
        roots = sv.nth_root(i, 2)
        sqrts = sv.sqrt(i)
        got = {tuple(round(c, 9) for c in p.coeffs) for p in roots.points}
        want = {tuple(round(c, 9) for c in p.coeffs) for p in sqrts.points}
        assert got == want

    def test_nth_root_verifies(self):
        rng = random.Random(41)
        for level in (2, 3):
            for m in (2, 3, 4):
                a = cd.random_element(rng, level, non_real=True, backend=cd.FLOAT)
                sol = sv.nth_root(a, m)
                assert len(sol.points) == m
                for r in sol.points:
                    assert sv.elements_close(cd.pow_element(r, m), a, rel=1e-9)

    def test_nth_root_rejects_reals(self):
        with pytest.raises(ValueError, match="non-real"):
            sv.nth_root(cd.scalar_element(2, 4), 3)

    def test_nth_root_complex_level(self):
        a = cd.make_element(1, [0.0, 1.0])
        sol = sv.nth_root(a, 3)
        assert len(sol.points) == 3
        for r in sol.points:
            assert sv.elements_close(cd.pow_element(r, 3), a, rel=1e-9)

    def test_nth_root_sedenions_verified_in_plane(self):
        rng = random.Random(53)
        for m in (2, 3, 5):
            a = cd.random_element(rng, 4, non_real=True, backend=cd.FLOAT)
            sol = sv.nth_root(a, m)
            assert len(sol.points) == m  # in-plane roots survive verification
            for r in sol.points:
                assert sv.elements_close(cd.pow_element(r, m), a, rel=1e-9)

    def test_nth_root_level4_matches_sqrt(self):
        rng = random.Random(59)
        a = cd.random_element(rng, 4, non_real=True, backend=cd.FLOAT)
        got = {tuple(round(c, 8) for c in p.coeffs) for p in sv.nth_root(a, 2).points}
        want = {tuple(round(c, 8) for c in p.coeffs) for p in sv.sqrt(a).points}
        assert got == want


class TestConjTransform:
    def test_spec_example(self):
        sol = sv.solve_conj_transform(el(2, 0, 2, 0, 0), el(2, 0, 1, 0, 0))
        x = sol.points[0]
        assert x.coeffs[1] == pytest.approx(1 / math.sqrt(2))
        assert cd.norm_sq(x) == pytest.approx(0.5)  # |x|^2 = 1/lambda

    def test_negative_lambda_rejected(self):
        sol = sv.solve_conj_transform(el(2, 1, 1, 0, 0), el(2, -1, -1, 0, 0))
        assert sol.is_empty and "positive" in sol.note

    def test_a_equals_b(self):
        rng = random.Random(43)
        for level in (2, 3):
            a = cd.random_element(rng, level, non_real=True)
            sol = sv.solve_conj_transform(a, a)
            x = sol.points[0]
            af = cd.to_float(a)
            assert cd.norm(x) == pytest.approx(1.0)
            assert sv.elements_close(
                cd.multiply(cd.conjugate(x), cd.multiply(af, x)), af, rel=1e-9)

    def test_non_parallel_lambda(self):
        # lambda = 2 with Im a and Im b independent: needs the lambda-weighted map
        a, b = el(2, 0, 2, 0, 0), el(2, 0, 0, 1, 0)
        sol = sv.solve_conj_transform(a, b)
        x = sol.points[0]
        lhs = cd.multiply(cd.conjugate(x), cd.multiply(cd.to_float(a), x))
        assert sv.elements_close(lhs, cd.to_float(b), rel=1e-9)
        assert cd.norm_sq(x) == pytest.approx(0.5)

    def test_inconsistent_norms(self):
        sol = sv.solve_conj_transform(el(2, 1, 2, 0, 0), el(2, 1, 1, 0, 0))
        assert sol.is_empty

    def test_level_4_rejected(self):
        with pytest.raises(ValueError, match="level >= 4"):
            sv.solve_conj_transform(cd.basis_element(4, 1), cd.basis_element(4, 2))

    def test_real_inputs_rejected(self):
        with pytest.raises(ValueError, match="non-real"):
            sv.solve_conj_transform(cd.one(2), cd.basis_element(2, 1))

    def test_complex_degenerate_has_no_p(self):
        a = cd.make_element(1, [0, 2])
        b = cd.make_element(1, [0, -1])
        with pytest.raises(ValueError, match="zero numerator"):
            sv.solve_conj_transform(a, b)

    def test_octonion_antiparallel_uses_fallback_p(self):
        # Im b = -lambda Im a makes every p in A(a,b) give a zero numerator
        a = cd.make_element(3, [0, 2, 0, 0, 0, 0, 0, 0])
        b = cd.make_element(3, [0, -1, 0, 0, 0, 0, 0, 0])
        sol = sv.solve_conj_transform(a, b)
        x = sol.points[0]
        lhs = cd.multiply(cd.conjugate(x), cd.multiply(cd.to_float(a), x))
        assert sv.elements_close(lhs, cd.to_float(b), rel=1e-9)


class TestSolveXax:
    def test_a_i_b_i(self):
        i = cd.basis_element(2, 1)
        sol = sv.solve_xax(i, i)
        assert any(x.coeffs == (1, 0, 0, 0) for x in sol.points)
        for x in sol.points:
            assert cd.multiply(cd.multiply(x, i), x).coeffs == i.coeffs

    def test_reduces_to_real_square_root(self):
        sol = sv.solve_xax(cd.one(2), cd.scalar_element(2, 4))
        assert {p.coeffs[0] for p in sol.points} == {2, -2}

    def test_a_i_b_j(self):
        i, j = cd.basis_element(2, 1), cd.basis_element(2, 2)
        sol = sv.solve_xax(i, j)
        r = math.sqrt(2) / 2
        assert len(sol.points) == 2
        for x in sol.points:
            assert abs(x.coeffs[1]) == pytest.approx(r) and abs(x.coeffs[2]) == pytest.approx(r)
            assert sv.elements_close(cd.multiply(cd.multiply(x, cd.to_float(i)), x),
                                     cd.to_float(j), rel=1e-9)

    def test_octonion_instances(self):
        rng = random.Random(47)
        for _ in range(10):
            a = cd.random_element(rng, 3, nonzero=True, backend=cd.FLOAT)
            x = cd.random_element(rng, 3, backend=cd.FLOAT)
            b = cd.multiply(cd.multiply(x, a), x)
            sol = sv.solve_xax(a, b)
            for cand in sol.points:
                assert sv.elements_close(cd.multiply(cd.multiply(cand, a), cand), b, rel=1e-8)

    def test_level_4_rejected(self):
        with pytest.raises(ValueError, match="level >= 4"):
            sv.solve_xax(cd.basis_element(4, 1), cd.basis_element(4, 2))

    def test_singular_a_rejected(self):
        with pytest.raises(ValueError, match="invertible"):
            sv.solve_xax(cd.zero(2), cd.one(2))


class TestSolveQuadratic:
    def test_real_two_sided(self):
        # x^2 + 2x - 3 = 0 -> {1, -3}
        sol = sv.solve_quadratic(cd.one(2), cd.scalar_element(2, -3))
        assert {p.coeffs[0] for p in sol.points} == {1, -3}

    def test_two_sided_with_sphere_discriminant(self):
        b, c = cd.basis_element(2, 1), cd.one(2)
        sol = sv.solve_quadratic(b, c)
        assert sol.points, "expected verified roots"
        for x in sol.points:
            resid = (cd.multiply(x, x) + cd.multiply(cd.to_float(b), x)
                     + cd.multiply(x, cd.to_float(b)) + cd.to_float(c))
            assert sv.elements_close(resid, cd.zero(2, cd.FLOAT), abs_=1e-9)

    def test_one_sided_complex_plane(self):
        i = cd.basis_element(2, 1)
        sol = sv.solve_quadratic(i, i, form=sv.ONE_SIDED)
        assert len(sol.points) == 2
        for x in sol.points:
            resid = cd.multiply(x, x) + cd.multiply(x, cd.to_float(i)) + cd.to_float(i)
            assert sv.elements_close(resid, cd.zero(2, cd.FLOAT), abs_=1e-9)

    def test_one_sided_requires_membership(self):
        with pytest.raises(ValueError, match="subalgebra"):
            sv.solve_quadratic(cd.basis_element(2, 1), cd.basis_element(2, 2),
                               form=sv.ONE_SIDED)

    def test_one_sided_exact_real_discriminant(self):
        # b = i, c = -1: x^2 + xi - 1 = 0 inside A(i)
        i = cd.basis_element(2, 1)
        sol = sv.solve_quadratic(i, cd.scalar_element(2, -1), form=sv.ONE_SIDED)
        assert sol.points
        for x in sol.points:
            bk = x.backend
            ii = i if bk == cd.EXACT else cd.to_float(i)
            cc = cd.scalar_element(2, -1) if bk == cd.EXACT else cd.scalar_element(2, -1.0)
            resid = cd.multiply(x, x) + cd.multiply(x, ii) + cc
            if bk == cd.EXACT:
                assert resid.is_zero()
            else:
                assert sv.elements_close(resid, cd.zero(2, cd.FLOAT), abs_=1e-9)

    def test_unknown_form(self):
        with pytest.raises(ValueError, match="unknown quadratic form"):
            sv.solve_quadratic(cd.one(2), cd.one(2), form="sideways")


class TestSolutionSetJson:
    def test_module_json_shape(self):
        sol = sv.solve_sim(cd.basis_element(2, 1), cd.basis_element(2, 2))
        d = sol.to_json_dict()
        assert d["variant"] == "parametric_module"
        assert d["level_semantics"] == "iff"
        assert d["completeness"] == "general"
        assert d["domain"] == "full"
        assert d["representatives"][0]["text"] == "e1 + e2"

    def test_empty_json(self):
        d = sv.solve_sim(cd.basis_element(2, 1), el(2, 1, 0, 1, 0)).to_json_dict()
        assert d["variant"] == "empty" and d["representatives"] == []
