"""Cayley-Dickson algebra kernel and equation-solving toolkit."""

from .core import (EXACT, FLOAT, MAX_TABLE_LEVEL, Element, StructureTable,
                   SubalgebraBasis, add, basis_element, conjugate, embed,
                   element_from_json_dict, format_element, im, inverse,
                   make_element, multiply, multiply_via_table, norm, norm_sq,
                   one, pow_element, random_element, rational, re,
                   scalar_element, scalar_mul, structure_table, sub,
                   subalgebra_basis, to_exact, to_float, zero)
from .laws import (Law, LawReport, SpanExperimentReport, check_law,
                   law_catalog, scan_level, span_experiment)
from .linalg import EchelonSpan, kernel_basis, rank, spans_equal
from .oracle import (LinearOperator, Nullspace, conjugation_matrix,
                     left_mul_matrix, nullspace, oracle_solve_consim,
                     oracle_solve_sim, right_mul_matrix, zero_divisor_search)
from .parser import ParseError, eval_expression, parse_element
from .solvers import (SimilarityClass, SolutionSet, VerificationError,
                      canonical_form, consim_to_norm_witness, consimilar,
                      elements_close, exact_sqrt, nth_root, similar,
                      similarity_class, solve_conj_transform, solve_consim,
                      solve_quadratic, solve_sim, solve_xax, sqrt)
from .cli import run_command

__version__ = "0.1.0"
