"""Independent oracles and shared helpers for the test suite.

The determinant oracles deliberately avoid the package's cofactor engine:
``leibniz_det`` is the textbook signed permutation sum, and
``sparse_perm_det`` is the same sum restricted to nonzero entries so it
stays fast on very sparse matrices.  Any agreement between engine and
oracle is therefore meaningful.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from seprkit import Monomial, Polynomial, RationalPoint, VariableTable


def perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def leibniz_det(rows):
    """Signed permutation sum over a dense square grid (any ring elements).

    Exponential in n; keep n <= 6.
    """
    n = len(rows)
    if n == 0:
        return 1
    total = None
    for perm in itertools.permutations(range(n)):
        term = perm_sign(perm)
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = term if total is None else total + term
    return total


def sparse_perm_det(rows, zero):
    """Permutation sum walking only nonzero entries.

    ``rows[i]`` is a list of (column, value) pairs for the nonzero entries
    of row i.  The permutation sign is tracked incrementally: assigning
    column j after the columns in ``used`` adds one inversion per used
    column greater than j.
    """
    n = len(rows)
    result = zero

    def walk(i, used, sign, product):
        nonlocal result
        if i == n:
            result = result + (product if sign > 0 else -product)
            return
        for j, value in rows[i]:
            bit = 1 << j
            if used & bit:
                continue
            flips = (used >> (j + 1)).bit_count()
            walk(i + 1, used | bit, -sign if flips % 2 else sign, product * value)

    walk(0, 0, 1, 1)
    return result


def random_int_grid(rng: random.Random, n: int, lo: int = -9, hi: int = 9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def constant_matrix(table: VariableTable, grid):
    """Wrap an integer grid as rows of constant polynomials."""
    return [[Polynomial.constant(table, value) for value in row] for row in grid]


def random_polynomial(rng: random.Random, table: VariableTable,
                      max_terms: int = 4, max_degree: int = 3,
                      coeff_bound: int = 9) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exponents = {}
        for _ in range(rng.randint(0, max_degree)):
            index = rng.randrange(len(table))
            exponents[index] = exponents.get(index, 0) + 1
        coeff = rng.randint(-coeff_bound, coeff_bound)
        mono = Monomial.of(exponents)
        terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(table, terms)


def random_positive_point(rng: random.Random, table: VariableTable) -> RationalPoint:
    values = tuple(Fraction(rng.randint(1, 60), rng.randint(1, 60))
                   for _ in range(len(table)))
    return RationalPoint(table, values)


def sign_str(value: Fraction) -> str:
    return "+" if value > 0 else "-" if value < 0 else "0"


def certificate_mismatches(certificate, points) -> list[str]:
    """Check a pivot case-split certificate against concrete positive points.

    Each point falls in exactly one case by the sign of the pivot there;
    every decomposition with a concluded sign in that case must evaluate to
    exactly that sign.  Returns a list of human-readable mismatches (empty
    means sound on this sample).
    """
    case_by_sign = {"+": "D>0", "-": "D<0", "0": "D=0"}
    problems = []
    for point in points:
        case = case_by_sign[sign_str(certificate.pivot.eval_at(point))]
        for dec in certificate.decompositions:
            concluded = dec.concluded(case)
            if concluded is None:
                continue
            actual = sign_str(dec.minor.eval_at(point))
            if actual != concluded:
                problems.append(
                    f"{dec.subset} case {case}: concluded {concluded}, got {actual}")
    return problems
