"""Determinant engine against brute-force oracles, plus the minor table."""

import math
import random
from fractions import Fraction

import pytest

from seprkit import (
    IndexSet,
    Polynomial,
    SymMatrix,
    VariableTable,
    all_principal_minors,
    determinant,
    minor_values_at,
    parse_entry,
)
from seprkit.minors import MAX_ENUM_DIM
from _oracles import (
    constant_matrix,
    leibniz_det,
    random_int_grid,
    random_positive_point,
    sparse_perm_det,
)


def int_matrix(table, grid):
    return SymMatrix(table, constant_matrix(table, grid))


def swap_rows(grid, i, j):
    swapped = [list(row) for row in grid]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    return swapped


def test_determinant_matches_leibniz_on_random_integer_matrices():
    table = VariableTable()
    rng = random.Random(2024)
    for trial in range(220):
        n = rng.randint(1, 5)
        grid = random_int_grid(rng, n)
        got = determinant(int_matrix(table, grid))
        assert got == leibniz_det(grid), f"trial {trial}: {grid}"


def test_transpose_invariance_and_row_swap_antisymmetry():
    table = VariableTable()
    rng = random.Random(2025)
    for _ in range(220):
        n = rng.randint(2, 5)
        grid = random_int_grid(rng, n)
        m = int_matrix(table, grid)
        assert determinant(m.transpose()) == determinant(m)
        i, j = rng.sample(range(n), 2)
        assert determinant(int_matrix(table, swap_rows(grid, i, j))) == -determinant(m)


def test_block_upper_triangular_determinant_factors():
    table = VariableTable()
    rng = random.Random(31)
    for _ in range(40):
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        a = random_int_grid(rng, p)
        c = random_int_grid(rng, q)
        grid = [[a[i][j] if j < p else rng.randint(-9, 9) for j in range(p + q)]
                if i < p else
                [0 if j < p else c[i - p][j - p] for j in range(p + q)]
                for i in range(p + q)]
        got = determinant(int_matrix(table, grid))
        assert got == leibniz_det(a) * leibniz_det(c)


def test_symbolic_determinants():
    table = VariableTable(["a", "b", "c", "d"])
    rows = [[parse_entry(t, table) for t in row] for row in (["a", "b"], ["c", "d"])]
    assert str(determinant(SymMatrix(table, rows))) == "a*d - b*c"
    assert determinant(SymMatrix(table, [])) == 1  # 0x0 convention
    single = SymMatrix(table, [[parse_entry("a - d", table)]])
    assert str(determinant(single)) == "a - d"


def test_symbolic_determinant_matches_leibniz_on_dense_variable_matrix():
    table = VariableTable()
    rows = [[Polynomial.variable(table, f"x{i}{j}") for j in range(3)] for i in range(3)]
    m = SymMatrix(table, rows)
    assert determinant(m) == leibniz_det(rows)
    assert len(list(determinant(m).terms())) == 6


def test_minor_table_covers_every_subset(builtin_minors):
    assert len(builtin_minors) == 2 ** 12 - 1
    for k in range(1, 13):
        masks = list(builtin_minors.masks_of_order(k))
        assert len(masks) == math.comb(12, k)
        assert masks == sorted(masks)
    subset = IndexSet.of([1, 7, 10], 12)
    assert builtin_minors.minor(subset) == builtin_minors.minor(subset.mask())


def test_minor_table_agrees_with_fresh_determinants(builtin_matrix, builtin_minors):
    rng = random.Random(5)
    for _ in range(25):
        k = rng.randint(1, 12)
        subset = IndexSet.of(rng.sample(range(1, 13), k), 12)
        direct = determinant(builtin_matrix.principal_submatrix(subset))
        assert builtin_minors.minor(subset) == direct


def test_minor_table_agrees_with_sparse_permutation_oracle(builtin_matrix, builtin_minors):
    zero = Polynomial.zero(builtin_matrix.table)
    rng = random.Random(6)
    subsets = [IndexSet.of(rng.sample(range(1, 13), rng.randint(1, 9)), 12)
               for _ in range(30)]
    for subset in subsets:
        sub = builtin_matrix.principal_submatrix(subset)
        rows = [[(j, e) for j, e in enumerate(row) if e] for row in sub.rows]
        assert builtin_minors.minor(subset) == sparse_perm_det(rows, zero)


def test_enumeration_guard():
    table = VariableTable()
    n = MAX_ENUM_DIM + 1
    zero = Polynomial.zero(table)
    big = SymMatrix(table, [[zero] * n for _ in range(n)])
    with pytest.raises(ValueError, match="refusing"):
        all_principal_minors(big)


def test_minor_values_match_symbolic_evaluation(builtin_matrix, builtin_minors):
    rng = random.Random(88)
    for _ in range(3):
        point = random_positive_point(rng, builtin_matrix.table)
        values = minor_values_at(builtin_matrix, point)
        assert set(values) == set(builtin_minors.entries)
        for mask, value in values.items():
            assert value == builtin_minors.minor(mask).eval_at(point)
            assert isinstance(value, Fraction)
