"""Symbolic square matrices, principal submatrices, and matrix file I/O.

The matrix file format is a JSON document::

    {"n": 2, "variables": ["a1", "b1"], "entries": [["0", "a1"], ["-b1", "0"]]}

``variables`` is optional and pins declaration order; otherwise variables are
declared in first-use order while entries are parsed row-major.  Entries use
the grammar of :mod:`seprkit.exprparse`.  All external indices are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

from .exprparse import ParseError, parse_entry
from .polyring import Polynomial, VariableTable, _same_table

__all__ = [
    "IndexSet",
    "SymMatrix",
    "MatrixFormatError",
    "paper_matrix",
    "matrix_from_document",
    "matrix_to_document",
    "load_matrix",
    "save_matrix",
    "PAPER_MATRIX_DOCUMENT",
]


class MatrixFormatError(ValueError):
    """Malformed matrix document."""


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing 1-based row/column indices selecting a principal
    submatrix; its size is the order of the corresponding minor."""

    indices: tuple[int, ...]

    @staticmethod
    def of(indices: Iterable[int], n: int) -> "IndexSet":
        seq = list(indices)
        if len(set(seq)) != len(seq):
            raise ValueError("duplicate index")
        for i in seq:
            if not 1 <= i <= n:
                raise ValueError(f"index {i} out of range 1..{n}")
        return IndexSet(tuple(sorted(seq)))

    @staticmethod
    def from_mask(mask: int) -> "IndexSet":
        return IndexSet(tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1))

    def mask(self) -> int:
        return sum(1 << (i - 1) for i in self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"


class SymMatrix:
    """Immutable n x n grid of polynomials over one variable table."""

    def __init__(self, table: VariableTable, rows: Sequence[Sequence[Polynomial]]):
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise MatrixFormatError("matrix grid is not square")
            for entry in row:
                if not _same_table(entry.table, table):
                    raise ValueError("entry over a different variable table")
        self.table = table
        self.rows: tuple[tuple[Polynomial, ...], ...] = tuple(tuple(row) for row in rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Polynomial:
        """1-based entry access."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"entry ({i},{j}) out of range for n={self.n}")
        return self.rows[i - 1][j - 1]

    def principal_submatrix(self, selection: "IndexSet | Iterable[int]") -> "SymMatrix":
        if not isinstance(selection, IndexSet):
            selection = IndexSet.of(selection, self.n)
        elif any(not 1 <= i <= self.n for i in selection):
            raise ValueError("index out of range")
        picked = [i - 1 for i in selection]
        return SymMatrix(self.table, [[self.rows[r][c] for c in picked] for r in picked])

    def transpose(self) -> "SymMatrix":
        return SymMatrix(self.table, [list(col) for col in zip(*self.rows)] if self.rows else [])

    def nonzero_entries(self) -> Iterator[tuple[int, int, Polynomial]]:
        """Yield (i, j, entry) for nonzero entries, row-major, 1-based."""
        for i, row in enumerate(self.rows, start=1):
            for j, entry in enumerate(row, start=1):
                if entry:
                    yield i, j, entry

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __repr__(self) -> str:
        return f"SymMatrix(n={self.n}, vars={len(self.table)})"


def matrix_from_document(document: Mapping) -> SymMatrix:
    """Build a matrix from a parsed matrix-file document."""
    if not isinstance(document, Mapping):
        raise MatrixFormatError("matrix document must be a JSON object")
    try:
        n = document["n"]
        entries = document["entries"]
    except KeyError as missing:
        raise MatrixFormatError(f"missing field {missing.args[0]!r}") from None
    if not isinstance(n, int) or n < 1:
        raise MatrixFormatError("'n' must be a positive integer")
    table = VariableTable()
    declared = document.get("variables", [])
    if not isinstance(declared, list) or any(not isinstance(v, str) for v in declared):
        raise MatrixFormatError("'variables' must be a list of names")
    for name in declared:
        try:
            table.add(name)
        except ValueError as exc:
            raise MatrixFormatError(str(exc)) from None
    if not isinstance(entries, list) or len(entries) != n:
        raise MatrixFormatError(f"'entries' must be a list of {n} rows")
    rows = []
    for i, raw_row in enumerate(entries, start=1):
        if not isinstance(raw_row, list) or len(raw_row) != n:
            raise MatrixFormatError(f"row {i} must hold exactly {n} entries")
        row = []
        for j, text in enumerate(raw_row, start=1):
            if not isinstance(text, str):
                raise MatrixFormatError(f"entry ({i},{j}) must be a string expression")
            try:
                row.append(parse_entry(text, table))
            except ParseError as exc:
                raise MatrixFormatError(
                    f"entry ({i},{j}): {exc.args[0]}"
                ) from exc
        rows.append(row)
    return SymMatrix(table, rows)


def matrix_to_document(matrix: SymMatrix) -> dict:
    """Render a matrix back to its document form (canonical entry text)."""
    return {
        "n": matrix.n,
        "variables": list(matrix.table.names),
        "entries": [[str(entry) for entry in row] for row in matrix.rows],
    }


def load_matrix(path: "str | Path") -> SymMatrix:
    try:
        document = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from exc
    return matrix_from_document(document)


def save_matrix(matrix: SymMatrix, path: "str | Path") -> None:
    Path(path).write_text(json.dumps(matrix_to_document(matrix), indent=2) + "\n")


_PAPER_VARIABLES = (
    [f"a{i}" for i in range(1, 7)]
    + [f"b{i}" for i in range(1, 12)]
    + [f"c{i}" for i in range(1, 4)]
)

_PAPER_ENTRIES = [
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "a1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "a2", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "a3"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "a4"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "a5"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "a6"],
    ["b1", "b2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["b3", "b4", "0", "0", "b5", "-b6", "0", "0", "0", "0", "0", "0"],
    ["0", "b7", "b8", "-b9", "b10", "b11", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "c1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "c2", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "c3", "0", "0", "0"],
]

PAPER_MATRIX_DOCUMENT = {
    "n": 12,
    "variables": list(_PAPER_VARIABLES),
    "entries": [list(row) for row in _PAPER_ENTRIES],
}


def paper_matrix() -> SymMatrix:
    """The built-in 12x12 parametric matrix over a1..a6, b1..b11, c1..c3.

    Its 20 nonzero entries are single signed variables; exactly two carry a
    negative sign (-b6 at (8,6) and -b9 at (9,4)).  The bundled fixture
    ``data/paper12.json`` holds the identical document.
    """
    return matrix_from_document(PAPER_MATRIX_DOCUMENT)
