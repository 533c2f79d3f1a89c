"""Sign behavior of polynomials over the open positive orthant.

Classification is sound, never speculative: Zero/Pos/Neg verdicts come only
from the exact coefficient test, Mixed only from two exact rational witness
evaluations with strictly opposite signs, and everything else stays
Unresolved.  All sampling is driven by a fixed 64-bit linear congruential
generator so identical (polynomial, budget, seed) inputs reproduce identical
verdicts and witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .minors import minor_values_at
from .polyring import CoeffSignSummary, Polynomial, RationalPoint, VariableTable
from .symmatrix import SymMatrix

__all__ = [
    "Lcg64",
    "SignKind",
    "SignClass",
    "SeprSequence",
    "classify_polynomial",
    "witness_search",
    "sepr_at_point",
    "sign_of",
    "format_sign_set",
    "DEFAULT_BUDGET",
    "DEFAULT_SEED",
]

DEFAULT_BUDGET = 1000
DEFAULT_SEED = 0

# Fixed order in which sign-set elements are rendered.
_SIGN_ORDER = ("0", "+", "-")


class Lcg64(object):
    """64-bit linear congruential generator with fixed constants.

    state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)

    Draws use the top 32 bits of the updated state.  Rational samples are
    u/v with u, v uniform in [1, 100], which keeps every evaluated sign an
    exact rational comparison.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def draw(self, lo: int, hi: int) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self._MASK
        return lo + (self.state >> 32) % (hi - lo + 1)

    def fraction(self) -> Fraction:
        numerator = self.draw(1, 100)
        denominator = self.draw(1, 100)
        return Fraction(numerator, denominator)

    def point(self, table: VariableTable) -> RationalPoint:
        """Strictly positive rational point, one u/v pair per variable in
        declaration order."""
        return RationalPoint(table, tuple(self.fraction() for _ in range(len(table))))


def sign_of(value: Fraction) -> str:
    if value > 0:
        return "+"
    if value < 0:
        return "-"
    return "0"


def format_sign_set(signs: frozenset) -> str:
    """Render a subset of {0,+,-} with elements in the fixed order 0,+,-."""
    return "{" + ",".join(s for s in _SIGN_ORDER if s in signs) + "}"


class SignKind(Enum):
    ZERO = "zero"
    POS = "pos"
    NEG = "neg"
    MIXED = "mixed"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class SignClass:
    """Verdict for one polynomial over the open positive orthant.

    Mixed carries two strictly positive witnesses with exactly opposite
    evaluated signs.  Unresolved keeps whichever single-sign witness the
    search found, if any; it is never silently upgraded to Pos or Neg.
    """

    kind: SignKind
    pos_witness: RationalPoint | None = None
    neg_witness: RationalPoint | None = None

    def label(self) -> str:
        return self.kind.name.capitalize()


def witness_search(p: Polynomial, target: str, budget: int = DEFAULT_BUDGET,
                   seed: int = DEFAULT_SEED) -> RationalPoint | None:
    """Seeded search for a strictly positive point where p has sign ``target``.

    The coefficient test is a pre-filter: a sign that the summary rules out
    is reported absent without spending budget.  Absence is a normal outcome.
    """
    if target not in ("+", "-"):
        raise ValueError("target sign must be '+' or '-'")
    summary = p.coeff_sign_summary()
    if summary is CoeffSignSummary.ALL_ZERO:
        return None
    if summary is CoeffSignSummary.ALL_POSITIVE and target == "-":
        return None
    if summary is CoeffSignSummary.ALL_NEGATIVE and target == "+":
        return None
    rng = Lcg64(seed)
    for _ in range(budget):
        point = rng.point(p.table)
        if sign_of(p.eval_at(point)) == target:
            return point
    return None


def classify_polynomial(p: Polynomial, budget: int = DEFAULT_BUDGET,
                        seed: int = DEFAULT_SEED) -> SignClass:
    """Classify p over the positive orthant.

    Zero/Pos/Neg are decided exactly by the coefficient test.  Otherwise the
    seeded sample stream is scanned for the first positive-value and first
    negative-value points; finding both within ``budget`` samples yields
    Mixed, anything less stays Unresolved.  Zero evaluations consume budget
    but witness nothing.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    summary = p.coeff_sign_summary()
    if summary is CoeffSignSummary.ALL_ZERO:
        return SignClass(SignKind.ZERO)
    if summary is CoeffSignSummary.ALL_POSITIVE:
        return SignClass(SignKind.POS)
    if summary is CoeffSignSummary.ALL_NEGATIVE:
        return SignClass(SignKind.NEG)
    rng = Lcg64(seed)
    pos = neg = None
    for _ in range(budget):
        point = rng.point(p.table)
        value = p.eval_at(point)
        if value > 0:
            pos = pos or point
        elif value < 0:
            neg = neg or point
        if pos is not None and neg is not None:
            return SignClass(SignKind.MIXED, pos_witness=pos, neg_witness=neg)
    return SignClass(SignKind.UNRESOLVED, pos_witness=pos, neg_witness=neg)


class SeprSequence:
    """Per-order sign sets (s_1, ..., s_n) of a matrix at one point."""

    def __init__(self, sets: Sequence[frozenset]):
        self.sets = tuple(frozenset(s) for s in sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.sets)

    def __getitem__(self, k: int) -> frozenset:
        """1-based: sequence[k] is the sign set of the k x k minors."""
        if not 1 <= k <= len(self.sets):
            raise IndexError(k)
        return self.sets[k - 1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SeprSequence):
            return self.sets == other.sets
        if isinstance(other, (tuple, list)):
            return self.sets == tuple(frozenset(s) for s in other)
        return NotImplemented

    def __str__(self) -> str:
        return " ".join(format_sign_set(s) for s in self.sets)

    def __repr__(self) -> str:
        return f"SeprSequence({self})"


def sepr_at_point(matrix: SymMatrix, point: RationalPoint) -> SeprSequence:
    """Exact sepr-sequence of ``matrix`` at a strictly positive point:
    s_k collects the signs of all C(n,k) principal k x k minors."""
    if not point.is_strictly_positive():
        raise ValueError("point must be strictly positive")
    if point.table.names[: len(matrix.table)] != matrix.table.names:
        raise ValueError("point does not assign every matrix variable")
    values = minor_values_at(matrix, point)
    signs: list[set] = [set() for _ in range(matrix.n)]
    for mask, value in values.items():
        signs[mask.bit_count() - 1].add(sign_of(value))
    return SeprSequence([frozenset(s) for s in signs])
