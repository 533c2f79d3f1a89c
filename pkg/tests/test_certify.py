"""Case-split certificates and the end-to-end claim verification."""

import json
import math
import random

import pytest

from seprkit import (
    IndexSet,
    Polynomial,
    RationalPoint,
    VariableTable,
    all_principal_minors,
    certify_level,
    check_case_rule,
    discover_pivots,
    matrix_from_document,
    parse_entry,
    sepr_at_point,
    verify_paper_claims,
)
from seprkit.certify import (
    FAIL,
    INCONCLUSIVE,
    METHOD_ALL_ZERO,
    METHOD_CONSTANT_SIGN,
    METHOD_PIVOT,
    METHOD_SAMPLING,
    PASS,
)
from seprkit.symmatrix import PAPER_MATRIX_DOCUMENT
from _oracles import certificate_mismatches, random_positive_point, sign_str

SIZE9_SUBSETS = [IndexSet.of({1, 2, j} | set(range(7, 13)), 12) for j in (3, 4, 5, 6)]


def pivot_poly(table):
    return parse_entry("b1*b4 - b2*b3", table)


def mutated_document():
    doc = json.loads(json.dumps(PAPER_MATRIX_DOCUMENT))
    assert doc["entries"][7][4] == "b5"
    doc["entries"][7][4] = "-b5"  # flip the sign of the (8,5) entry
    return doc


# ------------------------------------------------------------- case rules


def test_case_rule_on_the_four_nonzero_size9_minors(builtin_matrix, builtin_minors):
    D = pivot_poly(builtin_matrix.table)
    expected = {
        3: ("+", "-", "0"),
        4: ("-", "+", "0"),
        5: (None, "-", "-"),
        6: ("+", None, "+"),
    }
    for j, subset in zip((3, 4, 5, 6), SIZE9_SUBSETS):
        dec = check_case_rule(builtin_minors.minor(subset), D, subset)
        assert (dec.when_pos, dec.when_neg, dec.when_zero) == expected[j], j
        assert dec.identity_holds(D)
        assert dec.q * D + dec.r == dec.minor
    # the j=3 quotient is the positive monomial from the claim
    dec3 = check_case_rule(builtin_minors.minor(SIZE9_SUBSETS[0]), D)
    assert str(dec3.q) == "a1*a2*a3*b8*c1*c2*c3"
    assert dec3.r.is_zero()


def test_case_rule_constant_sign_shortcut(builtin_matrix, builtin_minors):
    D = pivot_poly(builtin_matrix.table)
    pos_minor = builtin_minors.minor(IndexSet.of([1, 7, 10], 12))
    dec = check_case_rule(pos_minor, D)
    assert (dec.when_pos, dec.when_neg, dec.when_zero) == ("+", "+", "+")
    neg_minor = builtin_minors.minor(IndexSet.of([4, 9, 12], 12))
    dec = check_case_rule(neg_minor, D)
    assert (dec.when_pos, dec.when_neg, dec.when_zero) == ("-", "-", "-")
    zero_minor = builtin_minors.minor(IndexSet.of([1, 2, 3], 12))
    dec = check_case_rule(zero_minor, D)
    assert (dec.when_pos, dec.when_neg, dec.when_zero) == ("0", "0", "0")


def test_case_rule_rejects_zero_pivot():
    table = VariableTable(["x"])
    x = Polynomial.variable(table, "x")
    with pytest.raises(ValueError, match="zero pivot"):
        check_case_rule(x, Polynomial.zero(table))


def test_case_rule_concluded_accessor(builtin_matrix, builtin_minors):
    D = pivot_poly(builtin_matrix.table)
    dec = check_case_rule(builtin_minors.minor(SIZE9_SUBSETS[0]), D)
    assert dec.concluded("D>0") == "+"
    assert dec.concluded("D<0") == "-"
    assert dec.concluded("D=0") == "0"
    with pytest.raises(ValueError):
        dec.concluded("D>=0")


# ------------------------------------------------------------------ pivots


def test_discover_pivots_on_size9_minors(builtin_minors):
    nonzero = [builtin_minors.minor(s) for s in SIZE9_SUBSETS]
    candidates = discover_pivots(nonzero)
    assert [str(c) for c in candidates] == [
        "b1*b4 - b2*b3",
        "b1*b4*b10 - b1*b5*b7 - b2*b3*b10",
        "b1*b4*b11 + b1*b6*b7 - b2*b3*b11",
    ]
    assert all(c.degree >= 1 for c in candidates)
    assert all(c.leading_coefficient() > 0 for c in candidates)


def test_discover_pivots_skips_constant_sign_polynomials():
    table = VariableTable(["x", "y"])
    x = Polynomial.variable(table, "x")
    y = Polynomial.variable(table, "y")
    assert discover_pivots([x + y, -x - y, Polynomial.zero(table)]) == []
    # shared primitive part appears once; sign normalization folds the pair
    assert discover_pivots([x * (x - y), y * y * (y - x)]) == [x - y]


# ----------------------------------------------------------- level results


def test_certify_level_results_for_builtin_matrix(builtin_matrix, builtin_minors):
    full = frozenset("0+-")
    for k in (1, 2, 4, 5, 7, 8, 10, 11, 12):
        guaranteed, method, cert = certify_level(builtin_matrix, k, builtin_minors)
        assert (guaranteed, method, cert) == (frozenset("0"), METHOD_ALL_ZERO, None)
    for k in (3, 6):
        guaranteed, method, cert = certify_level(builtin_matrix, k, builtin_minors)
        assert guaranteed == full and method == METHOD_CONSTANT_SIGN and cert is None
    guaranteed, method, cert = certify_level(builtin_matrix, 9, builtin_minors)
    assert guaranteed == full
    assert method == METHOD_PIVOT
    assert cert is not None and cert.k == 9
    assert cert.pivot == pivot_poly(builtin_matrix.table)
    assert cert.guaranteed == full
    assert cert.verify_identities()
    assert [dec.subset for dec in cert.decompositions] == SIZE9_SUBSETS
    # each non-0 guaranteed sign is concluded in every case
    assert cert.signs_concluded_everywhere() >= frozenset("+-")


def test_certify_level_computes_minors_when_not_supplied(builtin_matrix, builtin_minors):
    assert certify_level(builtin_matrix, 3) == certify_level(builtin_matrix, 3, builtin_minors)
    with pytest.raises(ValueError, match="out of range"):
        certify_level(builtin_matrix, 13, builtin_minors)


def test_certificate_soundness_on_sampled_and_projected_points(builtin_matrix, builtin_minors):
    _, _, cert = certify_level(builtin_matrix, 9, builtin_minors)
    table = builtin_matrix.table
    rng = random.Random(606)
    points = [random_positive_point(rng, table) for _ in range(320)]

    # force coverage of the D = 0 case: substitute b4 := b2*b3/b1, which
    # zeroes the pivot exactly while keeping every variable positive
    i_b1, i_b2 = table.index("b1"), table.index("b2")
    i_b3, i_b4 = table.index("b3"), table.index("b4")
    for _ in range(120):
        free = random_positive_point(rng, table)
        values = list(free.values)
        values[i_b4] = values[i_b2] * values[i_b3] / values[i_b1]
        points.append(RationalPoint(table, tuple(values)))

    buckets = {"+": 0, "-": 0, "0": 0}
    for point in points:
        buckets[sign_str(cert.pivot.eval_at(point))] += 1
    assert buckets["+"] >= 100 and buckets["-"] >= 100 and buckets["0"] >= 120

    assert certificate_mismatches(cert, points) == []


def test_guaranteed_sets_are_observed_at_every_sampled_point(builtin_matrix, builtin_minors):
    levels = [certify_level(builtin_matrix, k, builtin_minors) for k in range(1, 13)]
    rng = random.Random(99)
    for _ in range(20):
        point = random_positive_point(rng, builtin_matrix.table)
        sequence = sepr_at_point(builtin_matrix, point)
        for k, (guaranteed, _, _) in enumerate(levels, start=1):
            assert guaranteed <= sequence[k], k


# ------------------------------------------------------------ verification


def test_verify_claims_default_run():
    report = verify_paper_claims()
    assert report.overall == PASS
    assert [c.status for c in report.claims] == [PASS, PASS, PASS]
    assert [c.name for c in report.claims] == ["zero-levels", "full-levels", "mixed-size-9"]
    assert len(report.sepr) == 12
    methods = [level.method for level in report.sepr]
    assert methods[2] == METHOD_CONSTANT_SIGN
    assert methods[5] == METHOD_CONSTANT_SIGN
    assert methods[8] == METHOD_PIVOT
    assert all(m == METHOD_ALL_ZERO for i, m in enumerate(methods) if i not in (2, 5, 8))
    nine = report.sepr.level(9)
    assert nine.class_counts == {"zero": 216, "pos": 0, "neg": 0, "mixed": 4, "unresolved": 0}


def test_verify_claims_with_budget_one_is_inconclusive():
    report = verify_paper_claims(budget=1)
    by_name = {c.name: c for c in report.claims}
    assert by_name["zero-levels"].status == PASS
    assert by_name["full-levels"].status == PASS  # exact methods ignore budget
    assert by_name["mixed-size-9"].status == INCONCLUSIVE
    assert report.overall == INCONCLUSIVE
    assert report.sepr.level(9).class_counts["unresolved"] == 4


def test_verify_claims_reports_failures_of_a_mutated_matrix():
    mutated = matrix_from_document(mutated_document())
    report = verify_paper_claims(matrix=mutated)
    by_name = {c.name: c for c in report.claims}
    assert by_name["zero-levels"].status == PASS  # the zero pattern is untouched
    assert by_name["full-levels"].status == FAIL
    assert report.overall == FAIL
    # the mutation breaks the D=0 half of the case split: nothing concludes
    # a negative sign there, so order 9 degrades to sampling-only
    guaranteed, method, cert = certify_level(mutated, 9)
    assert method == METHOD_SAMPLING
    assert cert is None
    assert guaranteed == frozenset("0")


def test_mutated_matrix_size9_minors_still_take_both_signs():
    # the flipped entry changes one polynomial but not its mixed behavior
    mutated = matrix_from_document(mutated_document())
    minors = all_principal_minors(mutated)
    report = verify_paper_claims(matrix=mutated)
    by_name = {c.name: c for c in report.claims}
    assert by_name["mixed-size-9"].status == PASS
    changed = minors.minor(SIZE9_SUBSETS[2])
    assert "b1*b5*b7" in str(changed)


def test_report_document_layout():
    report = verify_paper_claims()
    doc = report.to_document()
    assert list(doc) == ["overall", "n", "seed", "budget", "claims", "sepr", "certificates"]
    assert doc["overall"] == "PASS"
    assert doc["n"] == 12 and doc["seed"] == 0 and doc["budget"] == 1000
    assert [row["k"] for row in doc["sepr"]] == list(range(1, 13))
    for row in doc["sepr"]:
        assert list(row["class_counts"]) == ["zero", "pos", "neg", "mixed", "unresolved"]
        assert sum(row["class_counts"].values()) == math.comb(12, row["k"])
    assert doc["sepr"][8]["guaranteed"] == ["0", "+", "-"]
    assert doc["sepr"][0]["guaranteed"] == ["0"]
    [certificate] = doc["certificates"]
    assert certificate["k"] == 9
    assert certificate["pivot"] == "b1*b4 - b2*b3"
    assert len(certificate["decompositions"]) == 4
    first = certificate["decompositions"][0]
    assert first["subset"] == "{1,2,3,7,8,9,10,11,12}"
    assert first["cases"] == {"D>0": "+", "D<0": "-", "D=0": "0"}
    # serialization is deterministic
    assert json.dumps(doc) == json.dumps(verify_paper_claims().to_document())


def test_report_text_rendering():
    report = verify_paper_claims()
    text = report.render_text()
    assert "pivot D = b1*b4 - b2*b3" in text
    assert "[PASS] zero-levels" in text
    assert "overall: PASS" in text
    assert text.count("\n") > 15
