import json

import pytest

from ia_nilpotent.exceptions import InadmissibleTriple, NotApplicable, NotClass2, PreconditionError
from ia_nilpotent.groups import theorems
from ia_nilpotent.groups.abelian import parse_descriptor
from ia_nilpotent.groups.invariants import parse_triple, structure_triple
from ia_nilpotent.groups.pcgroup import cyclic, dihedral, direct_product, heisenberg
from ia_nilpotent.groups.theorems import (
    CheckOutcome,
    check_admissible,
    check_cor22,
    check_cor23,
    check_containments,
    check_cor25,
    check_lemma12,
    check_lemma14,
    check_maximal_class,
    check_oracle,
    check_symbolic_agreement,
    check_thm21_iii,
    check_thm35,
    check_thm36,
    classify_thm21_finite,
    classify_thm21_symbolic,
    evaluate,
    finite_case_predicate,
    render_table,
    resolve_selectors,
    run_suite,
    schur_report,
    verify_example32,
)


def test_quaternion_triple_is_classified(q8):
    verdict = classify_thm21_symbolic(structure_triple(q8))
    assert verdict.case == "finite"
    assert verdict.predicate_holds
    assert verdict.direct_check_holds
    assert verdict.consistent


def test_ia_equals_inner_fails_for_q8_times_c4(q8xc4):
    triple = structure_triple(q8xc4)
    assert triple.abelianization == parse_descriptor("C_4 x C_2 x C_2")
    verdict = classify_thm21_finite(q8xc4)
    assert not verdict.predicate_holds
    assert not verdict.direct_check_holds
    assert verdict.witness
    assert verdict.consistent


def test_ia_equals_inner(q8, d8, heis3):
    for G in (q8, d8, heis3):
        verdict = classify_thm21_finite(G)
        assert verdict.predicate_holds and verdict.direct_check_holds and verdict.isomorphic


def test_star_classification_of_q8_times_c4(q8xc4):
    verdict = check_thm21_iii(q8xc4)
    assert verdict.predicate_holds
    assert verdict.isomorphic


@pytest.mark.slow
def test_star_classification_with_non_cyclic_derived():
    G = direct_product(heisenberg(2), heisenberg(2))
    assert structure_triple(G).derived == parse_descriptor("C_2 x C_2")
    verdict = check_thm21_iii(G)
    assert not verdict.predicate_holds
    assert not verdict.isomorphic
    assert verdict.consistent


def test_user_triples_are_one_directional():
    verdict = classify_thm21_symbolic(parse_triple("C_2 x C_2 | C_2 x C_2 x C_4 | C_2"))
    assert verdict.one_directional
    assert not verdict.predicate_holds
    assert not verdict.direct_check_holds
    assert verdict.consistent
    assert verdict.as_dict()["consistent"] is True


def test_torsion_free_triple():
    verdict = classify_thm21_symbolic(parse_triple("Z^2 | Z^2 | Z"))
    assert verdict.case == "torsion-free"
    assert verdict.predicate_holds and verdict.direct_check_holds


def test_star_triple():
    verdict = classify_thm21_symbolic(parse_triple("C_2 x C_2 | C_2 x C_2 | C_2 x C_2"), star=True)
    assert verdict.case == "iii"
    assert not verdict.predicate_holds
    assert not verdict.direct_check_holds


@pytest.mark.parametrize("text, constraint", [
    ("C_2 | C_2 x C_2 | C_4", "torsion-exponent"),
    ("Z | 1 | Z", "free-rank"),
    ("C_4 | C_2 x C_2 | C_4", "quotient"),
    ("C_3 | C_2 | C_3", "prime-support"),
])
def test_inadmissible_triples(text, constraint):
    with pytest.raises(InadmissibleTriple) as e:
        check_admissible(parse_triple(text))
    assert e.value.constraint == constraint
    with pytest.raises(InadmissibleTriple):
        classify_thm21_symbolic(parse_triple(text))


def test_finite_case_predicate():
    A = parse_descriptor("C_4 x C_4 x C_2 x C_2")
    holds, witness = finite_case_predicate(A, A, parse_descriptor("C_4"))
    assert holds and witness is None
    holds, witness = finite_case_predicate(parse_descriptor("C_4 x C_2"), parse_descriptor("C_4 x C_4"), parse_descriptor("C_4"))
    assert not holds
    assert "p = 2" in witness


def test_exponent_and_counting(c12, q8, q8xc4, example32):
    assert check_lemma12(c12)
    assert check_lemma12(q8)
    assert check_lemma14(q8xc4)
    with pytest.raises(NotClass2):
        check_lemma12(example32)


def test_oracle_and_containments(q8, q8xc4, d8):
    for G in (q8, q8xc4, d8):
        assert check_oracle(G)
        assert check_containments(G)
        assert check_symbolic_agreement(G)


def test_corollaries(q8, q8xc4, d8):
    assert check_cor22(q8)
    assert check_cor23(q8)
    assert check_cor25(d8).consistent
    with pytest.raises(NotApplicable):
        check_cor22(direct_product(d8, d8))
    with pytest.raises(NotApplicable):
        check_cor23(q8xc4)
    with pytest.raises(NotApplicable):
        check_cor25(cyclic(6))


def test_schur_report_of_quaternion(q8):
    report = schur_report(q8)
    assert report.center_index == 4
    assert report.derived_order == 2
    assert report.d == 2
    assert report.commutator_count == 2
    assert report.derived_equality
    assert len(report.products) == 6
    assert set(report.products) == {4}
    assert report.derived_is_commutators
    assert report.inner_aut_c_ia_star_equal
    assert report.ia_star_order == 4
    assert report.violations == []


def test_schur_report_of_class3_group(example32):
    report = schur_report(example32)
    assert report.derived_equality
    assert report.derived_is_commutators
    assert report.chain_holds
    assert report.violations == []


def test_schur_report_of_abelian_group(c12):
    report = schur_report(c12)
    assert report.d == 0
    assert (report.center_index, report.derived_order, report.commutator_count) == (1, 1, 1)
    assert report.products == [1]
    assert report.violations == []


def test_central_quotient_power(q8, q8xc4):
    assert check_thm35(q8)
    assert check_thm35(q8xc4)


def test_coclass_two(example32, q8):
    assert check_thm36(example32)
    assert check_thm36(example32, strict=True)
    assert check_thm36(q8)
    with pytest.raises(NotApplicable):
        check_thm36(q8, strict=True)


def test_maximal_class(q8, q8xc4):
    assert check_maximal_class(q8)
    assert check_maximal_class(dihedral(16))
    with pytest.raises(NotApplicable):
        check_maximal_class(q8xc4)
    with pytest.raises(NotApplicable):
        check_maximal_class(cyclic(4))


def test_verify_example32(example32):
    report = verify_example32(example32)
    assert report.ok
    assert report.failed == []
    report.raise_for_failures()
    assert report.as_dict()["center_index"] == {"expected": 16, "actual": 16}


def test_resolve_selectors():
    assert resolve_selectors("all")[0] == "exponents"
    assert resolve_selectors("schur, exponents, schur") == ["schur", "exponents"]
    with pytest.raises(PreconditionError):
        resolve_selectors("nope")


def test_evaluate_maps_preconditions(example32, q8):
    record = evaluate("exponents", example32)
    assert record["status"] == "not-applicable"
    assert "class" in record["details"]["reason"]
    assert record["reproduction"] is None
    record = evaluate("example32", example32)
    assert record["status"] == "pass"
    assert evaluate("example32", q8)["status"] == "not-applicable"


def test_run_suite_on_empty_corpus():
    report = run_suite([])
    assert report["ok"]
    assert report["groups"] == 0
    assert report["records"] == []
    assert set(report["counts"].values()) == {0}


def test_run_suite_on_quaternion(q8):
    report = run_suite([q8])
    statuses = {r["check"]: r["status"] for r in report["records"]}
    assert report["ok"]
    assert "fail" not in statuses.values()
    assert statuses["coclass-two"] == "not-applicable"
    assert statuses["example32"] == "not-applicable"
    assert statuses["ia-inner"] == "pass"
    assert "Q8" in render_table(report)


def test_run_suite_on_class3_group(example32):
    report = run_suite([example32], "coclass-two")
    (record,) = report["records"]
    assert record["status"] == "pass"
    assert record["details"]["order"] == 32


def test_run_suite_is_deterministic(q8, d8):
    first = run_suite([q8, d8], "exponents,counting,ia-inner")
    second = run_suite([d8, q8], "exponents,counting,ia-inner")
    assert json.dumps(first) == json.dumps(second)
    keys = [(r["group"], r["check"]) for r in first["records"]]
    assert keys == sorted(keys)


def test_failures_carry_a_reproduction(q8, monkeypatch):
    monkeypatch.setattr(theorems, "run_exponents", lambda G: CheckOutcome(False, {}, "forced"))
    report = run_suite([q8], "exponents")
    (record,) = report["records"]
    assert record["status"] == "fail"
    assert record["witness"] == "forced"
    assert record["reproduction"]["format"] == "ia-nilpotent-group"
    assert not report["ok"]
    assert report["counts"]["fail"] == 1


def test_timings(q8):
    report = run_suite([q8], "exponents", with_timings=True)
    assert report["records"][0]["seconds"] >= 0


@pytest.mark.slow
def test_worker_count_does_not_change_the_report(q8, d8, heis3):
    corpus = [q8, d8, heis3]
    assert json.dumps(run_suite(corpus, jobs=2)) == json.dumps(run_suite(corpus, jobs=1))
