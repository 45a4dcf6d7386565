import pytest

from ia_nilpotent.exceptions import RecordError
from ia_nilpotent.groups.doctype import get_schema, make_record, validate_record, value_fields
from ia_nilpotent.groups.invariants import analysis_report


def theorem_record(**values):
    return make_record("theorem_record", **{"group": "Q8", "check": "exponents", "status": "pass", **values})


def test_make_record():
    record = theorem_record()
    assert list(record) == list(value_fields("theorem_record"))
    assert record["details"] is None
    assert record["reproduction"] is None
    assert not record.failed
    assert theorem_record(status="fail", reproduction={"format": "x"}).failed


def test_layout_fields_carry_no_value():
    fields = value_fields("group_analysis")
    assert "subgroups_section" not in fields
    assert "center_quotient" in fields


@pytest.mark.parametrize("values", [
    {"status": "passed"},
    {"group": None},
    {"seconds": "fast"},
    {"reproduction": {"format": "x"}},
])
def test_invalid_theorem_records(values):
    with pytest.raises(RecordError):
        theorem_record(**values)


def test_unknown_fields_and_doctypes():
    with pytest.raises(RecordError):
        theorem_record(extra=1)
    with pytest.raises(RecordError):
        get_schema("no_such_record")
    with pytest.raises(RecordError):
        make_record("no_such_record")


def test_validate_record_reports_missing_fields():
    record = dict(theorem_record())
    del record["witness"]
    with pytest.raises(RecordError):
        validate_record("theorem_record", record)


def test_suite_report_consistency():
    passing = theorem_record()
    failing = theorem_record(check="schur", status="fail")
    report = make_record("suite_report", ok=False, groups=1, checks=["exponents", "schur"],
                         counts={"pass": 1, "fail": 1}, settings={}, records=[passing, failing])
    assert not report["ok"]
    with pytest.raises(RecordError):
        make_record("suite_report", ok=True, groups=1, records=[passing, failing])
    with pytest.raises(RecordError):
        make_record("suite_report", ok=False, groups=1, counts={"pass": 2}, records=[passing, failing])
    with pytest.raises(RecordError):
        make_record("suite_report", ok=False, groups=1, records=[failing, passing])


def test_aut_set_export_counts_permutations():
    with pytest.raises(RecordError):
        make_record("aut_set_export", group="Q8", kind="inner", order=4, permutations=[[0, 1]])


def test_group_analysis_record(q8):
    report = analysis_report(q8)
    validate_record("group_analysis", report)
    with pytest.raises(RecordError):
        make_record("group_analysis", **{**report, "nilpotent": False})
