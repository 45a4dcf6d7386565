# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

from collections import Counter

from ia_nilpotent.exceptions import RecordError
from ia_nilpotent.groups.doctype import Record
from ia_nilpotent.groups.doctype.theorem_record.theorem_record import FAILING


class SuiteReport(Record):
    doctype = "suite_report"

    def validate(self):
        """Counts and the ok flag must agree with the records"""
        records = self["records"] or []
        counts = Counter(record["status"] for record in records)
        if self["counts"] is not None and {k: v for k, v in self["counts"].items() if v} != dict(counts):
            raise RecordError(f"status counts {self['counts']} do not match the records")
        if self["ok"] != (not any(counts[status] for status in FAILING)):
            raise RecordError("ok flag does not match the record statuses")
        keys = [(record["group"], record["check"]) for record in records]
        if keys != sorted(keys):
            raise RecordError("records are not sorted by (group, check)")
