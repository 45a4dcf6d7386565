# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

from ia_nilpotent.exceptions import RecordError
from ia_nilpotent.groups.doctype import Record

FAILING = ("fail", "violation")


class TheoremRecord(Record):
    doctype = "theorem_record"

    def validate(self):
        """Only failing records carry a reproduction"""
        if self["reproduction"] is not None and self["status"] not in FAILING:
            raise RecordError(f"{self['group']}/{self['check']}: reproduction attached to a {self['status']} record")

    @property
    def failed(self) -> bool:
        return self["status"] in FAILING
