# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

from ia_nilpotent.exceptions import RecordError
from ia_nilpotent.groups.doctype import Record


class GroupAnalysis(Record):
    doctype = "group_analysis"

    def validate(self):
        """Class and co-class only exist for nilpotent groups"""
        if not self["nilpotent"] and (self["nilpotency_class"] is not None or self["coclass"] is not None):
            raise RecordError(f"{self['name']}: nilpotency class reported for a non-nilpotent group")
        if self["commutators_fill_derived"] is not None:
            if self["commutators_fill_derived"] != (self["commutator_set_size"] == self["derived_order"]):
                raise RecordError(f"{self['name']}: commutators_fill_derived disagrees with the orders")
