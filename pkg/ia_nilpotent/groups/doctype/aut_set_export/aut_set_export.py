# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

from ia_nilpotent.exceptions import RecordError
from ia_nilpotent.groups.doctype import Record


class AutSetExport(Record):
    doctype = "aut_set_export"

    def validate(self):
        if self["permutations"] is not None and len(self["permutations"]) != self["order"]:
            raise RecordError(f"{self['kind']}({self['group']}): {len(self['permutations'])} permutations for order {self['order']}")
