# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Record schemas
==============

Every machine-readable record the library emits is declared by a doctype
folder: `<name>/<name>.json` lists the fields (field_order plus one entry
per field with fieldname, fieldtype and label) and `<name>/<name>.py`
holds the record controller. Controllers are registered in hooks.py.

Usage:
    from ia_nilpotent.groups.doctype import make_record, validate_record

    record = make_record("theorem_record", group="Q8", check="exponents", status="pass", details={})
    validate_record("theorem_record", record)
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

from ia_nilpotent.exceptions import RecordError

DOCTYPE_DIR = Path(__file__).parent

# Layout-only field types carry no value
LAYOUT_FIELDTYPES = {"Section Break", "Column Break"}


class Record(dict):
    """
    Base record controller

    A record is a plain dict holding exactly the declared fields in
    field_order. Subclasses override validate() for cross-field rules.
    """

    doctype: str = ""

    def validate(self) -> None:
        pass


@lru_cache(maxsize=None)
def get_schema(doctype: str) -> Dict[str, Any]:
    """
    Load a doctype declaration

    Args:
        doctype: Folder name, e.g. "theorem_record"

    Returns:
        dict with "name", "field_order" and "fields"

    Raises:
        RecordError: no such doctype
    """
    path = DOCTYPE_DIR / doctype / f"{doctype}.json"
    if not path.is_file():
        raise RecordError(f"unknown doctype {doctype!r}")
    return json.loads(path.read_text(encoding="utf-8"))


def value_fields(doctype: str) -> Dict[str, dict]:
    schema = get_schema(doctype)
    fields = {f["fieldname"]: f for f in schema["fields"]}
    return {name: fields[name] for name in schema["field_order"] if fields[name]["fieldtype"] not in LAYOUT_FIELDTYPES}


def _type_ok(field: dict, value: Any) -> bool:
    fieldtype = field["fieldtype"]
    if value is None:
        return not field.get("reqd")
    if fieldtype == "Int":
        return isinstance(value, int) and not isinstance(value, bool)
    if fieldtype == "Float":
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    if fieldtype == "Check":
        return isinstance(value, bool)
    if fieldtype in ("Data", "Small Text"):
        return isinstance(value, str)
    if fieldtype == "Select":
        return value in field["options"].split("\n")
    if fieldtype == "Table":
        return isinstance(value, list) and all(isinstance(row, dict) for row in value)
    if fieldtype == "Code":
        try:
            json.dumps(value)
        except (TypeError, ValueError):
            return False
        return True
    return False


def validate_record(doctype: str, record: Dict[str, Any]) -> None:
    """
    Check a record against its declaration

    Raises:
        RecordError: missing, extra or mistyped fields
    """
    fields = value_fields(doctype)
    missing = [name for name in fields if name not in record]
    extra = [name for name in record if name not in fields]
    if missing or extra:
        raise RecordError(f"{doctype}: missing fields {missing}, unexpected fields {extra}")
    for name, field in fields.items():
        if not _type_ok(field, record[name]):
            raise RecordError(f"{doctype}.{name}: {record[name]!r} is not a valid {field['fieldtype']} value")
    for name, field in fields.items():
        options = field.get("options")
        if field["fieldtype"] == "Table" and options:
            for row in record[name]:
                validate_record(options, row)


def make_record(doctype: str, **values) -> Record:
    """
    Build a record through its registered controller

    Args:
        doctype: Folder name
        **values: One value per declared field

    Returns:
        Record with keys in field_order

    Raises:
        RecordError: values do not match the declaration
    """
    from ia_nilpotent import hooks
    from ia_nilpotent.utils import get_attr

    path = hooks.doctype_controllers.get(doctype)
    if path is None:
        raise RecordError(f"no controller registered for {doctype!r}")
    controller = get_attr(path)
    fields = value_fields(doctype)
    extra = sorted(set(values) - set(fields))
    if extra:
        raise RecordError(f"{doctype}: unexpected fields {extra}")
    record = controller((name, values.get(name)) for name in fields)
    validate_record(doctype, record)
    record.validate()
    return record
