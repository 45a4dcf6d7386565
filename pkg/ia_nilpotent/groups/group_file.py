# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Group files and presentation files
==================================

Presentation files (".pc") describe a power-commutator presentation in
four sections:

    # quaternion group of order 8
    generators: x, y
    orders: 2, 4
    powers:
      x^2 = y^2
    conjugates:
      y^x = y^3

`g^e = w` gives the power relation of g (e must be g's relative order);
`h^g = w` gives g^-1 h g = w for g declared before h. Right-hand sides are
normal-form words such as `y^4*u`; `1` is the identity.

Group files (".json") hold one materialized group: header fields plus the
row-major Cayley table, written with sorted keys so equal groups give
byte-identical files.

Usage:
    from ia_nilpotent.groups.group_file import load_presentation, dump_group, load_group

    G = build_group(load_presentation("q8.pc"), name="Q8")
    dump_group(G, "Q8.json")
    H = load_group("Q8.json")
"""

import json
import re
from dataclasses import replace
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ia_nilpotent.config.settings import get_settings
from ia_nilpotent.exceptions import ConsistencyError, ParseError
from ia_nilpotent.groups.pcgroup import FiniteGroup, PcPresentation, check_consistency, normal_form_word

FORMAT = "ia-nilpotent-group"
VERSION = 1

SECTIONS = ("generators", "orders", "powers", "conjugates")

_HEADER = re.compile(r"(generators|orders|powers|conjugates)\s*:\s*(.*)$")
_POWER = re.compile(r"([A-Za-z][A-Za-z0-9_]*)\s*\^\s*(\d+)\s*=\s*(.+)$")
_CONJUGATE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)\s*\^\s*([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.+)$")


# ============================================================
# PRESENTATION FILES
# ============================================================

def parse_presentation(text: str) -> PcPresentation:
    """
    Parse presentation-file text

    Raises:
        ParseError: with the line and column of the offending text
    """
    collected: Dict[str, List[Tuple[int, int, str]]] = {name: [] for name in SECTIONS}
    section: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        header = _HEADER.match(line.strip())
        if header:
            section = header.group(1)
            rest = header.group(2).strip()
            if rest:
                collected[section].append((number, indent + line.strip().index(rest) + 1, rest))
            continue
        if section is None:
            raise ParseError("expected a section header (generators:, orders:, powers:, conjugates:)", number, indent + 1)
        collected[section].append((number, indent + 1, line.strip()))

    generators = _comma_items(collected["generators"])
    if not generators:
        raise ParseError("no generators declared", 1, 1)
    orders = []
    for number, column, item in _comma_items(collected["orders"], keep_position=True):
        if not item.isdigit():
            raise ParseError(f"relative order {item!r} is not a positive integer", number, column)
        orders.append(int(item))
    names = list(generators)
    if len(orders) != len(names):
        raise ParseError(f"{len(names)} generators but {len(orders)} relative orders", 1, 1)
    try:
        skeleton = PcPresentation(tuple(names), tuple(orders))
    except ValueError as e:
        raise ParseError(str(e), 1, 1) from None

    powers: Dict[str, str] = {}
    for number, column, line in collected["powers"]:
        match = _POWER.fullmatch(line)
        if not match:
            raise ParseError(f"expected 'g^e = word', got {line!r}", number, column)
        name, exponent, word = match.groups()
        if name not in names:
            raise ParseError(f"unknown generator {name!r}", number, column)
        if int(exponent) != skeleton.relative_orders[names.index(name)]:
            raise ParseError(f"power relation of {name} must use its relative order", number, column + line.index("^") + 1)
        _check_word(skeleton, word, number, column + line.rindex(word))
        powers[name] = word
    conjugates: Dict[Tuple[str, str], str] = {}
    for number, column, line in collected["conjugates"]:
        match = _CONJUGATE.fullmatch(line)
        if not match:
            raise ParseError(f"expected 'h^g = word', got {line!r}", number, column)
        target, by, word = match.groups()
        for name in (target, by):
            if name not in names:
                raise ParseError(f"unknown generator {name!r}", number, column + line.index(name))
        if names.index(by) >= names.index(target):
            raise ParseError(f"{target}^{by}: {by} must come before {target}", number, column)
        _check_word(skeleton, word, number, column + line.rindex(word))
        conjugates[(target, by)] = word

    try:
        return PcPresentation.from_relations(names, orders, powers, conjugates)
    except ValueError as e:
        raise ParseError(str(e), 1, 1) from None


def _check_word(skeleton: PcPresentation, word: str, number: int, column: int) -> None:
    """Re-raise word errors at their position in the file"""
    try:
        normal_form_word(skeleton, word)
    except ParseError as e:
        raise ParseError(e.reason, number, column + (e.column or 1) - 1) from None


def _comma_items(entries, keep_position: bool = False):
    items = []
    for number, column, text in entries:
        offset = 0
        for piece in text.split(","):
            stripped = piece.strip()
            if stripped:
                position = column + offset + piece.index(stripped)
                items.append((number, position, stripped) if keep_position else stripped)
            offset += len(piece) + 1
    return items


def load_presentation(path: Union[str, Path]) -> PcPresentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def _word_text(pres: PcPresentation, nf) -> str:
    parts = [name if a == 1 else f"{name}^{a}" for name, a in zip(pres.generators, nf) if a]
    return "*".join(parts) or "1"


def format_presentation(pres: PcPresentation) -> str:
    """Presentation-file text for a presentation (parse_presentation reads it back)"""
    names = pres.generators
    lines = [
        f"generators: {', '.join(names)}",
        f"orders: {', '.join(str(e) for e in pres.relative_orders)}",
        "powers:",
    ]
    lines += [f"  {names[i]}^{pres.relative_orders[i]} = {_word_text(pres, rhs)}" for i, rhs in pres.powers]
    lines.append("conjugates:")
    lines += [f"  {names[j]}^{names[i]} = {_word_text(pres, rhs)}" for (i, j), rhs in pres.conjugates]
    return "\n".join(lines) + "\n"


# ============================================================
# GROUP FILES
# ============================================================

def group_to_dict(G: FiniteGroup) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "name": G.name,
        "family": G.family,
        "order": G.order,
        "identity": G.identity,
        "generators": list(G.generators),
        "presentation": format_presentation(G.presentation) if G.presentation and G.presentation.k else None,
        "elements": [list(nf) for nf in G.elements],
        "table": G.table.tolist(),
    }


def dumps_group(G: FiniteGroup) -> str:
    return json.dumps(group_to_dict(G), sort_keys=True, separators=(",", ":")) + "\n"


def dump_group(G: FiniteGroup, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps_group(G), encoding="utf-8")
    return path


def group_from_dict(data: dict) -> FiniteGroup:
    """
    Rebuild a group from its file contents

    Raises:
        ParseError: wrong format tag, version or missing fields
        ConsistencyError: the table is not a group
    """
    if data.get("format") != FORMAT:
        raise ParseError(f"not an {FORMAT} file (format={data.get('format')!r})")
    if data.get("version") != VERSION:
        raise ParseError(f"unsupported group file version {data.get('version')!r}")
    for key in ("name", "order", "generators", "table"):
        if key not in data:
            raise ParseError(f"group file has no {key!r} field")
    table = np.asarray(data["table"])
    if table.shape != (data["order"], data["order"]):
        raise ParseError(f"table shape {table.shape} does not match order {data['order']}")
    G = FiniteGroup.from_table(table, name=data["name"], generators=data["generators"], family=data.get("family", "table"))
    extra = {}
    if data.get("presentation"):
        extra["presentation"] = parse_presentation(data["presentation"])
        extra["elements"] = tuple(tuple(nf) for nf in data.get("elements", ()))
    full = G.order <= get_settings().full_scan_cap
    if not check_consistency(G, full=full):
        raise ConsistencyError(f"{G.name}: stored table is not associative")
    return replace(G, verification="full" if full else "partial", **extra)


def loads_group(text: str) -> FiniteGroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return group_from_dict(data)


def load_group(path: Union[str, Path]) -> FiniteGroup:
    return loads_group(Path(path).read_text(encoding="utf-8"))
