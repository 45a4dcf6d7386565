import json

import numpy as np
import pytest

from ia_nilpotent.exceptions import ConsistencyError, ParseError
from ia_nilpotent.groups.group_file import (
    dump_group,
    dumps_group,
    format_presentation,
    group_to_dict,
    load_group,
    load_presentation,
    loads_group,
    parse_presentation,
)
from ia_nilpotent.groups.pcgroup import build_group, cyclic, paper_example_32_presentation

Q8_TEXT = """\
generators: x, y
orders: 2, 4
powers:
  x^2 = y^2
conjugates:
  y^x = y^3
"""


def test_load_fixture(fixture_dir):
    G = build_group(load_presentation(fixture_dir / "q8.pc"), name="Q8")
    assert G.order == 8
    assert int(np.count_nonzero(G.element_orders == 2)) == 1


def test_fixtures_build(fixture_dir):
    assert build_group(load_presentation(fixture_dir / "example32.pc")).order == 32
    assert build_group(load_presentation(fixture_dir / "heis_q8.pc")).order == 256


def test_unreduced_word_position():
    with pytest.raises(ParseError) as e:
        parse_presentation(Q8_TEXT.replace("y^3", "y^5"))
    assert (e.value.line, e.value.column) == (6, 9)
    assert "line 6" in str(e.value)


def test_missing_section_header():
    with pytest.raises(ParseError) as e:
        parse_presentation("  x^2 = y^2\n")
    assert e.value.line == 1


@pytest.mark.parametrize("text", [
    Q8_TEXT.replace("orders: 2, 4", "orders: 2"),
    Q8_TEXT.replace("orders: 2, 4", "orders: 2, four"),
    Q8_TEXT.replace("x^2 = y^2", "x^3 = y^2"),
    Q8_TEXT.replace("y^x = y^3", "x^y = x"),
    Q8_TEXT.replace("y^x = y^3", "y^w = y^3"),
    "",
])
def test_malformed_presentations(text):
    with pytest.raises(ParseError):
        parse_presentation(text)


def test_presentation_round_trip():
    pres = paper_example_32_presentation()
    assert parse_presentation(format_presentation(pres)) == pres
    assert parse_presentation(format_presentation(parse_presentation(Q8_TEXT))) == parse_presentation(Q8_TEXT)


def test_group_file_is_stable(q8, tmp_path):
    text = dumps_group(q8)
    assert dumps_group(loads_group(text)) == text
    path = dump_group(q8, tmp_path / "Q8.json")
    H = load_group(path)
    assert H.name == "Q8"
    assert np.array_equal(H.table, q8.table)
    assert H.verification == "full"


def test_trivial_group_file():
    data = group_to_dict(cyclic(1))
    assert data["presentation"] is None
    assert loads_group(json.dumps(data)).order == 1


def test_rejects_bad_files(q8):
    data = group_to_dict(q8)
    with pytest.raises(ParseError):
        loads_group(json.dumps({**data, "format": "something-else"}))
    with pytest.raises(ParseError):
        loads_group(json.dumps({**data, "version": 99}))
    with pytest.raises(ParseError):
        loads_group(json.dumps({**data, "order": 4}))
    with pytest.raises(ParseError):
        loads_group(json.dumps({k: v for k, v in data.items() if k != "table"}))
    with pytest.raises(ParseError):
        loads_group("{not json")


def test_rejects_corrupted_tables(q8):
    data = group_to_dict(q8)
    table = data["table"]
    table[1][2], table[1][3] = table[1][3], table[1][2]
    with pytest.raises(ConsistencyError):
        loads_group(json.dumps(data))
