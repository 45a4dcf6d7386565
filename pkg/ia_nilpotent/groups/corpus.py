# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Group corpora
=============

The built-in corpus covers every branch of the IA(G) = Inn(G)
classification (homocyclic, threshold-index, unequal factor counts,
non-cyclic G') and both equality and strict cases of |G/Z| <= |G'|^d.
User corpora are directories of group files and presentation files.

Usage:
    from ia_nilpotent.groups.corpus import default_corpus, load_corpus

    groups = default_corpus()
    groups = load_corpus("my_groups/")
"""

from pathlib import Path
from typing import List, Union

from ia_nilpotent.exceptions import ParseError
from ia_nilpotent.groups.abelian import parse_descriptor
from ia_nilpotent.groups.group_file import load_group, load_presentation
from ia_nilpotent.groups.pcgroup import (
    FiniteGroup,
    PcPresentation,
    abelian_from,
    build_group,
    dihedral,
    direct_product,
    cyclic,
    extraspecial,
    heisenberg,
    paper_example_32,
    quaternion_generalized,
)
from ia_nilpotent.utils import logger

ABELIAN_TYPES = (
    "C_2",
    "C_4",
    "C_6",
    "C_8",
    "C_2 x C_2",
    "C_4 x C_2",
    "C_2^3",
    "C_3 x C_3",
    "C_4 x C_4",
    "C_8 x C_2",
    "C_4 x C_2 x C_2",
    "C_2^4",
    "C_9 x C_3",
    "C_5 x C_5",
    "C_8 x C_8",
)


def heisenberg_quaternion_central_product() -> FiniteGroup:
    """
    Heis(Z/4) and Q_8 glued along z^2 = -1, order 256

    G/Z ~ G/G' ~ C_4^2 x C_2^2 with G' = Z ~ C_4: G/Z is not homocyclic
    but IA(G) = Inn(G) through the threshold-index clause.
    """
    pres = PcPresentation.from_relations(
        ("x", "y", "a", "b", "z"),
        (4, 4, 2, 2, 4),
        powers={"a": "z^2", "b": "z^2"},
        conjugates={("y", "x"): "y*z", ("b", "a"): "b*z^2"},
    )
    return build_group(pres, name="Heis(2,2)oQ8", family="central-product")


def default_corpus() -> List[FiniteGroup]:
    """The built-in verification corpus, sorted by name"""
    groups = [abelian_from(parse_descriptor(text)) for text in ABELIAN_TYPES]
    groups += [dihedral(8), dihedral(16), quaternion_generalized(8), quaternion_generalized(16)]
    groups += [extraspecial(p, p**3, kind) for p in (2, 3, 5) for kind in ("+", "-")]
    groups += [extraspecial(p, p**5, kind) for p in (2, 3) for kind in ("+", "-")]
    groups += [heisenberg(2), heisenberg(3), heisenberg(5), heisenberg(2, 2), heisenberg(3, 2)]

    q8, d8, heis3 = quaternion_generalized(8), dihedral(8), heisenberg(3)
    groups += [
        direct_product(q8, cyclic(2)),
        direct_product(q8, cyclic(4)),
        direct_product(d8, cyclic(2)),
        direct_product(heis3, cyclic(3)),
        direct_product(heisenberg(2), heisenberg(2)),
        heisenberg_quaternion_central_product(),
        paper_example_32(),
    ]
    logger("corpus").debug(f"built default corpus of {len(groups)} groups")
    return sorted(groups, key=lambda G: G.name)


def load_corpus(directory: Union[str, Path]) -> List[FiniteGroup]:
    """
    Load every *.json group file and *.pc presentation file in a directory

    Presentation groups are named after their file stem.

    Raises:
        ParseError: a file is malformed (the message names the file)
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise ParseError(f"corpus directory {directory} does not exist")
    groups = []
    for path in sorted(directory.iterdir()):
        try:
            if path.suffix == ".json":
                groups.append(load_group(path))
            elif path.suffix == ".pc":
                groups.append(build_group(load_presentation(path), name=path.stem))
        except ParseError as e:
            raise ParseError(f"{path.name}: {e}") from None
    return sorted(groups, key=lambda G: G.name)
