"""
IA Nilpotent - IA-automorphisms of finite nilpotent groups
==========================================================

Builds finite groups from power-commutator presentations, computes
Inn(G), IA(G), IA(G)* and Aut_c(G) along two independent paths, and
checks the classification of IA(G) = Inn(G) for groups of class 2 and
the Schur-type bounds |G/Z(G)| <= |K(G)|^d <= |G'|^d on a corpus.

Features:
- Power-commutator presentations with collection to normal form
- Cayley-table groups with center, derived, Frattini and central series
- Exact Hom(U, V) structure for finitely generated abelian groups
- IA(G) from Hom(G/G', G'), with a brute-force oracle
- Theorem checks with structured records and a corpus suite

Usage:
    from ia_nilpotent import quaternion, ia_class2, inner, set_equal

    Q8 = quaternion(8)
    set_equal(ia_class2(Q8), inner(Q8))     # True

    from ia_nilpotent import default_corpus, run_suite
    report = run_suite(default_corpus())
    report["ok"]
"""

__version__ = "0.1.0"

# Convenience imports
from ia_nilpotent.groups.abelian import FgAbelian, hom_structure, parse_descriptor
from ia_nilpotent.groups.autos import aut_c, ia, ia_bruteforce, ia_class2, ia_star, inner, set_equal
from ia_nilpotent.groups.corpus import default_corpus
from ia_nilpotent.groups.pcgroup import (
    PcPresentation,
    build_group,
    paper_example_32,
    quaternion_generalized as quaternion,
)
from ia_nilpotent.groups.theorems import run_suite
