import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ia_nilpotent.exceptions import NotAbelian, NotClass2, NotNilpotent, NotNormal, ParseError
from ia_nilpotent.groups import abelian, invariants
from ia_nilpotent.groups.abelian import FgAbelian, hom_structure, is_isomorphic, parse_descriptor
from ia_nilpotent.groups.invariants import (
    HOM_TABLE_LIMIT,
    abelian_structure,
    abelianization,
    analysis_report,
    center,
    central_quotient,
    commutator_set,
    commutator_with,
    conjugacy_classes,
    cyclic_decomposition,
    derived_subgroup,
    frattini_by_powers,
    frattini_subgroup,
    generated,
    hom_bruteforce,
    is_generating,
    lower_central_series,
    maximal_subgroups,
    minimal_generating_tuple,
    minimal_generating_tuples,
    minimal_generator_count,
    nilpotency_class,
    parse_triple,
    quotient,
    structure_triple,
    torsion_rank_of_group,
    trivial_subgroup,
    upper_central_series,
    whole,
)
from ia_nilpotent.groups.pcgroup import FiniteGroup, abelian_from, dihedral, heisenberg

from .helpers import abelian_types


def test_center(example32, q8, c12):
    Z = center(example32)
    assert Z.order == 2
    assert Z == generated(example32, [example32.element("y^4")])
    assert center(q8).order == 2
    assert center(c12).is_whole()


def test_derived_subgroup(example32, c12):
    D = derived_subgroup(example32)
    assert D.order == 4
    assert D.is_elementary_abelian
    assert not D.is_cyclic
    assert abelian_structure(D) == FgAbelian.make({2: [1, 1]})
    assert derived_subgroup(c12).is_trivial()
    assert commutator_set(c12) == {c12.identity}


def test_commutators_of_quaternion(q8):
    """[x, G] = G' = K(G) for every x outside the Frattini subgroup"""
    D = set(derived_subgroup(q8))
    Phi = frattini_subgroup(q8)
    assert commutator_set(q8) == D
    for x in range(q8.order):
        if x not in Phi:
            assert commutator_with(q8, x) == D


def test_distinguished_subgroups_are_normal(example32, q8xc4, heis3):
    for G in (example32, q8xc4, heis3):
        for H in (center(G), derived_subgroup(G), frattini_subgroup(G)):
            assert H.is_normal


def test_frattini(example32, q8, d8, heis3, q8xc4):
    Phi = frattini_subgroup(example32)
    assert Phi.order == 8
    assert Phi == generated(example32, [example32.element("y^2"), example32.element("u")])
    for G in (example32, q8, d8, heis3, q8xc4):
        assert frattini_subgroup(G) == frattini_by_powers(G)


def test_maximal_subgroups(q8):
    assert len(maximal_subgroups(q8)) == 3
    assert all(M.order == 4 for M in maximal_subgroups(q8))


def test_non_nilpotent_group():
    S3 = dihedral(6)
    with pytest.raises(NotNilpotent):
        nilpotency_class(S3)
    assert len(maximal_subgroups(S3)) == 4
    assert frattini_subgroup(S3).is_trivial()
    assert minimal_generator_count(S3) == 2
    report = analysis_report(S3)
    assert report["nilpotent"] is False
    assert report["nilpotency_class"] is None
    assert report["derived_subgroup"] == "C_3"
    assert report["abelianization"] == "C_2"


def test_central_series(example32):
    assert [H.order for H in lower_central_series(example32)] == [32, 4, 2, 1]
    assert [H.order for H in upper_central_series(example32)] == [1, 2, 8, 32]
    assert nilpotency_class(example32) == 3


def test_quotients(example32, d8):
    trivial = quotient(example32, trivial_subgroup(example32))
    assert np.array_equal(trivial.group.table, example32.table)
    assert quotient(example32, whole(example32)).group.order == 1
    assert central_quotient(example32).group.order == 16
    assert abelian_structure(abelianization(example32).group) == parse_descriptor("C_4 x C_2")
    reflection = generated(d8, [d8.element("s")])
    with pytest.raises(NotNormal):
        quotient(d8, reflection)


def test_abelian_structure(q8):
    assert abelian_structure(central_quotient(q8).group) == parse_descriptor("C_2 x C_2")
    with pytest.raises(NotAbelian):
        abelian_structure(q8)


@settings(max_examples=25)
@given(st.permutations(range(24)))
def test_abelian_structure_ignores_labels(labels):
    G = abelian_from(parse_descriptor("C_4 x C_2 x C_3"))
    perm = np.array(labels)
    relabeled = np.empty_like(G.table)
    relabeled[np.ix_(perm, perm)] = perm[G.table]
    H = FiniteGroup.from_table(relabeled)
    assert is_isomorphic(abelian_structure(H), abelian_structure(G))


def test_cyclic_decomposition():
    G = abelian_from(parse_descriptor("C_8 x C_2 x C_3"))
    basis = cyclic_decomposition(G)
    assert [o for _, o in basis] == [8, 2, 3]
    assert generated(G, [b for b, _ in basis]).is_whole()


def test_structure_triples(q8, example32):
    C2, C2xC2 = parse_descriptor("C_2"), parse_descriptor("C_2 x C_2")
    triple = structure_triple(q8)
    assert (triple.center_quotient, triple.abelianization, triple.derived) == (C2xC2, C2xC2, C2)
    assert triple.source == "computed-from-group"
    for p in (3, 5):
        t = structure_triple(heisenberg(p))
        Cp = parse_descriptor(f"C_{p}")
        assert (t.center_quotient, t.abelianization, t.derived) == (parse_descriptor(f"C_{p} x C_{p}"),) * 2 + (Cp,)
    with pytest.raises(NotClass2):
        structure_triple(example32)


def test_parse_triple():
    triple = parse_triple("Z^2 | Z^2 | Z")
    assert triple.source == "user-supplied"
    assert str(triple) == "Z^2 | Z^2 | Z"
    with pytest.raises(ParseError):
        parse_triple("C_2 | C_2")
    with pytest.raises(ParseError) as e:
        parse_triple("C_2 | C_2 y C_2 | C_2")
    assert e.value.column == 11


def test_generating_tuples():
    V4 = abelian_from(parse_descriptor("C_2 x C_2"))
    tuples = minimal_generating_tuples(V4)
    assert len(tuples) == 6
    assert all(len(t) == 2 and is_generating(V4, t) for t in tuples)
    assert len(minimal_generating_tuples(V4, sample_limit=4)) == 4


def test_generating_tuples_are_seeded(example32):
    Q = central_quotient(example32).group
    assert minimal_generating_tuples(Q, sample_limit=5, seed=11) == minimal_generating_tuples(Q, sample_limit=5, seed=11)


def test_minimal_generators(example32, q8xc4, heis3):
    assert minimal_generator_count(example32) == 2
    assert minimal_generator_count(central_quotient(example32).group) == 2
    assert minimal_generator_count(q8xc4) == 3
    assert generated(heis3, minimal_generating_tuple(heis3)).is_whole()
    assert torsion_rank_of_group(derived_subgroup(example32)) == 2


def test_conjugacy_classes(q8, d8):
    assert len(conjugacy_classes(q8)) == 5
    assert sorted(len(c) for c in conjugacy_classes(d8)) == [1, 1, 2, 2, 2]


def test_exponents_of_central_quotient_and_derived_agree(q8, d8, q8xc4, heis3):
    for G in (q8, d8, q8xc4, heis3, heisenberg(2, 2)):
        t = structure_triple(G)
        assert max(p ** exps[0] for p, exps in t.center_quotient.primary) == max(p ** exps[0] for p, exps in t.derived.primary)


def test_hom_bruteforce_small():
    for U, V in [("C_4 x C_2", "C_4"), ("C_4 x C_2", "C_2 x C_2"), ("C_2", "C_3"), ("C_6", "C_3 x C_3")]:
        G, H = abelian_from(parse_descriptor(U)), abelian_from(parse_descriptor(V))
        assert str(hom_bruteforce(G, H)) == str(hom_structure(parse_descriptor(U), parse_descriptor(V)))


@pytest.mark.parametrize("U, V", [
    ("C_4 x C_4 x C_2 x C_3", "C_4 x C_4 x C_3"),
    ("C_2 x C_2 x C_2", "C_2 x C_2 x C_2"),
    ("C_9 x C_3", "C_27 x C_3 x C_3"),
])
def test_hom_bruteforce_counts_large_hom_sets(U, V):
    A, B = parse_descriptor(U), parse_descriptor(V)
    assert abelian.hom_order(A, B) > HOM_TABLE_LIMIT
    assert is_isomorphic(hom_bruteforce(abelian_from(A), abelian_from(B)), hom_structure(A, B))


def test_hom_counting_agrees_with_tabulation(monkeypatch):
    G, H = abelian_from(parse_descriptor("C_4 x C_2")), abelian_from(parse_descriptor("C_8 x C_2"))
    tabulated = hom_bruteforce(G, H)
    monkeypatch.setattr(invariants, "HOM_TABLE_LIMIT", 0)
    assert is_isomorphic(hom_bruteforce(G, H), tabulated)


@pytest.mark.slow
def test_hom_matches_bruteforce_up_to_order_64():
    types = abelian_types(64)
    groups = [abelian_from(U) for U in types]
    for (U, G), (V, H) in itertools.product(zip(types, groups), repeat=2):
        assert is_isomorphic(hom_bruteforce(G, H), hom_structure(U, V))


def test_analysis_report(example32):
    report = analysis_report(example32)
    assert report["order"] == 32
    assert report["nilpotency_class"] == 3
    assert report["coclass"] == 2
    assert report["center_order"] == 2
    assert report["derived_order"] == 4
    assert report["frattini_order"] == 8
    assert report["minimal_generators"] == 2
    assert report["commutators_fill_derived"] is True
    assert report["center_quotient"] is None
    assert report["derived_subgroup"] == "C_2 x C_2"
    assert report["abelianization"] == "C_4 x C_2"
    assert report["exponent"] == 8
