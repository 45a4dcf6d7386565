import pytest

from ia_nilpotent.config.settings import get_settings, use_settings
from ia_nilpotent.exceptions import (
    CapExceeded,
    NotClass2,
    NotNilpotent,
    PreconditionError,
    ThetaNotHomomorphism,
    YNotCentral,
)
from ia_nilpotent.groups.abelian import parse_descriptor
from ia_nilpotent.groups.autos import (
    OrderOnly,
    all_automorphisms,
    aut_c,
    ia,
    ia_bruteforce,
    ia_class2,
    ia_star,
    inner,
    is_automorphism,
    set_equal,
    structure_of,
    t_theta,
)
from ia_nilpotent.groups.invariants import (
    basis_coordinates,
    cyclic_decomposition,
    cyclic_powers,
    derived_subgroup,
    generated,
    quotient,
    whole,
)
from ia_nilpotent.groups.pcgroup import dihedral


def projection_theta(G):
    """theta: G/G' -> G' sending the first basis vector to the generator z of G'"""
    D = derived_subgroup(G)
    qmap = quotient(G, D)
    basis = cyclic_decomposition(qmap.group)
    coords = basis_coordinates(qmap.group, basis)
    powers = cyclic_powers(G, G.element("z"))
    return D, qmap, [powers[c % len(powers)] for c in coords[:, 0]]


def test_inner(q8, c12):
    assert inner(q8).order == 4
    assert inner(c12).order == 1
    assert all(is_automorphism(q8, phi) for phi in inner(q8))


def test_ia_of_quaternion(q8):
    assert ia_class2(q8).order == 4
    assert set_equal(ia_class2(q8), ia_bruteforce(q8))
    assert set_equal(ia_class2(q8), inner(q8))


def test_ia_of_cyclic(c12):
    assert ia_bruteforce(c12).order == 1
    assert ia(c12).order == 1


def test_ia_of_class3_group(example32):
    A = ia(example32)
    assert inner(example32).order == 16
    assert inner(example32).issubset(A)
    assert A.is_closed()


def test_ia_class2_matches_bruteforce(q8xc4, d8, heis3):
    for G in (q8xc4, d8, heis3):
        assert set_equal(ia_class2(G), ia_bruteforce(G))
    assert ia(q8xc4).order == 8


def test_ia_class2_preconditions(example32):
    with pytest.raises(NotClass2):
        ia_class2(example32)
    with pytest.raises(NotNilpotent):
        ia_class2(dihedral(6))


def test_ia_star(d8, q8):
    assert ia_star(d8).order == 4
    assert set_equal(ia_star(q8), inner(q8))
    assert set_equal(aut_c(q8), inner(q8))
    assert ia_star(q8).issubset(ia(q8))


def test_t_theta_of_heisenberg(heis3):
    D, qmap, theta = projection_theta(heis3)
    phi = t_theta(heis3, theta, D, D, quotient_map=qmap)
    assert not phi.is_identity()
    assert phi.compose(phi).compose(phi).is_identity()
    assert phi in ia_class2(heis3)


def test_trivial_theta_gives_identity(heis3):
    D = derived_subgroup(heis3)
    assert t_theta(heis3, {}, D, D).is_identity()


def test_t_theta_preconditions(heis3):
    D, qmap, theta = projection_theta(heis3)
    x = heis3.element("x")
    with pytest.raises(YNotCentral):
        t_theta(heis3, {}, whole(heis3), generated(heis3, [x]))
    with pytest.raises(ThetaNotHomomorphism):
        t_theta(heis3, {1: heis3.element("z")}, D, D, quotient_map=qmap)
    with pytest.raises(ThetaNotHomomorphism):
        t_theta(heis3, theta[:-1], D, D, quotient_map=qmap)


def test_closure(q8, heis3):
    for S in (inner(q8), ia(heis3), ia_star(q8)):
        assert S.is_closed()
    partial = inner(q8).filter(lambda phi: not phi.is_identity(), "custom")
    assert not partial.is_closed()
    with pytest.raises(PreconditionError):
        partial.as_group()


def test_structure(q8):
    assert structure_of(inner(q8)) == parse_descriptor("C_2 x C_2")
    full = all_automorphisms(q8)
    assert full.order == 24
    assert structure_of(full) == OrderOnly(24)
    assert str(structure_of(full)) == "non-abelian of order 24"


def test_export(q8):
    record = inner(q8).export()
    assert record["kind"] == "inner"
    assert record["order"] == len(record["permutations"]) == 4
    assert record["closed"] is True
    assert record["abelian"] is True
    assert record["structure"] == "C_2 x C_2"


def test_set_equal_needs_one_group(q8, d8):
    with pytest.raises(PreconditionError):
        set_equal(inner(q8), inner(d8))


def test_oracle_cap(example32):
    with use_settings(get_settings().replace(oracle_cap=16)):
        with pytest.raises(CapExceeded):
            ia_bruteforce(example32)
