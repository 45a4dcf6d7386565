import itertools

import pytest

from ia_nilpotent.exceptions import ParseError
from ia_nilpotent.groups import abelian
from ia_nilpotent.groups.abelian import FgAbelian, from_invariant_factors, hom_structure, parse_descriptor

from .helpers import abelian_types


def test_from_invariant_factors():
    assert from_invariant_factors([2, 4]) == FgAbelian.make({2: [2, 1]})
    assert from_invariant_factors([], 1) == FgAbelian(free_rank=1)
    assert from_invariant_factors([6]) == FgAbelian.make({2: [1], 3: [1]})


def test_from_invariant_factors_rejects_bad_input():
    with pytest.raises(ValueError):
        from_invariant_factors([1, 2])
    with pytest.raises(ValueError):
        from_invariant_factors([2.0])
    with pytest.raises(ValueError):
        from_invariant_factors([4, 6])
    assert from_invariant_factors([4, 6], refactor=True) == FgAbelian.make({2: [2, 1], 3: [1]})


def test_invariant_factors():
    assert abelian.invariant_factors(FgAbelian.make({2: [2, 1], 3: [1]})) == ([2, 12], 0)
    assert abelian.invariant_factors(abelian.trivial()) == ([], 0)
    assert abelian.invariant_factors(FgAbelian.make({2: [1, 1]})) == ([2, 2], 0)


def test_invariant_factor_round_trip():
    for U in abelian_types(48):
        factors, rho = abelian.invariant_factors(U)
        assert abelian.is_isomorphic(from_invariant_factors(factors, rho), U)


def test_primary_form_is_validated():
    with pytest.raises(ValueError):
        FgAbelian(primary=((4, (1,)),))
    with pytest.raises(ValueError):
        FgAbelian(primary=((2, (1, 2)),))
    with pytest.raises(ValueError):
        FgAbelian(free_rank=-1)


@pytest.mark.parametrize("U, V, expected", [
    ("Z^2", "C_2", "C_2 x C_2"),
    ("C_4", "Z", "1"),
    ("C_4 x C_2", "C_4", "C_4 x C_2"),
    ("C_4 x C_2", "C_2 x C_2", "C_2^4"),
    ("Z^2", "Z", "Z^2"),
    ("Z x C_3", "Z x C_9", "Z x C_9 x C_3"),
])
def test_hom_structure(U, V, expected):
    H = hom_structure(parse_descriptor(U), parse_descriptor(V))
    assert abelian.is_isomorphic(H, parse_descriptor(expected))


def test_is_isomorphic():
    assert abelian.is_isomorphic(FgAbelian.make({2: [1], 3: [1]}), from_invariant_factors([6]))
    assert not abelian.is_isomorphic(FgAbelian(free_rank=1), FgAbelian.make({2: [1]}))
    assert abelian.is_isomorphic(FgAbelian.make({2: [2, 1]}), FgAbelian.make({2: [1, 2]}))


def test_ranks_and_exponents():
    U = parse_descriptor("Z x C_4 x C_2")
    assert abelian.rank(parse_descriptor("C_2 x Z")) == 2
    assert abelian.rank(U) == 3
    assert abelian.torsion_rank(U) == 2
    assert abelian.free_rank(U) == 1
    assert abelian.exponent_of_torsion(parse_descriptor("C_4 x C_3")) == 12
    assert abelian.exponent_of_torsion(parse_descriptor("Z^3")) == 1
    assert abelian.order(U) is None
    assert abelian.order(parse_descriptor("C_4 x C_2")) == 8


def test_homocyclic_and_cyclic():
    assert abelian.is_homocyclic_at(FgAbelian.make({2: [2, 2]}), 2)
    assert not abelian.is_homocyclic_at(FgAbelian.make({2: [2, 1]}), 2)
    assert abelian.is_homocyclic(parse_descriptor("C_4 x C_4"))
    assert abelian.is_homocyclic(parse_descriptor("Z^3"))
    assert not abelian.is_homocyclic(parse_descriptor("Z x C_2"))
    assert abelian.is_cyclic(parse_descriptor("C_6"))
    assert abelian.is_cyclic(parse_descriptor("Z"))
    assert not abelian.is_cyclic(parse_descriptor("C_2 x C_2"))


def test_power():
    assert abelian.power(FgAbelian.make({2: [1]}), 3) == FgAbelian.make({2: [1, 1, 1]})
    assert abelian.power(parse_descriptor("Z x C_3"), 0) == abelian.trivial()
    with pytest.raises(ValueError):
        abelian.power(abelian.trivial(), -1)


def test_torsion_rank_of_products():
    types = abelian_types(24)
    for U, V in itertools.product(types[::3], repeat=2):
        lengths = [len(U.exponents(p)) + len(V.exponents(p)) for p in set(abelian.primes(U)) | set(abelian.primes(V))]
        assert abelian.torsion_rank(abelian.direct_product(U, V)) == max(lengths, default=0)


def test_hom_into_cyclic_recovers_source():
    """With equal exponents, Hom(U, V) ~ U exactly when V is cyclic"""
    types = abelian_types(64)
    for U, V in itertools.product(types, repeat=2):
        if abelian.exponent_of_torsion(U) != abelian.exponent_of_torsion(V):
            continue
        assert abelian.is_isomorphic(hom_structure(U, V), U) == abelian.is_cyclic(V)


def test_hom_is_additive_in_the_target():
    types = abelian_types(12)
    for U, V, W in itertools.product(types[::2], repeat=3):
        left = hom_structure(U, abelian.direct_product(V, W))
        right = abelian.direct_product(hom_structure(U, V), hom_structure(U, W))
        assert abelian.is_isomorphic(left, right)


def test_hom_order_is_symmetric_for_finite_groups():
    types = abelian_types(16)
    for U, V in itertools.product(types, repeat=2):
        assert abelian.hom_order(U, V) == abelian.hom_order(V, U)


def test_parse_and_format():
    assert str(parse_descriptor("Z^2 x C_{12}")) == "Z^2 x C_12"
    assert str(parse_descriptor("C_2xC_2xC_4")) == "C_4 x C_2 x C_2"
    assert str(parse_descriptor("C_2^3")) == "C_2 x C_2 x C_2"
    assert parse_descriptor("1") == abelian.trivial()
    assert parse_descriptor("trivial") == abelian.trivial()
    assert str(abelian.trivial()) == "1"


def test_parse_reports_column():
    with pytest.raises(ParseError) as e:
        parse_descriptor("C_4 y C_2")
    assert e.value.column == 5
    with pytest.raises(ParseError) as e:
        parse_descriptor("C_4  y C_2")
    assert e.value.column == 6
    with pytest.raises(ParseError) as e:
        parse_descriptor(" C_4 x")
    assert e.value.column == 7
    with pytest.raises(ParseError):
        parse_descriptor("")
    with pytest.raises(ParseError):
        parse_descriptor("C_4 x")
