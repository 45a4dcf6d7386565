# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Automorphism sets
=================

Inn(G), IA(G), IA(G)* and Aut_c(G) as explicit sets of element
permutations. Class-2 groups get IA(G) and IA(G)* from the Hom
construction g -> g theta(gX); every group can also be searched by brute
force over generator images, which serves as an independent oracle.

Usage:
    from ia_nilpotent.groups.pcgroup import quaternion_generalized
    from ia_nilpotent.groups.autos import inner, ia_class2, ia_bruteforce, set_equal

    Q8 = quaternion_generalized(8)
    set_equal(inner(Q8), ia_class2(Q8))          # True
    set_equal(ia_class2(Q8), ia_bruteforce(Q8))  # True
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ia_nilpotent.config.settings import get_settings
from ia_nilpotent.exceptions import (
    CapExceeded,
    NotClass2,
    NotNilpotent,
    PreconditionError,
    ThetaNotHomomorphism,
    YNotCentral,
)
from ia_nilpotent.groups.abelian import FgAbelian, format_descriptor
from ia_nilpotent.groups.invariants import (
    QuotientMap,
    Subgroup,
    abelian_structure,
    abelianization,
    basis_coordinates,
    center,
    central_quotient,
    cyclic_decomposition,
    cyclic_powers,
    derived_subgroup,
    minimal_generating_tuple,
    nilpotency_class,
    quotient,
)
from ia_nilpotent.groups.pcgroup import FiniteGroup
from ia_nilpotent.utils import logger


# ============================================================
# AUTOMORPHISMS
# ============================================================

@dataclass(frozen=True)
class Automorphism:
    """Permutation of element indices; images[g] is the image of g"""

    images: Tuple[int, ...]

    @classmethod
    def from_array(cls, array: Iterable[int]) -> "Automorphism":
        return cls(tuple(int(v) for v in array))

    @classmethod
    def identity(cls, n: int) -> "Automorphism":
        return cls(tuple(range(n)))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64)

    def __call__(self, g: int) -> int:
        return self.images[g]

    def __len__(self) -> int:
        return len(self.images)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other"""
        return Automorphism.from_array(self.array[other.array])

    def inverse(self) -> "Automorphism":
        inverse = np.empty(len(self), dtype=np.int64)
        inverse[self.array] = np.arange(len(self))
        return Automorphism.from_array(inverse)

    def is_identity(self) -> bool:
        return self.images == tuple(range(len(self.images)))

    def one_line(self) -> str:
        return " ".join(str(v) for v in self.images)


def is_automorphism(G: FiniteGroup, images: Union[Automorphism, np.ndarray]) -> bool:
    """Bijective and multiplicative on every pair"""
    perm = images.array if isinstance(images, Automorphism) else np.asarray(images)
    if perm.shape != (G.order,) or np.unique(perm).size != G.order:
        return False
    return bool((perm[G.table] == G.table[perm[:, None], perm[None, :]]).all())


def preserves_classes(G: FiniteGroup, phi: Automorphism) -> bool:
    """phi(g) is conjugate to g for every g"""
    return bool((G.conjugation_table == phi.array[:, None]).any(axis=1).all())


def fixes_pointwise(phi: Automorphism, H: Subgroup) -> bool:
    idx = H.index_array
    return bool((phi.array[idx] == idx).all())


def extend_to_homomorphism(
    G: FiniteGroup,
    generators: Sequence[int],
    images: Sequence[int]
) -> Optional[np.ndarray]:
    """
    Extend generator images along the Cayley graph

    Walks the right Cayley graph from the identity, setting
    phi(x g_i) = phi(x) h_i and checking every edge. The result is a
    homomorphism exactly when no edge conflicts.

    Returns:
        Image array, or None on a conflict or when the generators do not
        generate G
    """
    table = G.table
    phi = np.full(G.order, -1, dtype=np.int64)
    phi[G.identity] = G.identity
    frontier = np.array([G.identity])
    while frontier.size:
        reached = []
        for g, h in zip(generators, images):
            targets = table[frontier, g].astype(np.int64)
            values = table[phi[frontier], h].astype(np.int64)
            assigned = phi[targets] >= 0
            if (phi[targets[assigned]] != values[assigned]).any():
                return None
            fresh_targets, fresh_values = targets[~assigned], values[~assigned]
            phi[fresh_targets] = fresh_values
            if (phi[fresh_targets] != fresh_values).any():
                return None
            reached.append(fresh_targets)
        frontier = np.unique(np.concatenate(reached)) if reached else np.array([], dtype=np.int64)
    if (phi < 0).any():
        return None
    return phi


# ============================================================
# AUTOMORPHISM SETS
# ============================================================

@dataclass(frozen=True)
class OrderOnly:
    """Structure report for a non-abelian automorphism set"""

    order: int

    def __str__(self) -> str:
        return f"non-abelian of order {self.order}"


@dataclass(frozen=True, eq=False)
class AutSet:
    """
    Set of automorphisms of one group

    `kind` names the set (inner, ia, ia-star, aut-c, aut). `closed` records
    that the set was produced as a group; is_closed() re-checks it.
    """

    group: FiniteGroup
    members: FrozenSet[Automorphism]
    kind: str = "custom"
    closed: bool = True

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted_members)

    def __contains__(self, phi: Automorphism) -> bool:
        return phi in self.members

    def __repr__(self) -> str:
        return f"AutSet({self.kind!r} of {self.group.name}, order={self.order})"

    @cached_property
    def sorted_members(self) -> Tuple[Automorphism, ...]:
        return tuple(sorted(self.members, key=lambda phi: phi.images))

    def issubset(self, other: "AutSet") -> bool:
        return self.group is other.group and self.members <= other.members

    def filter(self, keep: Callable[[Automorphism], bool], kind: str) -> "AutSet":
        return AutSet(self.group, frozenset(phi for phi in self.members if keep(phi)), kind, self.closed)

    @cached_property
    def composition_table(self) -> np.ndarray:
        """table[i, j] = index of sorted_members[i] after sorted_members[j]; -1 if outside the set"""
        stacked = np.array([phi.images for phi in self.sorted_members], dtype=np.int64)
        position = {phi.images: i for i, phi in enumerate(self.sorted_members)}
        k = len(stacked)
        table = np.full((k, k), -1, dtype=np.int64)
        for i in range(k):
            composed = stacked[i][stacked]
            for j in range(k):
                table[i, j] = position.get(tuple(composed[j].tolist()), -1)
        return table

    def is_closed(self) -> bool:
        """Contains the identity and is closed under composition (so under inverses too)"""
        if Automorphism.identity(self.group.order) not in self.members:
            return False
        return bool((self.composition_table >= 0).all())

    def as_group(self) -> FiniteGroup:
        if not self.is_closed():
            raise PreconditionError(f"{self!r} is not closed under composition")
        return FiniteGroup.from_table(self.composition_table, name=f"{self.kind}({self.group.name})", family="automorphisms")

    def is_abelian(self) -> bool:
        return bool((self.composition_table == self.composition_table.T).all())

    def export(self) -> dict:
        """Record following the aut_set_export schema"""
        from ia_nilpotent.groups.doctype import make_record

        structure = structure_of(self) if self.is_closed() else OrderOnly(self.order)
        return make_record(
            "aut_set_export",
            group=self.group.name,
            kind=self.kind,
            order=self.order,
            closed=self.is_closed(),
            abelian=isinstance(structure, FgAbelian),
            structure=format_descriptor(structure) if isinstance(structure, FgAbelian) else str(structure),
            permutations=[list(phi.images) for phi in self.sorted_members],
        )


def set_equal(S: AutSet, T: AutSet) -> bool:
    """Exact comparison of two sets of automorphisms of the same group"""
    if S.group is not T.group:
        raise PreconditionError("automorphism sets of different groups")
    return S.members == T.members


def structure_of(S: AutSet) -> Union[FgAbelian, OrderOnly]:
    """Invariant factors when S is an abelian group under composition, else the order only"""
    if S.is_closed() and S.is_abelian():
        return abelian_structure(S.as_group())
    return OrderOnly(S.order)


# ============================================================
# INNER AUTOMORPHISMS AND THE HOM CONSTRUCTION
# ============================================================

def inner(G: FiniteGroup) -> AutSet:
    """All conjugations g -> a^-1 g a"""
    conj = G.conjugation_table
    members = frozenset(Automorphism.from_array(conj[:, a]) for a in range(G.order))
    return AutSet(G, members, "inner")


def t_theta(
    G: FiniteGroup,
    theta: Union[Mapping[int, int], Sequence[int], np.ndarray],
    X: Subgroup,
    Y: Subgroup,
    quotient_map: Optional[QuotientMap] = None
) -> Automorphism:
    """
    The automorphism g -> g theta(gX)

    Args:
        G: Group
        theta: Image in Y of every element of G/X (indexed as in the quotient)
        X: Normal subgroup
        Y: Central subgroup contained in X
        quotient_map: G/X if already computed

    Returns:
        Automorphism

    Raises:
        YNotCentral: Y is not central
        ThetaNotHomomorphism: theta is not a homomorphism G/X -> Y
        PreconditionError: X not normal or Y not inside X
    """
    if not X.is_normal:
        raise PreconditionError(f"{X.name} is not normal in {G.name}")
    if not Y.issubset(center(G)):
        raise YNotCentral(f"{Y.name} is not central in {G.name}")
    if not Y.issubset(X):
        raise PreconditionError(f"{Y.name} is not contained in {X.name}")
    qmap = quotient_map or quotient(G, X)
    Q = qmap.group
    if isinstance(theta, Mapping):
        values = np.full(Q.order, G.identity, dtype=np.int64)
        for coset, image in theta.items():
            values[coset] = image
    else:
        values = np.asarray(theta, dtype=np.int64)
    if values.shape != (Q.order,):
        raise ThetaNotHomomorphism(f"theta needs one image per element of {Q.name}")
    if not Y.mask[values].all():
        raise ThetaNotHomomorphism(f"theta takes values outside {Y.name}")
    if not (values[Q.table] == G.table[values[:, None], values[None, :]]).all():
        raise ThetaNotHomomorphism(f"theta is not a homomorphism {Q.name} -> {Y.name}")
    perm = G.table[np.arange(G.order), values[qmap.projection]]
    if not is_automorphism(G, perm):
        raise ThetaNotHomomorphism("g -> g theta(gX) is not an automorphism")
    return Automorphism.from_array(perm)


def _require_class2(G: FiniteGroup) -> None:
    c = nilpotency_class(G)
    if c > 2:
        raise NotClass2(f"{G.name} has nilpotency class {c}")


def _hom_automorphisms(G: FiniteGroup, qmap: QuotientMap, Y: Subgroup) -> List[Automorphism]:
    """T_theta for every theta in Hom(G/X, Y), enumerated on a basis of G/X"""
    Q = qmap.group
    basis = cyclic_decomposition(Q)
    coords = basis_coordinates(Q, basis)
    Y_orders = G.element_orders[Y.index_array]
    choices = [Y.index_array[o % Y_orders == 0] for _, o in basis]
    members = []
    for images in itertools.product(*choices):
        theta = np.full(Q.order, G.identity, dtype=np.int64)
        for i, y in enumerate(images):
            powers = np.asarray(cyclic_powers(G, int(y)))
            theta = G.table[theta, powers[coords[:, i] % len(powers)]]
        members.append(t_theta(G, theta, qmap.kernel, Y, quotient_map=qmap))
    return members


def ia_class2(G: FiniteGroup) -> AutSet:
    """
    IA(G) of a group of class at most 2, one T_theta per theta in Hom(G/G', G')

    Raises:
        NotClass2: class 3 or more
        NotNilpotent: G is not nilpotent
    """
    _require_class2(G)
    D = derived_subgroup(G)
    members = _hom_automorphisms(G, abelianization(G), D)
    logger("autos").debug(f"IA({G.name}) from Hom(G/G', G'): {len(members)} automorphisms")
    return AutSet(G, frozenset(members), "ia")


def ia_star_class2(G: FiniteGroup) -> AutSet:
    """IA(G)* of a group of class at most 2, one T_theta per theta in Hom(G/Z, G')"""
    _require_class2(G)
    members = _hom_automorphisms(G, central_quotient(G), derived_subgroup(G))
    return AutSet(G, frozenset(members), "ia-star")


# ============================================================
# BRUTE FORCE
# ============================================================

CandidateFilter = Callable[[FiniteGroup, int], np.ndarray]


def same_order_candidates(G: FiniteGroup, g: int) -> np.ndarray:
    return np.flatnonzero(G.element_orders == G.element_orders[g])


def conjugate_candidates(G: FiniteGroup, g: int) -> np.ndarray:
    return np.unique(G.conjugation_table[g])


def _enumerate(G: FiniteGroup, generators: Sequence[int], choices: Sequence[np.ndarray]) -> List[Automorphism]:
    settings = get_settings()
    count = int(np.prod([len(c) for c in choices])) if choices else 1
    if count > settings.oracle_candidate_budget:
        raise CapExceeded(
            f"{count} generator-image candidates for {G.name} exceed the budget {settings.oracle_candidate_budget}"
        )
    members = []
    for images in itertools.product(*choices):
        phi = extend_to_homomorphism(G, generators, images)
        if phi is not None and is_automorphism(G, phi):
            members.append(Automorphism.from_array(phi))
    return members


def _check_oracle_cap(G: FiniteGroup) -> None:
    cap = get_settings().oracle_cap
    if G.order > cap:
        raise CapExceeded(f"brute-force enumeration needs |G| <= {cap}, got {G.order}")


def ia_bruteforce(G: FiniteGroup) -> AutSet:
    """
    IA(G) for any finite G by search over generator images

    Each generator t_i of a minimal generating tuple may only go to an
    element of t_i G' of the same order; every candidate tuple is extended
    along the Cayley graph and kept when it is a bijective homomorphism.

    Raises:
        CapExceeded: |G| above oracle_cap or too many candidates
    """
    _check_oracle_cap(G)
    generators = minimal_generating_tuple(G)
    D = derived_subgroup(G)
    orders = G.element_orders
    choices = []
    for t in generators:
        coset = G.table[t, D.index_array]
        choices.append(np.sort(coset[orders[coset] == orders[t]]))
    members = _enumerate(G, generators, choices)
    logger("autos").debug(f"IA({G.name}) by brute force: {len(members)} automorphisms")
    return AutSet(G, frozenset(members), "ia")


def all_automorphisms(G: FiniteGroup, candidates: Optional[CandidateFilter] = None) -> AutSet:
    """
    Aut(G) by search over generator images

    Args:
        G: Group of order at most oracle_cap
        candidates: Allowed images of one generator (same order by default);
            a filter that drops automorphisms restricts the result accordingly
    """
    _check_oracle_cap(G)
    candidates = candidates or same_order_candidates
    generators = minimal_generating_tuple(G)
    choices = [np.sort(candidates(G, t)) for t in generators]
    return AutSet(G, frozenset(_enumerate(G, generators, choices)), "aut")


def ia(G: FiniteGroup) -> AutSet:
    """IA(G) through the Hom construction for class <= 2, by brute force otherwise"""
    try:
        _require_class2(G)
    except (NotClass2, NotNilpotent):
        return ia_bruteforce(G)
    return ia_class2(G)


def ia_star(G: FiniteGroup) -> AutSet:
    """IA-automorphisms fixing Z(G) pointwise"""
    Z = center(G)
    return ia(G).filter(lambda phi: fixes_pointwise(phi, Z), "ia-star")


def aut_c(G: FiniteGroup) -> AutSet:
    """
    Class-preserving automorphisms

    For class <= 2 these are found inside IA(G)*; other groups are searched
    from scratch with generator images restricted to conjugates.
    """
    try:
        _require_class2(G)
    except (NotClass2, NotNilpotent):
        found = all_automorphisms(G, candidates=conjugate_candidates)
        return found.filter(lambda phi: preserves_classes(G, phi), "aut-c")
    return ia_star(G).filter(lambda phi: preserves_classes(G, phi), "aut-c")


AUT_SETS = {
    "inner": inner,
    "ia": ia,
    "ia-star": ia_star,
    "aut-c": aut_c,
}
