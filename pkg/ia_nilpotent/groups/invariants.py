# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Structural invariants of finite groups
======================================

Distinguished subgroups (center, derived subgroup, Frattini subgroup, the
central series), quotients as full Cayley tables, commutator sets, and
recognition of finite abelian groups as FgAbelian descriptors.

All queries work on the index tables of a FiniteGroup with numpy masks.

Usage:
    from ia_nilpotent.groups.pcgroup import paper_example_32
    from ia_nilpotent.groups.invariants import center, derived_subgroup, nilpotency_class

    G = paper_example_32()
    center(G).order             # 2
    derived_subgroup(G).order   # 4
    nilpotency_class(G)         # 3
"""

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import factorint, multiplicity

from ia_nilpotent.config.settings import get_settings
from ia_nilpotent.exceptions import CapExceeded, ConsistencyError, NotAbelian, NotClass2, NotNilpotent, NotNormal, ParseError
from ia_nilpotent.groups.abelian import (
    FgAbelian,
    format_descriptor,
    parse_descriptor,
    torsion_rank,
)
from ia_nilpotent.groups.pcgroup import FiniteGroup, closure_mask
from ia_nilpotent.utils import logger

# Cyclic-extension subgroup search is only run up to this order
LATTICE_SEARCH_CAP = 128

# Hom sets up to this size are enumerated map by map in hom_bruteforce
HOM_TABLE_LIMIT = 256


# ============================================================
# SUBGROUPS
# ============================================================

class Subgroup:
    """
    Subgroup of a FiniteGroup, held as a sorted tuple of element indices

    Closure under multiplication is checked at construction (in a finite
    group that also gives closure under inverses).
    """

    def __init__(self, group: FiniteGroup, elements: Iterable[int], name: str = "H"):
        self.group = group
        self.elements = tuple(sorted(int(g) for g in set(elements)))
        self.name = name
        mask = self.mask
        if not mask[group.identity]:
            raise ValueError(f"{name} does not contain the identity")
        idx = np.asarray(self.elements)
        if not mask[group.table[np.ix_(idx, idx)]].all():
            raise ValueError(f"{name} is not closed under multiplication")

    def __repr__(self) -> str:
        return f"Subgroup({self.name!r} of {self.group.name}, order={self.order})"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return bool(self.mask[g])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group is other.group and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((id(self.group), self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.group.order, dtype=bool)
        mask[list(self.elements)] = True
        return mask

    @property
    def index_array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)

    def issubset(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.index_array].all())

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.group.order

    @cached_property
    def is_normal(self) -> bool:
        conj = self.group.conjugation_table[self.index_array]
        return bool(self.mask[conj].all())

    @cached_property
    def is_abelian(self) -> bool:
        idx = self.index_array
        sub = self.group.table[np.ix_(idx, idx)]
        return bool((sub == sub.T).all())

    @cached_property
    def is_cyclic(self) -> bool:
        return bool((self.group.element_orders[self.index_array] == self.order).any())

    @cached_property
    def is_elementary_abelian(self) -> bool:
        if self.order == 1:
            return True
        factors = factorint(self.order)
        if len(factors) != 1 or not self.is_abelian:
            return False
        p = int(next(iter(factors)))
        orders = self.group.element_orders[self.index_array]
        return bool(((orders == 1) | (orders == p)).all())

    @cached_property
    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone FiniteGroup (element i is self.elements[i])"""
        idx = self.index_array
        position = np.full(self.group.order, -1, dtype=np.int64)
        position[idx] = np.arange(len(idx))
        table = position[self.group.table[np.ix_(idx, idx)]]
        return FiniteGroup.from_table(table, name=self.name, family="subgroup")


def subgroup_from_mask(G: FiniteGroup, mask: np.ndarray, name: str = "H") -> Subgroup:
    return Subgroup(G, np.flatnonzero(mask), name)


def generated(G: FiniteGroup, gens: Iterable[int], name: str = "H") -> Subgroup:
    """Subgroup generated by some elements"""
    return subgroup_from_mask(G, closure_mask(G, sorted(set(int(g) for g in gens))), name)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, [G.identity], "1")


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order), G.name)


def intersection(H: Subgroup, K: Subgroup, name: str = "H") -> Subgroup:
    return subgroup_from_mask(H.group, H.mask & K.mask, name)


def product_subgroup(H: Subgroup, K: Subgroup, name: str = "HK") -> Subgroup:
    """HK for H, K with one of them normal"""
    table = H.group.table[np.ix_(H.index_array, K.index_array)]
    return Subgroup(H.group, np.unique(table), name)


def _ambient(H: Union[FiniteGroup, Subgroup]) -> Tuple[FiniteGroup, np.ndarray]:
    if isinstance(H, Subgroup):
        return H.group, H.index_array
    return H, np.arange(H.order)


def _is_abelian(H: Union[FiniteGroup, Subgroup]) -> bool:
    return H.is_abelian


def power_map(G: FiniteGroup, k: int) -> np.ndarray:
    """Array whose entry g is g^k (k >= 0)"""
    result = np.full(G.order, G.identity, dtype=np.int64)
    base = np.arange(G.order)
    while k:
        if k & 1:
            result = G.table[result, base]
        base = G.table[base, base]
        k >>= 1
    return result


def cyclic_powers(G: FiniteGroup, g: int) -> List[int]:
    """[1, g, g^2, ..., g^(ord g - 1)]"""
    powers = [G.identity]
    for _ in range(G.element_order(g) - 1):
        powers.append(G.mul(powers[-1], g))
    return powers


# ============================================================
# CENTER, COMMUTATORS, SERIES
# ============================================================

def center(G: FiniteGroup) -> Subgroup:
    """Z(G) = {z : zg = gz for all g}"""
    mask = (G.table == G.table.T).all(axis=1)
    return subgroup_from_mask(G, mask, "Z")


def commutator_set(G: FiniteGroup) -> FrozenSet[int]:
    """K(G), the set of all commutators [a, b]"""
    return frozenset(int(c) for c in np.unique(G.commutator_table))


def commutator_with(G: FiniteGroup, x: int) -> FrozenSet[int]:
    """[x, G] = {[x, g] : g in G} as a set"""
    return frozenset(int(c) for c in np.unique(G.commutator_table[x]))


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    """G', the subgroup generated by K(G)"""
    return generated(G, commutator_set(G), "G'")


def commutator_subgroup(H: Subgroup, K: Subgroup, name: str = "[H,K]") -> Subgroup:
    G = H.group
    commutators = np.unique(G.commutator_table[np.ix_(H.index_array, K.index_array)])
    return generated(G, commutators, name)


def lower_central_series(G: FiniteGroup) -> List[Subgroup]:
    """G = gamma_1 >= gamma_2 >= ... until it stabilizes"""
    series = [whole(G)]
    while True:
        following = commutator_subgroup(series[-1], series[0], f"gamma{len(series) + 1}")
        if following.order == series[-1].order:
            return series
        series.append(following)


def upper_central_next(G: FiniteGroup, Z: Subgroup) -> Subgroup:
    """Z_{i+1} = {g : [g, x] in Z_i for all x}, for normal Z_i"""
    if not Z.is_normal:
        raise NotNormal(f"{Z.name} is not normal in {G.name}")
    mask = Z.mask[G.commutator_table].all(axis=1)
    return subgroup_from_mask(G, mask, "Z_next")


def upper_central_series(G: FiniteGroup) -> List[Subgroup]:
    """1 = Z_0 <= Z_1 <= ... until it stabilizes"""
    series = [trivial_subgroup(G)]
    while True:
        following = upper_central_next(G, series[-1])
        following.name = f"Z{len(series)}"
        if following.order == series[-1].order:
            return series
        series.append(following)


def is_nilpotent(G: FiniteGroup) -> bool:
    return lower_central_series(G)[-1].is_trivial()


def nilpotency_class(G: FiniteGroup) -> int:
    """
    Length of the lower central series

    Raises:
        NotNilpotent: the series stops above the trivial subgroup
    """
    series = lower_central_series(G)
    if not series[-1].is_trivial():
        raise NotNilpotent(f"{G.name} is not nilpotent")
    return len(series) - 1


def is_p_group(G: FiniteGroup) -> Optional[int]:
    """The prime p if |G| is a power of p (> 1), else None"""
    factors = factorint(G.order)
    if len(factors) != 1:
        return None
    return int(next(iter(factors)))


def coclass(G: FiniteGroup) -> Optional[int]:
    """n - class for a p-group of order p^n; None for other groups"""
    p = is_p_group(G)
    if p is None:
        return None
    return multiplicity(p, G.order) - nilpotency_class(G)


def conjugacy_classes(G: FiniteGroup) -> List[Tuple[int, ...]]:
    """Partition into classes, each sorted, ordered by smallest element"""
    conj = G.conjugation_table
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for g in range(G.order):
        if seen[g]:
            continue
        cls = np.unique(conj[g])
        seen[cls] = True
        classes.append(tuple(int(c) for c in cls))
    return classes


# ============================================================
# QUOTIENTS
# ============================================================

@dataclass(frozen=True, eq=False)
class QuotientMap:
    """G/N with the projection G -> G/N and one coset representative per element"""

    group: FiniteGroup
    projection: np.ndarray
    representatives: Tuple[int, ...]
    kernel: Subgroup


def quotient(G: FiniteGroup, N: Subgroup, name: Optional[str] = None) -> QuotientMap:
    """
    Materialize G/N as a Cayley table

    Cosets are numbered by their smallest element, so the coset of the
    identity (index 0 for groups built from presentations) comes first.

    Raises:
        NotNormal: N is not normal in G
    """
    if N.group is not G:
        raise ValueError(f"{N.name} is not a subgroup of {G.name}")
    if not N.is_normal:
        raise NotNormal(f"{N.name} is not normal in {G.name}")
    keys = G.table[:, N.index_array].min(axis=1)
    representatives, projection = np.unique(keys, return_inverse=True)
    projection = projection.reshape(-1)
    table = projection[G.table[np.ix_(representatives, representatives)]]
    identity_coset = projection[G.identity]
    generators = []
    for g in G.generators:
        image = int(projection[g])
        if image != identity_coset and image not in generators:
            generators.append(image)
    Q = FiniteGroup.from_table(
        table, name=name or f"{G.name}/{N.name}", generators=generators, family="quotient"
    )
    projection.setflags(write=False)
    return QuotientMap(Q, projection, tuple(int(r) for r in representatives), N)


def abelianization(G: FiniteGroup) -> QuotientMap:
    return quotient(G, derived_subgroup(G), f"{G.name}/G'")


def central_quotient(G: FiniteGroup) -> QuotientMap:
    return quotient(G, center(G), f"{G.name}/Z")


# ============================================================
# ABELIAN RECOGNITION
# ============================================================

def abelian_structure(H: Union[FiniteGroup, Subgroup]) -> FgAbelian:
    """
    Primary decomposition of a finite abelian group

    For each prime p, s_k = log_p #{x : ord(x) divides p^k} equals
    sum_j min(alpha_j, k), so s_k - s_{k-1} counts the factors of exponent
    at least k; the exponents are the conjugate partition of those counts.

    Raises:
        NotAbelian: H is not abelian
    """
    if not _is_abelian(H):
        raise NotAbelian(f"{getattr(H, 'name', 'H')} is not abelian")
    G, elements = _ambient(H)
    orders = G.element_orders[elements]
    primary: Dict[int, List[int]] = {}
    for p, e in factorint(len(elements)).items():
        p = int(p)
        at_least: List[int] = []
        previous, k = 0, 1
        while previous < e:
            count = int(np.count_nonzero((p**k) % orders == 0))
            s = multiplicity(p, count)
            at_least.append(s - previous)
            previous, k = s, k + 1
        primary[p] = [sum(1 for c in at_least if c >= j) for j in range(1, at_least[0] + 1)]
    return FgAbelian.make(primary)


def cyclic_decomposition(H: Union[FiniteGroup, Subgroup]) -> List[Tuple[int, int]]:
    """
    Independent basis of a finite abelian group

    Returns (element, order) pairs in primary order: primes increasing,
    orders non-increasing within a prime. Each basis element is the first
    element (by index) of the required order whose order-p power lies
    outside the span of the elements already chosen; with orders taken in
    non-increasing sequence that choice always extends to a basis.

    Raises:
        NotAbelian: H is not abelian
    """
    structure = abelian_structure(H)
    G, elements = _ambient(H)
    orders = G.element_orders
    basis: List[Tuple[int, int]] = []
    for p, exps in structure.primary:
        span = np.array([G.identity])
        in_span = np.zeros(G.order, dtype=bool)
        in_span[G.identity] = True
        for alpha in exps:
            q = p**alpha
            socle = power_map(G, q // p)
            candidates = elements[orders[elements] == q]
            x = next(int(c) for c in candidates if not in_span[socle[c]])
            span = np.unique(G.table[np.ix_(span, cyclic_powers(G, x))])
            in_span[span] = True
            basis.append((x, q))
    return basis


def basis_coordinates(G: FiniteGroup, basis: Sequence[Tuple[int, int]]) -> np.ndarray:
    """
    Coordinates of the elements spanned by an independent basis

    Returns:
        Array of shape (|G|, len(basis)); row g holds (c_1, ...) with
        g = b_1^c_1 ... b_r^c_r, or -1 everywhere when g is not spanned
    """
    coords = np.full((G.order, len(basis)), -1, dtype=np.int64)
    elements = np.array([G.identity])
    vectors = np.zeros((1, 0), dtype=np.int64)
    for b, o in basis:
        powers = np.asarray(cyclic_powers(G, b))
        elements = G.table[np.ix_(elements, powers)].ravel()
        vectors = np.concatenate(
            [np.repeat(vectors, o, axis=0), np.tile(np.arange(o), len(vectors))[:, None]], axis=1
        )
    coords[elements] = vectors
    return coords


def power_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """G^p = <g^p : g in G>"""
    return generated(G, np.unique(power_map(G, p)), f"G^{p}")


# ============================================================
# MAXIMAL AND FRATTINI SUBGROUPS
# ============================================================

def _projective_vectors(p: int, r: int) -> Iterable[Tuple[int, ...]]:
    for vector in itertools.product(range(p), repeat=r):
        first = next((v for v in vector if v), 0)
        if first == 1:
            yield vector


def maximal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """
    All maximal subgroups

    For nilpotent G these are the kernels of the surjections G -> C_p,
    read off a basis of G/G' one projective functional at a time. Other
    groups get a cyclic-extension search over the subgroup lattice.

    Raises:
        CapExceeded: non-nilpotent G above the lattice search cap
    """
    if G.order == 1:
        return []
    if is_nilpotent(G):
        ab = abelianization(G)
        basis = cyclic_decomposition(ab.group)
        coords = basis_coordinates(ab.group, basis)
        result = []
        for p in sorted({int(next(iter(factorint(o)))) for _, o in basis}):
            columns = [i for i, (_, o) in enumerate(basis) if o % p == 0]
            for functional in _projective_vectors(p, len(columns)):
                values = (coords[:, columns] @ np.asarray(functional)) % p
                mask = (values == 0)[ab.projection]
                result.append(subgroup_from_mask(G, mask, f"M{len(result) + 1}"))
        return result
    return _maximal_by_lattice_search(G)


def _maximal_by_lattice_search(G: FiniteGroup) -> List[Subgroup]:
    if G.order > LATTICE_SEARCH_CAP:
        raise CapExceeded(f"subgroup lattice search needs order <= {LATTICE_SEARCH_CAP}, got {G.order}")
    cyclic_masks = {}
    for g in range(G.order):
        mask = closure_mask(G, [g])
        cyclic_masks.setdefault(mask.tobytes(), (mask, g))
    found: Dict[bytes, Tuple[np.ndarray, List[int]]] = {key: (mask, [g]) for key, (mask, g) in cyclic_masks.items()}
    frontier = list(found)
    while frontier:
        following = []
        for key in frontier:
            mask, gens = found[key]
            for cyclic_mask, g in cyclic_masks.values():
                if (cyclic_mask & ~mask).any():
                    extended = closure_mask(G, gens + [g])
                    new_key = extended.tobytes()
                    if new_key not in found:
                        found[new_key] = (extended, gens + [g])
                        following.append(new_key)
        frontier = following
    proper = [mask for mask, _ in found.values() if not mask.all()]
    maximal = [
        mask for mask in proper
        if not any(other.sum() > mask.sum() and not (mask & ~other).any() for other in proper)
    ]
    maximal.sort(key=lambda m: tuple(np.flatnonzero(m)))
    return [subgroup_from_mask(G, mask, f"M{i + 1}") for i, mask in enumerate(maximal)]


def frattini_subgroup(G: FiniteGroup) -> Subgroup:
    """Phi(G), the intersection of all maximal subgroups"""
    mask = np.ones(G.order, dtype=bool)
    for M in maximal_subgroups(G):
        mask &= M.mask
    return subgroup_from_mask(G, mask, "Phi")


def frattini_by_powers(G: FiniteGroup) -> Subgroup:
    """G'G^p for a p-group (equal to Phi(G))"""
    p = is_p_group(G)
    if p is None:
        raise ValueError(f"{G.name} is not a p-group")
    return product_subgroup(derived_subgroup(G), power_subgroup(G, p), "G'G^p")


# ============================================================
# GENERATING TUPLES
# ============================================================

def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Row rank over GF(p) by Gaussian elimination"""
    rows = [[int(v) % p for v in row] for row in rows]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = pow(rows[rank][col], -1, p)
        rows[rank] = [(v * inverse) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


class _FrattiniTest:
    """Generation test for nilpotent groups: a tuple generates G iff it generates G/Phi(G)"""

    def __init__(self, G: FiniteGroup):
        fq = quotient(G, frattini_subgroup(G))
        basis = cyclic_decomposition(fq.group)
        self.projection = fq.projection
        self.representatives = fq.representatives
        self.quotient = fq.group
        self.basis = basis
        self.coords = basis_coordinates(fq.group, basis)
        self.blocks: Dict[int, List[int]] = {}
        for i, (_, p) in enumerate(basis):
            self.blocks.setdefault(p, []).append(i)

    def __call__(self, elements: Sequence[int]) -> bool:
        vectors = self.coords[self.projection[list(elements)]]
        return all(
            _rank_mod_p(vectors[:, columns].tolist(), p) == len(columns)
            for p, columns in self.blocks.items()
        )


def generation_test(G: FiniteGroup) -> Callable[[Sequence[int]], bool]:
    """Predicate telling whether a sequence of elements generates G"""
    if G.order == 1:
        return lambda elements: True
    if is_nilpotent(G):
        return _FrattiniTest(G)
    return lambda elements: bool(closure_mask(G, list(elements)).all())


def minimal_generator_count(G: FiniteGroup) -> int:
    """d(G), the size of a smallest generating set"""
    if G.order == 1:
        return 0
    if is_nilpotent(G):
        test = _FrattiniTest(G)
        return max(len(columns) for columns in test.blocks.values())
    for r in itertools.count(1):
        for combo in itertools.combinations(range(G.order), r):
            if closure_mask(G, combo).all():
                return r


def is_generating(G: FiniteGroup, elements: Sequence[int]) -> bool:
    return generation_test(G)(elements)


def torsion_rank_of_group(H: Union[FiniteGroup, Subgroup]) -> int:
    """d(H): torsion rank of the recognized structure for abelian H, else d of the group"""
    if _is_abelian(H):
        return torsion_rank(abelian_structure(H))
    return minimal_generator_count(H.as_group if isinstance(H, Subgroup) else H)


def minimal_generating_tuple(G: FiniteGroup) -> Tuple[int, ...]:
    """
    One generating tuple of size d(G)

    For nilpotent G the i-th entry lifts the product, over primes p, of the
    i-th basis vector of the p-part of G/Phi(G).
    """
    if G.order == 1:
        return ()
    if not is_nilpotent(G):
        d = minimal_generator_count(G)
        return next(
            combo for combo in itertools.combinations(range(G.order), d) if closure_mask(G, combo).all()
        )
    test = _FrattiniTest(G)
    F = test.quotient
    d = max(len(columns) for columns in test.blocks.values())
    entries = []
    for i in range(d):
        element = F.identity
        for columns in test.blocks.values():
            if i < len(columns):
                element = F.mul(element, test.basis[columns[i]][0])
        entries.append(test.representatives[element])
    return tuple(entries)


def minimal_generating_tuples(
    Q: FiniteGroup,
    sample_limit: Optional[int] = None,
    seed: Optional[int] = None
) -> List[Tuple[int, ...]]:
    """
    Generating tuples of size d(Q)

    The search runs over all |Q|^d tuples in lexicographic order when that
    space is at most exhaustive_threshold; a seeded sample of sample_limit
    of the generating tuples found is kept when there are more. Larger
    spaces are sampled uniformly with the same seed.

    Args:
        Q: Group (typically G/Z(G))
        sample_limit: Most tuples returned (default from settings)
        seed: Sampling seed (default from settings)

    Returns:
        Sorted list of tuples of element indices of Q
    """
    settings = get_settings()
    limit = sample_limit or settings.sample_limit
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    d = minimal_generator_count(Q)
    if d == 0:
        return [()]
    test = generation_test(Q)
    n = Q.order
    if n**d <= settings.exhaustive_threshold:
        found = [combo for combo in itertools.product(range(n), repeat=d) if test(combo)]
        if len(found) > limit:
            keep = np.sort(rng.choice(len(found), size=limit, replace=False))
            found = [found[i] for i in keep]
        return found
    sampled = set()
    attempts = 0
    while len(sampled) < limit and attempts < 100 * limit:
        attempts += 1
        combo = tuple(int(v) for v in rng.integers(0, n, size=d))
        if combo not in sampled and test(combo):
            sampled.add(combo)
    logger("invariants").debug(f"sampled {len(sampled)} generating tuples of {Q.name} in {attempts} draws")
    return sorted(sampled)


# ============================================================
# STRUCTURE TRIPLES
# ============================================================

@dataclass(frozen=True)
class StructureTriple:
    """Descriptors of G/Z(G), G/G' and G'"""

    center_quotient: FgAbelian
    abelianization: FgAbelian
    derived: FgAbelian
    source: str = "computed-from-group"

    def __str__(self) -> str:
        return " | ".join(format_descriptor(U) for U in (self.center_quotient, self.abelianization, self.derived))


@dataclass(frozen=True)
class CenterDerivedOrders:
    """The only facts a class-3 group needs for the Schur-type bounds"""

    center_index: int
    derived_order: int


def parse_triple(text: str) -> StructureTriple:
    """
    Parse "A | B | C" (descriptors of G/Z, G/G', G')

    Raises:
        ParseError: not three descriptors, or a bad descriptor
    """
    parts = text.split("|")
    if len(parts) != 3:
        raise ParseError(f"a triple needs three descriptors separated by '|', got {len(parts)}", 1, 1)
    factors = []
    offset = 0
    for part in parts:
        try:
            factors.append(parse_descriptor(part))
        except ParseError as e:
            raise ParseError(e.reason, 1, offset + (e.column or 1)) from e
        offset += len(part) + 1
    return StructureTriple(*factors, source="user-supplied")


def structure_triple(G: FiniteGroup) -> StructureTriple:
    """
    Recognize G/Z, G/G' and G' of a group of class at most 2

    Raises:
        NotNilpotent: G is not nilpotent
        NotClass2: G has class 3 or more
    """
    c = nilpotency_class(G)
    if c > 2:
        raise NotClass2(f"{G.name} has nilpotency class {c}")
    return StructureTriple(
        abelian_structure(central_quotient(G).group),
        abelian_structure(abelianization(G).group),
        abelian_structure(derived_subgroup(G)),
    )


def center_derived_orders(G: FiniteGroup) -> CenterDerivedOrders:
    return CenterDerivedOrders(G.order // center(G).order, derived_subgroup(G).order)


# ============================================================
# HOM ORACLE
# ============================================================

def hom_bruteforce(U: FiniteGroup, V: FiniteGroup) -> FgAbelian:
    """
    Hom(U, V) for finite abelian U, V computed from the groups

    A homomorphism is fixed by the images v_i of a basis u_i of U, subject
    to ord(v_i) | ord(u_i).

    Up to HOM_TABLE_LIMIT maps, every image tuple is extended along the
    basis coordinates, checked to be multiplicative, and the table of
    pointwise products is recognized. Above it, each map that is trivial
    on all basis elements but one is checked instead, and the group is
    recognized from the counts |Hom(U, V)[p^k]|: f^(p^k) = 1 exactly when
    every image lies in V[p^k], so each count is a product of element
    counts read off V's table.

    Raises:
        NotAbelian: U or V is not abelian
        ConsistencyError: a candidate map is not a homomorphism
    """
    if not U.is_abelian or not V.is_abelian:
        raise NotAbelian("hom_bruteforce needs abelian groups")
    basis = cyclic_decomposition(U)
    torsion = [np.flatnonzero(o % V.element_orders == 0) for _, o in basis]
    count = int(np.prod([len(t) for t in torsion])) if torsion else 1
    coords = basis_coordinates(U, basis)
    if count > HOM_TABLE_LIMIT:
        logger("invariants").debug(f"hom_bruteforce: {count} maps, counting torsion instead of tabulating")
        for i, t in enumerate(torsion):
            for v in t:
                _check_extends(U, V, {i: int(v)}, coords)
        return _hom_from_torsion_counts([o for _, o in basis], V, count)

    maps = []
    for images in itertools.product(*torsion):
        _check_extends(U, V, dict(enumerate(int(v) for v in images)), coords)
        maps.append(images)
    maps = np.array(maps, dtype=np.int64).reshape(len(maps), len(basis))
    products = V.table[maps[:, None, :], maps[None, :, :]]
    # row index of a map in itertools.product order (last coordinate fastest)
    table = np.zeros((len(maps), len(maps)), dtype=np.int64)
    stride = 1
    for i in reversed(range(len(basis))):
        index = np.full(V.order, -1, dtype=np.int64)
        index[torsion[i]] = np.arange(len(torsion[i]))
        table += index[products[:, :, i]] * stride
        stride *= len(torsion[i])
    return abelian_structure(FiniteGroup.from_table(table, name=f"Hom({U.name},{V.name})"))


def _check_extends(U: FiniteGroup, V: FiniteGroup, images: Dict[int, int], coords: np.ndarray) -> None:
    """Extend basis images (missing ones trivial) along coords and check the result is multiplicative"""
    values = np.full(U.order, V.identity, dtype=np.int64)
    for i, v in images.items():
        values = V.table[values, _power_column(V, v, coords[:, i])]
    if not np.array_equal(values[U.table], V.table[values[:, None], values[None, :]]):
        raise ConsistencyError(f"basis images {images} do not extend to a homomorphism")


def _hom_from_torsion_counts(orders: Sequence[int], V: FiniteGroup, count: int) -> FgAbelian:
    """
    Recognize a finite abelian group A of the given order from |A[p^k]|

    The number of cyclic p-factors of order at least p^k is
    log_p |A[p^k]| - log_p |A[p^(k-1)]|.
    """
    primary = {}
    for p, total in factorint(count).items():
        at_least = []
        previous, k = 0, 0
        while previous < total:
            k += 1
            n = p ** k
            size = 1
            for o in orders:
                size *= int(np.count_nonzero(math.gcd(int(o), n) % V.element_orders == 0))
            current = multiplicity(p, size)
            at_least.append(current - previous)
            previous = current
        primary[p] = [sum(1 for r in at_least if r > j) for j in range(at_least[0])]
    return FgAbelian.make(primary)


def _power_column(V: FiniteGroup, v: int, exponents: np.ndarray) -> np.ndarray:
    """Array of v^e for each entry e"""
    powers = np.asarray(cyclic_powers(V, v))
    return powers[exponents % len(powers)]


# ============================================================
# REPORT
# ============================================================

def analysis_report(G: FiniteGroup) -> dict:
    """Analysis record following the group_analysis schema"""
    from ia_nilpotent.groups.doctype import make_record

    Z = center(G)
    D = derived_subgroup(G)
    K = commutator_set(G)
    nilpotent = is_nilpotent(G)
    c = nilpotency_class(G) if nilpotent else None
    descriptors = {"center_quotient": None, "abelianization": None, "derived_subgroup": None}
    descriptors["abelianization"] = format_descriptor(abelian_structure(abelianization(G).group))
    if c is not None and c <= 2:
        triple = structure_triple(G)
        descriptors["center_quotient"] = format_descriptor(triple.center_quotient)
        descriptors["derived_subgroup"] = format_descriptor(triple.derived)
    elif D.is_abelian:
        descriptors["derived_subgroup"] = format_descriptor(abelian_structure(D))
    return make_record(
        "group_analysis",
        name=G.name,
        family=G.family,
        order=G.order,
        verification=G.verification,
        exponent=G.exponent,
        nilpotent=nilpotent,
        nilpotency_class=c,
        coclass=coclass(G) if nilpotent else None,
        center_order=Z.order,
        derived_order=D.order,
        commutator_set_size=len(K),
        commutators_fill_derived=len(K) == D.order,
        frattini_order=frattini_subgroup(G).order if nilpotent or G.order <= LATTICE_SEARCH_CAP else None,
        minimal_generators=minimal_generator_count(G) if nilpotent else None,
        **descriptors,
    )
