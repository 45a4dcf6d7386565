# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Power-commutator presentations and concrete finite groups
=========================================================

A PcPresentation lists generators g_1 ... g_k with relative orders e_i,
power relations g_i^e_i = w_i and conjugate relations g_i^-1 g_j g_i = w_ij
(i < j). Power right-hand sides are normal-form words in generators after g_i,
conjugate ones in generators from g_i on.
Collection from the left turns any word into the normal form
g_1^a_1 ... g_k^a_k, 0 <= a_i < e_i; build_group materializes every normal
form and the full Cayley table, then checks the table really is a group.

Usage:
    from ia_nilpotent.groups.pcgroup import paper_example_32, quaternion_generalized

    G = paper_example_32()
    G.order                     # 32
    Q8 = quaternion_generalized(8)
"""

import itertools
import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from math import prod
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import factorint, isprime

from ia_nilpotent.config.settings import get_settings
from ia_nilpotent.exceptions import (
    CapExceeded,
    CollectionBudgetExceeded,
    ConsistencyError,
    ParseError,
    UnknownGenerator,
)
from ia_nilpotent.groups.abelian import FgAbelian
from ia_nilpotent.utils import logger

NormalForm = Tuple[int, ...]
Letter = Tuple[int, int]

TABLE_DTYPE = np.int32


# ============================================================
# PRESENTATIONS
# ============================================================

@dataclass(frozen=True)
class PcPresentation:
    """
    Consistent power-commutator presentation

    `powers` maps i to the normal form of g_i^e_i and `conjugates` maps
    (i, j), i < j, to the normal form of g_i^-1 g_j g_i. Omitted relations
    mean g_i^e_i = 1 and g_i^-1 g_j g_i = g_j.
    """

    generators: Tuple[str, ...]
    relative_orders: Tuple[int, ...]
    powers: Tuple[Tuple[int, NormalForm], ...] = ()
    conjugates: Tuple[Tuple[Tuple[int, int], NormalForm], ...] = ()

    def __post_init__(self):
        k = len(self.generators)
        if len(self.relative_orders) != k:
            raise ValueError("one relative order per generator is required")
        if len(set(self.generators)) != k:
            raise ValueError(f"duplicate generator names in {self.generators}")
        for name in self.generators:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
                raise ValueError(f"bad generator name {name!r}")
        for e in self.relative_orders:
            if e < 2:
                raise ValueError(f"relative orders must be >= 2, got {e}")
        for i, rhs in self.powers:
            self._check_rhs(rhs, i + 1, f"power relation of {self.generators[i]}")
        for (i, j), rhs in self.conjugates:
            if not 0 <= i < j < k:
                raise ValueError(f"conjugate relation ({i}, {j}) needs i < j")
            self._check_rhs(rhs, i, f"conjugate relation {self.generators[j]}^{self.generators[i]}")

    def _check_rhs(self, rhs: NormalForm, first: int, what: str) -> None:
        """rhs may only mention generators with index >= first"""
        if len(rhs) != self.k:
            raise ValueError(f"{what}: right-hand side has the wrong length")
        for l, (a, e) in enumerate(zip(rhs, self.relative_orders)):
            if not 0 <= a < e:
                raise ValueError(f"{what}: exponent {a} of {self.generators[l]} out of range")
            if a and l < first:
                raise ValueError(f"{what}: mentions {self.generators[l]}, which comes too early")

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def order_bound(self) -> int:
        return prod(self.relative_orders)

    @cached_property
    def power_map(self) -> Dict[int, NormalForm]:
        return dict(self.powers)

    @cached_property
    def conjugate_map(self) -> Dict[Tuple[int, int], NormalForm]:
        return dict(self.conjugates)

    def power_rhs(self, i: int) -> NormalForm:
        return self.power_map.get(i, (0,) * self.k)

    def conjugate_rhs(self, i: int, j: int) -> NormalForm:
        return self.conjugate_map.get((i, j), unit_vector(self.k, j))

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    @classmethod
    def from_relations(
        cls,
        generators: Sequence[str],
        orders: Sequence[int],
        powers: Optional[Mapping[str, str]] = None,
        conjugates: Optional[Mapping[Tuple[str, str], str]] = None
    ) -> "PcPresentation":
        """
        Build a presentation from word strings

        Args:
            generators: Generator names in pc order
            orders: Relative orders
            powers: {"x": "y^4"} means x^e_x = y^4
            conjugates: {("y", "x"): "y*u"} means x^-1 y x = y*u

        Returns:
            PcPresentation

        Raises:
            ParseError: a right-hand side is not a normal-form word
        """
        skeleton = cls(tuple(generators), tuple(int(e) for e in orders))
        power_items = []
        for name, word in (powers or {}).items():
            power_items.append((skeleton.index(name), normal_form_word(skeleton, word)))
        conj_items = []
        for (target, by), word in (conjugates or {}).items():
            i, j = skeleton.index(by), skeleton.index(target)
            if i >= j:
                raise ParseError(f"conjugate relation {target}^{by}: {by} must come before {target}")
            conj_items.append(((i, j), normal_form_word(skeleton, word)))
        return cls(skeleton.generators, skeleton.relative_orders, tuple(sorted(power_items)), tuple(sorted(conj_items)))

    def direct_sum(self, other: "PcPresentation") -> "PcPresentation":
        """Presentation of the direct product, other's generators after ours"""
        names = list(self.generators)
        for name in other.generators:
            candidate = name
            while candidate in names:
                candidate += "_"
            names.append(candidate)
        k, m = self.k, other.k

        def left(nf):
            return tuple(nf) + (0,) * m

        def right(nf):
            return (0,) * k + tuple(nf)

        powers = [(i, left(rhs)) for i, rhs in self.powers]
        powers += [(k + i, right(rhs)) for i, rhs in other.powers]
        conjugates = [(ij, left(rhs)) for ij, rhs in self.conjugates]
        conjugates += [((k + i, k + j), right(rhs)) for (i, j), rhs in other.conjugates]
        return PcPresentation(
            tuple(names), self.relative_orders + other.relative_orders, tuple(powers), tuple(conjugates)
        )


def unit_vector(k: int, j: int) -> NormalForm:
    return tuple(1 if l == j else 0 for l in range(k))


_LETTER = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?")


def parse_word(pres: PcPresentation, text: str) -> List[Letter]:
    """
    Parse "x*y^-1*u^3" into signed letters [(index, exponent), ...]

    "1" (or an empty string) is the empty word.
    """
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "1"):
        return []
    letters = []
    pos = 0
    for piece in compact.split("*"):
        match = _LETTER.fullmatch(piece)
        if not match:
            raise ParseError(f"bad factor {piece!r} in word {text!r}", 1, pos + 1)
        if match.group(1) not in pres.generators:
            raise UnknownGenerator(f"unknown generator {match.group(1)!r} in word {text!r}", 1, pos + 1)
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if exponent:
            letters.append((pres.index(match.group(1)), exponent))
        pos += len(piece) + 1
    return letters


def normal_form_word(pres: PcPresentation, text: str) -> NormalForm:
    """Exponent vector of a word already written in normal-form order"""
    exps = [0] * pres.k
    last = -1
    for i, a in parse_word(pres, text):
        if i < last or a < 0:
            raise ParseError(f"relation right-hand side {text!r} is not a normal-form word")
        exps[i] += a
        last = i
    for i, a in enumerate(exps):
        if a >= pres.relative_orders[i]:
            raise ParseError(f"exponent of {pres.generators[i]} in {text!r} is not reduced")
    return tuple(exps)


def nf_letters(nf: NormalForm) -> List[int]:
    """Positive letters of a normal form, in order"""
    return [l for l, a in enumerate(nf) for _ in range(a)]


# ============================================================
# COLLECTION
# ============================================================

class Collector:
    """
    Collection from the left over one presentation

    The collected prefix is an exponent vector; pending letters sit on a
    stack. Multiplying the prefix by g_j moves g_j past the tail
    g_{j+1}^a_{j+1} ... by conjugating each tail letter with g_j.
    """

    def __init__(self, pres: PcPresentation, budget: Optional[int] = None):
        self.pres = pres
        self.budget = budget or get_settings().collect_budget
        self._conjugate_letters = {
            (i, j): nf_letters(pres.conjugate_rhs(i, j))
            for i in range(pres.k) for j in range(i + 1, pres.k)
        }
        self._power_letters = [nf_letters(pres.power_rhs(i)) for i in range(pres.k)]
        self._inverse_letters: Dict[int, List[int]] = {}

    def run(self, start: NormalForm, pending: Sequence[int]) -> NormalForm:
        exps = list(start)
        k = self.pres.k
        orders = self.pres.relative_orders
        stack = list(reversed(pending))
        steps = 0
        while stack:
            steps += 1
            if steps > self.budget:
                raise CollectionBudgetExceeded(
                    f"no normal form after {self.budget} rewrite steps; the presentation is malformed"
                )
            j = stack.pop()
            tail = [(l, exps[l]) for l in range(j + 1, k) if exps[l]]
            if tail:
                moved: List[int] = []
                for l, a in tail:
                    exps[l] = 0
                    moved.extend(self._conjugate_letters[(j, l)] * a)
                stack.extend(reversed(moved))
                stack.append(j)
                continue
            exps[j] += 1
            if exps[j] == orders[j]:
                exps[j] = 0
                stack.extend(reversed(self._power_letters[j]))
        return tuple(exps)

    def inverse_letters(self, i: int) -> List[int]:
        """Positive letters equal to g_i^-1: g_i^(e_i - 1) times the inverse of w_i"""
        if i not in self._inverse_letters:
            letters = [i] * (self.pres.relative_orders[i] - 1)
            for l in reversed(self._power_letters[i]):
                letters.extend(self.inverse_letters(l))
            nf = self.run((0,) * self.pres.k, letters)
            self._inverse_letters[i] = nf_letters(nf)
        return self._inverse_letters[i]

    def positive(self, word: Sequence[Letter]) -> List[int]:
        letters: List[int] = []
        for i, a in word:
            if not 0 <= i < self.pres.k:
                raise UnknownGenerator(f"generator index {i} out of range")
            if a >= 0:
                letters.extend([i] * a)
            else:
                letters.extend(self.inverse_letters(i) * (-a))
        return letters

    def collect(self, word: Sequence[Letter], start: Optional[NormalForm] = None) -> NormalForm:
        return self.run(start or (0,) * self.pres.k, self.positive(word))


def collect(pres: PcPresentation, word: Union[str, Sequence[Letter]]) -> NormalForm:
    """
    Normal form of a word

    Args:
        pres: Presentation
        word: "y*x" or [(1, 1), (0, 1)] (generator index, signed exponent)

    Returns:
        Exponent vector (a_1, ..., a_k)

    Raises:
        UnknownGenerator: the word mentions an undeclared generator
        CollectionBudgetExceeded: the rewrite budget ran out
    """
    if isinstance(word, str):
        word = parse_word(pres, word)
    return Collector(pres).collect(word)


# ============================================================
# FINITE GROUPS
# ============================================================

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    Fully materialized finite group

    Elements are indices 0 .. n-1. For groups built from a presentation the
    index order is the lexicographic order of normal forms, so index 0 is
    the identity and serialized tables are byte-stable.
    """

    table: np.ndarray
    identity: int = 0
    generators: Tuple[int, ...] = ()
    name: str = "G"
    family: str = "table"
    presentation: Optional[PcPresentation] = None
    elements: Tuple[NormalForm, ...] = ()
    verification: str = "full"
    params: Tuple[Tuple[str, object], ...] = field(default=())

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    @classmethod
    def from_table(
        cls,
        table,
        name: str = "G",
        generators: Optional[Sequence[int]] = None,
        family: str = "table"
    ) -> "FiniteGroup":
        """
        Wrap a raw Cayley table

        Raises:
            ConsistencyError: not a Latin square or no identity
        """
        table = np.array(table, dtype=TABLE_DTYPE)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise ConsistencyError("Cayley table must be a non-empty square array")
        if not is_latin_square(table):
            raise ConsistencyError(f"{name}: table is not a Latin square")
        n = table.shape[0]
        arange = np.arange(n)
        rows = np.flatnonzero((table == arange).all(axis=1))
        if len(rows) != 1 or not (table[:, rows[0]] == arange).all():
            raise ConsistencyError(f"{name}: table has no two-sided identity")
        table.setflags(write=False)
        group = cls(table=table, identity=int(rows[0]), name=name, family=family, verification="table")
        if generators is None:
            generators = _greedy_generators(group)
        return replace(group, generators=tuple(int(g) for g in generators))

    # -- element arithmetic --

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmax(self.table == self.identity, axis=1).astype(TABLE_DTYPE)
        inv.setflags(write=False)
        return inv

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, g: int, k: int) -> int:
        k %= self.element_order(g)
        result = self.identity
        for _ in range(k):
            result = self.mul(result, g)
        return result

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b"""
        return int(self.commutator_table[a, b])

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        arange = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        current = arange.copy()
        for k in range(1, n + 1):
            hit = (current == self.identity) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            current = self.table[current, arange]
        orders.setflags(write=False)
        return orders

    def element_order(self, g: int) -> int:
        return int(self.element_orders[g])

    @cached_property
    def commutator_table(self) -> np.ndarray:
        """C[a, b] = [a, b]"""
        inv = self.inverse
        inverse_products = self.table[np.ix_(inv, inv)]
        table = self.table[inverse_products, self.table]
        table.setflags(write=False)
        return table

    @cached_property
    def conjugation_table(self) -> np.ndarray:
        """J[g, a] = a^-1 g a"""
        n = self.order
        left = self.table[self.inverse[np.newaxis, :], np.arange(n)[:, np.newaxis]]
        table = self.table[left, np.arange(n)[np.newaxis, :]]
        table.setflags(write=False)
        return table

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    # -- normal forms --

    @cached_property
    def strides(self) -> Tuple[int, ...]:
        orders = self.presentation.relative_orders if self.presentation else ()
        return tuple(prod(orders[j + 1:]) for j in range(len(orders)))

    def index_of(self, nf: Sequence[int]) -> int:
        """Element index of a normal form"""
        if not self.presentation:
            raise ValueError(f"{self.name} has no presentation")
        return int(sum(a * s for a, s in zip(nf, self.strides)))

    def element(self, name: str) -> int:
        """Element index of a word in the generator names, e.g. "y^4*u" """
        if not self.presentation:
            raise ValueError(f"{self.name} has no presentation")
        return self.word_value(parse_word(self.presentation, name))

    def word_value(self, word: Sequence[Letter]) -> int:
        """Evaluate a word of (pc generator position, exponent) letters in the table"""
        gens = self.pc_generators
        result = self.identity
        for i, a in word:
            result = self.mul(result, self.power(gens[i], a))
        return result

    @cached_property
    def pc_generators(self) -> Tuple[int, ...]:
        if self.presentation:
            return tuple(self.strides)
        return self.generators

    def label(self, g: int) -> str:
        """Normal-form text of an element ("1" for the identity)"""
        if not self.presentation:
            return f"e{g}"
        nf = self.elements[g]
        parts = [
            name if a == 1 else f"{name}^{a}"
            for name, a in zip(self.presentation.generators, nf) if a
        ]
        return "*".join(parts) or "1"


def _greedy_generators(G: FiniteGroup) -> Tuple[int, ...]:
    """Elements in index order that enlarge the generated subgroup"""
    gens: List[int] = []
    span = np.zeros(G.order, dtype=bool)
    span[G.identity] = True
    for g in range(G.order):
        if span.all():
            break
        if not span[g]:
            gens.append(g)
            span = closure_mask(G, gens)
    return tuple(gens)


def closure_mask(G: FiniteGroup, gens: Sequence[int]) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    gens = list(gens)
    if not gens:
        return mask
    frontier = np.array([G.identity])
    while frontier.size:
        images = G.table[np.ix_(frontier, gens)].ravel()
        fresh = np.unique(images[~mask[images]])
        mask[fresh] = True
        frontier = fresh
    return mask


def is_latin_square(table: np.ndarray) -> bool:
    n = table.shape[0]
    arange = np.arange(n)
    return bool((np.sort(table, axis=1) == arange).all() and (np.sort(table, axis=0) == arange[:, None]).all())


def check_consistency(G: FiniteGroup, full: bool = True) -> bool:
    """
    Check that the table defines a group

    Args:
        G: Group to check
        full: Scan all n^3 triples; otherwise only triples with a generator
            in the second or third place

    Returns:
        True iff the table is a Latin square and the scanned triples associate
    """
    table = G.table
    if not is_latin_square(table):
        return False
    if full:
        for a in range(G.order):
            if not np.array_equal(table[table[a]], table[a][table]):
                return False
        return True
    for g in G.generators:
        column = table[:, g]
        if not np.array_equal(column[table], table[:, column]):
            return False
        if not np.array_equal(table[column], table[:, table[g]]):
            return False
    return True


def build_group(
    pres: PcPresentation,
    name: Optional[str] = None,
    family: str = "presentation",
    full_scan: Optional[bool] = None,
    params: Tuple[Tuple[str, object], ...] = ()
) -> FiniteGroup:
    """
    Materialize the group of a presentation

    Args:
        pres: Presentation
        name: Display name
        family: Family tag
        full_scan: Force (True) or skip (False) the n^3 associativity scan;
            by default it runs when n <= full_scan_cap
        params: Constructor parameters recorded on the group

    Returns:
        FiniteGroup of order prod(e_i)

    Raises:
        CapExceeded: prod(e_i) > group_cap
        ConsistencyError: the presentation does not define a group of that order
    """
    settings = get_settings()
    n = pres.order_bound
    if n > settings.group_cap:
        raise CapExceeded(f"presentation order {n} exceeds group cap {settings.group_cap}")
    name = name or "G"

    collector = Collector(pres, settings.collect_budget)
    elements = tuple(itertools.product(*(range(e) for e in pres.relative_orders)))
    strides = [prod(pres.relative_orders[j + 1:]) for j in range(pres.k)]

    right = np.empty((n, pres.k), dtype=TABLE_DTYPE)
    for idx, nf in enumerate(elements):
        for j in range(pres.k):
            product = collector.run(nf, [j])
            right[idx, j] = sum(a * s for a, s in zip(product, strides))

    table = np.empty((n, n), dtype=TABLE_DTYPE)
    table[:, 0] = np.arange(n)
    for b in range(1, n):
        nf = elements[b]
        m = max(l for l, a in enumerate(nf) if a)
        table[:, b] = right[table[:, b - strides[m]], m]
    table.setflags(write=False)

    group = FiniteGroup(
        table=table,
        identity=0,
        generators=tuple(strides),
        name=name,
        family=family,
        presentation=pres,
        elements=elements,
        params=params,
    )
    if full_scan is None:
        full_scan = n <= settings.full_scan_cap
    if not check_consistency(group, full=full_scan):
        raise ConsistencyError(f"{name}: presentation does not define a group of order {n}")
    verification = "full" if full_scan else "partial"
    logger("pcgroup").debug(f"built {name} of order {n} ({verification}ly verified)")
    return replace(group, verification=verification)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    """
    Direct product with componentwise multiplication

    Element (g, h) has index g * |H| + h, which keeps lexicographic
    normal-form order when both factors come from presentations.

    Raises:
        CapExceeded: |G||H| > group_cap
    """
    cap = get_settings().group_cap
    n, m = G.order, H.order
    if n * m > cap:
        raise CapExceeded(f"product order {n * m} exceeds group cap {cap}")
    table = (G.table[:, None, :, None].astype(np.int64) * m + H.table[None, :, None, :]).reshape(n * m, n * m)
    table = table.astype(TABLE_DTYPE)
    table.setflags(write=False)
    generators = tuple(g * m + H.identity for g in G.generators) + tuple(G.identity * m + h for h in H.generators)
    presentation = None
    elements: Tuple[NormalForm, ...] = ()
    if G.presentation and H.presentation:
        presentation = G.presentation.direct_sum(H.presentation)
        elements = tuple(a + b for a in G.elements for b in H.elements)
    return FiniteGroup(
        table=table,
        identity=G.identity * m + H.identity,
        generators=generators,
        name=name or f"{G.name}x{H.name}",
        family="product",
        presentation=presentation,
        elements=elements,
        verification="product",
        params=(("factors", (G.name, H.name)),),
    )


# ============================================================
# FAMILIES
# ============================================================

def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"{p!r} is not a prime")


def _prime_power(n: int) -> Tuple[int, int]:
    factors = factorint(n)
    if len(factors) != 1:
        raise ValueError(f"{n} is not a prime power")
    (p, e), = factors.items()
    return int(p), int(e)


def cyclic(n: int) -> FiniteGroup:
    """C_n; cyclic(1) is the trivial group"""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclic order must be a positive integer, got {n!r}")
    pres = PcPresentation(("a",), (n,)) if n > 1 else PcPresentation((), ())
    return build_group(pres, name=f"C{n}", family="cyclic", params=(("n", n),))


def abelian_from(U: FgAbelian) -> FiniteGroup:
    """Finite abelian group with one generator per primary cyclic factor"""
    if U.free_rank:
        raise ValueError("abelian_from needs a finite descriptor (free rank 0)")
    orders = tuple(p**e for p, exps in U.primary for e in exps)
    pres = PcPresentation(tuple(f"a{i + 1}" for i in range(len(orders))), orders)
    name = "x".join(f"C{n}" for n in orders) or "C1"
    return build_group(pres, name=name, family="abelian", params=(("descriptor", str(U)),))


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order (2m, m >= 2): s^2 = 1, s^-1 r s = r^-1"""
    if not isinstance(order, int) or order < 4 or order % 2:
        raise ValueError(f"dihedral order must be even and >= 4, got {order!r}")
    m = order // 2
    pres = PcPresentation(("s", "r"), (2, m), conjugates=(((0, 1), (0, m - 1)),))
    return build_group(pres, name=f"D{order}", family="dihedral", params=(("order", order),))


def quaternion_generalized(order: int) -> FiniteGroup:
    """Generalized quaternion group of order 2^n, n >= 3: x^2 = y^(2^(n-2)), x^-1 y x = y^-1"""
    p, n = _prime_power(order) if isinstance(order, int) and order > 1 else (0, 0)
    if p != 2 or n < 3:
        raise ValueError(f"quaternion order must be a power of 2 that is >= 8, got {order!r}")
    half = order // 2
    pres = PcPresentation(
        ("x", "y"),
        (2, half),
        powers=((0, (0, half // 2)),),
        conjugates=(((0, 1), (0, half - 1)),),
    )
    return build_group(pres, name=f"Q{order}", family="quaternion", params=(("order", order),))


quaternion = quaternion_generalized


def extraspecial(p: int, order: int, kind: str = "+") -> FiniteGroup:
    """
    Extraspecial group of order p^(1+2m)

    Generators a_1, b_1, ..., a_m, b_m, z with [a_i, b_i] = z central.
    kind "+" has all other generator powers trivial (exponent p for odd p,
    D_8 central products for p = 2); kind "-" sets a_1^p = z (exponent p^2
    for odd p) and for p = 2 also b_1^2 = z (Q_8 central product).
    """
    _check_prime(p)
    if kind not in ("+", "-"):
        raise ValueError(f"kind must be '+' or '-', got {kind!r}")
    q, e = _prime_power(order) if isinstance(order, int) and order > 1 else (0, 0)
    if q != p or e < 3 or e % 2 == 0:
        raise ValueError(f"extraspecial order must be {p}^(1+2m), got {order!r}")
    m = (e - 1) // 2
    names = tuple(name for i in range(1, m + 1) for name in (f"a{i}", f"b{i}")) + ("z",)
    k = len(names)
    z = unit_vector(k, k - 1)
    conjugates = []
    for i in range(m):
        b_times_z_inverse = tuple(1 if l == 2 * i + 1 else (p - 1 if l == k - 1 else 0) for l in range(k))
        conjugates.append(((2 * i, 2 * i + 1), b_times_z_inverse))
    powers = []
    if kind == "-":
        powers.append((0, z))
        if p == 2:
            powers.append((1, z))
    pres = PcPresentation(names, (p,) * k, tuple(powers), tuple(conjugates))
    return build_group(pres, name=f"E{order}{kind}", family="extraspecial",
                       params=(("p", p), ("order", order), ("kind", kind)))


def heisenberg(p: int, k: int = 1) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/p^k: x = I+E12, y = I+E23, z = [x, y] = I+E13"""
    _check_prime(p)
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    q = p**k
    pres = PcPresentation(("x", "y", "z"), (q, q, q), conjugates=(((0, 1), (0, 1, q - 1)),))
    return build_group(pres, name=f"Heis({p},{k})", family="heisenberg", params=(("p", p), ("k", k)))


def paper_example_32_presentation() -> PcPresentation:
    """
    <x, y | x^2 y^-4 = [x,y,x] = [x,y,y] y^-4 = 1> with u = [x, y]

    Pc generators x, y, u of relative orders 2, 8, 2. [u, y] = y^4 is
    central, so y^-1 u y = u y^4 = y^4 u.
    """
    return PcPresentation.from_relations(
        ("x", "y", "u"),
        (2, 8, 2),
        powers={"x": "y^4"},
        conjugates={("y", "x"): "y*u", ("u", "x"): "u", ("u", "y"): "y^4*u"},
    )


def paper_example_32() -> FiniteGroup:
    """Class-3 group of order 32 with |G/Z| = |G'|^2 and G' elementary abelian of order 4"""
    return build_group(paper_example_32_presentation(), name="Example32", family="paper-example-32")


FAMILIES = {
    "cyclic": cyclic,
    "abelian": abelian_from,
    "dihedral": dihedral,
    "quaternion": quaternion_generalized,
    "extraspecial": extraspecial,
    "heisenberg": heisenberg,
    "paper-example-32": paper_example_32,
}
