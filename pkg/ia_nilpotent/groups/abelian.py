# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Finitely generated abelian groups
=================================

Structure descriptors of finitely generated abelian groups, kept in primary
form (prime -> non-increasing exponents, plus a free rank), and the exact
Hom-functor formula between them.

Usage:
    from ia_nilpotent.groups.abelian import parse_descriptor, hom_structure

    U = parse_descriptor("C_4 x C_2")
    V = parse_descriptor("C_4")
    print(hom_structure(U, V))      # C_4 x C_2
"""

import re
from dataclasses import dataclass
from itertools import zip_longest
from math import prod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import factorint, isprime

from ia_nilpotent.exceptions import ParseError

Primary = Tuple[Tuple[int, Tuple[int, ...]], ...]


@dataclass(frozen=True)
class FgAbelian:
    """
    Descriptor of T x Z^free_rank with T = prod_p prod_j C_{p^alpha_pj}

    `primary` is a tuple of (p, exponents) pairs sorted by p, each exponent
    tuple non-increasing. Use make() to build from loose data.
    """

    free_rank: int = 0
    primary: Primary = ()

    def __post_init__(self):
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise ValueError(f"free rank must be a non-negative integer, got {self.free_rank!r}")
        last = 0
        for p, exps in self.primary:
            if p <= last or not isprime(p):
                raise ValueError(f"primary keys must be increasing primes, got {p!r}")
            last = p
            if not exps or any(e < 1 for e in exps) or list(exps) != sorted(exps, reverse=True):
                raise ValueError(f"exponents at {p} must be positive and non-increasing, got {exps!r}")

    @classmethod
    def make(cls, primary: Optional[Mapping[int, Iterable[int]]] = None, free_rank: int = 0) -> "FgAbelian":
        """Normalize a prime -> exponents map (any order, empty lists dropped)"""
        items = []
        for p, exps in sorted((primary or {}).items()):
            exps = tuple(sorted((int(e) for e in exps), reverse=True))
            if exps:
                items.append((int(p), exps))
        return cls(free_rank=int(free_rank), primary=tuple(items))

    @property
    def primary_map(self) -> Dict[int, Tuple[int, ...]]:
        return dict(self.primary)

    def exponents(self, p: int) -> Tuple[int, ...]:
        return self.primary_map.get(p, ())

    def __str__(self) -> str:
        return format_descriptor(self)


def trivial() -> FgAbelian:
    return FgAbelian()


def from_invariant_factors(
    factors: Sequence[int],
    free_rank: int = 0,
    refactor: bool = False
) -> FgAbelian:
    """
    Build a descriptor from cyclic factor orders

    Args:
        factors: Orders of cyclic factors, each >= 2
        free_rank: Number of Z factors
        refactor: Accept any list instead of a divisor chain

    Returns:
        FgAbelian in primary form
    """
    for n in factors:
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValueError(f"factors must be integers, got {n!r}")
        if n < 2:
            raise ValueError(f"factors must be >= 2, got {n}")
    if isinstance(free_rank, bool) or not isinstance(free_rank, int) or free_rank < 0:
        raise ValueError(f"free rank must be a non-negative integer, got {free_rank!r}")
    if not refactor:
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f"{list(factors)} is not an invariant-factor chain (pass refactor=True)")

    primary: Dict[int, List[int]] = {}
    for n in factors:
        for p, e in factorint(n).items():
            primary.setdefault(int(p), []).append(int(e))
    return FgAbelian.make(primary, free_rank)


def invariant_factors(U: FgAbelian) -> Tuple[List[int], int]:
    """
    Canonical divisor chain n_1 | n_2 | ... of the torsion part

    Returns:
        (factors in increasing order, free rank)
    """
    columns = zip_longest(*[[p**e for e in exps] for p, exps in U.primary], fillvalue=1)
    factors = [prod(column) for column in columns]
    return sorted(factors), U.free_rank


def is_isomorphic(U: FgAbelian, V: FgAbelian) -> bool:
    return U.primary == V.primary and U.free_rank == V.free_rank


def free_rank(U: FgAbelian) -> int:
    return U.free_rank


def torsion_rank(U: FgAbelian) -> int:
    """d(U): number of invariant factors of the torsion part"""
    return max((len(exps) for _, exps in U.primary), default=0)


def rank(U: FgAbelian) -> int:
    """r(U) = d(U) + rho(U)"""
    return torsion_rank(U) + U.free_rank


def primes(U: FgAbelian) -> Tuple[int, ...]:
    return tuple(p for p, _ in U.primary)


def exponent_of_torsion(U: FgAbelian) -> int:
    """exp(T(U)); 1 when the torsion part is trivial"""
    return prod(p ** exps[0] for p, exps in U.primary)


def order(U: FgAbelian) -> Optional[int]:
    """|U|, or None when U is infinite"""
    if U.free_rank:
        return None
    return prod(p**e for p, exps in U.primary for e in exps)


def torsion_part(U: FgAbelian) -> FgAbelian:
    return FgAbelian(0, U.primary)


def free_part(U: FgAbelian) -> FgAbelian:
    return FgAbelian(U.free_rank, ())


def is_homocyclic_at(U: FgAbelian, p: int) -> bool:
    exps = U.exponents(p)
    return len(set(exps)) <= 1


def is_homocyclic(U: FgAbelian) -> bool:
    """Free of finite rank, or finite with all invariant factors equal"""
    if U.free_rank:
        return not U.primary
    factors, _ = invariant_factors(U)
    return len(set(factors)) <= 1


def is_cyclic(U: FgAbelian) -> bool:
    return rank(U) <= 1


def direct_product(U: FgAbelian, V: FgAbelian) -> FgAbelian:
    primary: Dict[int, List[int]] = {}
    for W in (U, V):
        for p, exps in W.primary:
            primary.setdefault(p, []).extend(exps)
    return FgAbelian.make(primary, U.free_rank + V.free_rank)


def power(U: FgAbelian, n: int) -> FgAbelian:
    """U^n, the direct product of n copies; U^0 is trivial"""
    if n < 0:
        raise ValueError(f"power must be non-negative, got {n}")
    return FgAbelian.make({p: list(exps) * n for p, exps in U.primary}, U.free_rank * n)


def hom_structure(U: FgAbelian, V: FgAbelian) -> FgAbelian:
    """
    Descriptor of Hom(U, V)

    Hom(T(U), T(V)) x T(V)^rho(U) x Z^(rho(U) rho(V)). The torsion-torsion
    part is the product of C_{p^min(a, b)} over same-prime pairs of cyclic
    factors; Hom(torsion, free) is trivial.

    Args:
        U: Source descriptor
        V: Target descriptor

    Returns:
        FgAbelian of Hom(U, V) under pointwise addition
    """
    v_map = V.primary_map
    primary: Dict[int, List[int]] = {}
    for p, u_exps in U.primary:
        v_exps = v_map.get(p, ())
        primary[p] = [min(a, b) for a in u_exps for b in v_exps]
    for p, v_exps in V.primary:
        primary.setdefault(p, []).extend(list(v_exps) * U.free_rank)
    return FgAbelian.make(primary, U.free_rank * V.free_rank)


def hom_order(U: FgAbelian, V: FgAbelian) -> Optional[int]:
    """|Hom(U, V)|, or None when it is infinite"""
    return order(hom_structure(U, V))


# ============================================================
# TEXTUAL SYNTAX
# ============================================================

_TERM = re.compile(r"Z(?:\^(\d+))?|C_?(?:\{(\d+)\}|(\d+))(?:\^(\d+))?|trivial|1")


def parse_descriptor(text: str) -> FgAbelian:
    """
    Parse "Z^b x C_{n1} x C_n2 ..." (whitespace-insensitive)

    Factors may be any orders; they are refactored into primary form.
    "1" or "trivial" is the trivial group.

    Raises:
        ParseError: with the column of the first bad character
    """
    # original index of each non-blank character
    kept = [i for i, ch in enumerate(text) if not ch.isspace()]
    compact = "".join(text[i] for i in kept)
    if not compact:
        raise ParseError("empty descriptor", 1, 1)

    def column(pos: int) -> int:
        return kept[pos] + 1 if pos < len(kept) else len(text) + 1

    factors: List[int] = []
    rank_ = 0
    pos = 0
    while True:
        match = _TERM.match(compact, pos)
        if not match:
            raise ParseError(f"expected Z, C_n or 1 in {text!r}", 1, column(pos))
        token = match.group(0)
        if token.startswith("Z"):
            rank_ += int(match.group(1) or 1)
        elif token.startswith("C"):
            n = int(match.group(2) or match.group(3))
            count = int(match.group(4) or 1)
            if n < 1:
                raise ParseError(f"cyclic factor of order {n}", 1, column(pos))
            if n > 1:
                factors.extend([n] * count)
        pos = match.end()
        if pos == len(compact):
            break
        if compact[pos] != "x":
            raise ParseError(f"expected 'x' in {text!r}", 1, column(pos))
        pos += 1
    return from_invariant_factors(factors, rank_, refactor=True)


def format_descriptor(U: FgAbelian) -> str:
    """Emit "Z^b x C_nk x ... x C_n1", largest invariant factor first; "1" if trivial"""
    factors, rho = invariant_factors(U)
    parts = [f"Z^{rho}"] if rho else []
    parts.extend(f"C_{n}" for n in reversed(factors))
    return " x ".join(parts) or "1"
