# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Theorem checks
==============

Executable versions of the structural results on IA(G), IA(G)*, Aut_c(G)
and the Schur-type bounds. Every iff-shaped statement is checked along two
independent paths: a predicate evaluated on the recognized abelian
sections (G/Z, G/G', G'), and a direct computation of the automorphism
sets. A verdict is consistent when both paths agree.

The suite runs selected checks over a corpus of groups and produces one
theorem_record per (group, check) pair.

Usage:
    from ia_nilpotent.groups.pcgroup import quaternion_generalized
    from ia_nilpotent.groups.theorems import classify_thm21_finite, run_suite

    verdict = classify_thm21_finite(quaternion_generalized(8))
    verdict.predicate_holds, verdict.direct_check_holds   # True, True

    report = run_suite([quaternion_generalized(8)], which="all")
    report["ok"]                                          # True
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import multiplicity
from tqdm import tqdm

from ia_nilpotent import hooks
from ia_nilpotent.config.settings import Settings, get_settings, use_settings
from ia_nilpotent.exceptions import (
    CapExceeded,
    InadmissibleTriple,
    NotAbelian,
    NotApplicable,
    NotClass2,
    NotNilpotent,
    PreconditionError,
    TheoremViolation,
)
from ia_nilpotent.groups import abelian
from ia_nilpotent.groups.abelian import FgAbelian, format_descriptor
from ia_nilpotent.groups.autos import (
    AutSet,
    aut_c,
    ia,
    ia_bruteforce,
    ia_class2,
    ia_star,
    ia_star_class2,
    inner,
    set_equal,
    structure_of,
)
from ia_nilpotent.groups.doctype import Record, make_record
from ia_nilpotent.groups.group_file import group_to_dict
from ia_nilpotent.groups.invariants import (
    StructureTriple,
    abelian_structure,
    abelianization,
    center,
    central_quotient,
    coclass,
    commutator_set,
    commutator_with,
    derived_subgroup,
    frattini_subgroup,
    generated,
    is_nilpotent,
    is_p_group,
    minimal_generating_tuples,
    minimal_generator_count,
    nilpotency_class,
    structure_triple,
)
from ia_nilpotent.groups.pcgroup import FiniteGroup
from ia_nilpotent.utils import get_attr, log_error, logger

STATUSES = ("pass", "fail", "not-applicable", "violation")


# ============================================================
# SHARED GROUP FACTS
# ============================================================

class GroupFacts:
    """
    Lazily computed invariants and automorphism sets of one group

    Several checks need the same sets; facts_for() hands out one instance
    per group so each set is computed once.
    """

    def __init__(self, group: FiniteGroup):
        self.group = group

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.group)

    @cached_property
    def nilpotency_class(self) -> Optional[int]:
        return nilpotency_class(self.group) if self.nilpotent else None

    def require_class2(self) -> None:
        if not self.nilpotent:
            raise NotNilpotent(f"{self.group.name} is not nilpotent")
        if self.nilpotency_class > 2:
            raise NotClass2(f"{self.group.name} has nilpotency class {self.nilpotency_class}")

    @cached_property
    def triple(self) -> StructureTriple:
        self.require_class2()
        return structure_triple(self.group)

    @cached_property
    def center(self):
        return center(self.group)

    @cached_property
    def derived(self):
        return derived_subgroup(self.group)

    @cached_property
    def commutators(self):
        return commutator_set(self.group)

    @cached_property
    def central_quotient(self):
        return central_quotient(self.group)

    @cached_property
    def inner(self) -> AutSet:
        return inner(self.group)

    @cached_property
    def ia(self) -> AutSet:
        return ia(self.group)

    @cached_property
    def ia_hom(self) -> AutSet:
        return ia_class2(self.group)

    @cached_property
    def ia_bruteforce(self) -> AutSet:
        return ia_bruteforce(self.group)

    @cached_property
    def ia_star(self) -> AutSet:
        return ia_star(self.group)

    @cached_property
    def ia_star_hom(self) -> AutSet:
        return ia_star_class2(self.group)

    @cached_property
    def aut_c(self) -> AutSet:
        return aut_c(self.group)


@lru_cache(maxsize=32)
def facts_for(G: FiniteGroup) -> GroupFacts:
    return GroupFacts(G)


def _same_structure(S: AutSet, T: AutSet) -> bool:
    """Isomorphism of two automorphism sets, judged by invariant factors"""
    s, t = structure_of(S), structure_of(T)
    if isinstance(s, FgAbelian) and isinstance(t, FgAbelian):
        return abelian.is_isomorphic(s, t)
    return False


# ============================================================
# CLASSIFICATION OF IA(G) = Inn(G)
# ============================================================

@dataclass(frozen=True)
class ClassificationVerdict:
    """
    Outcome of one iff-shaped classification

    `one_directional` marks user-supplied triples, for which only
    "predicate implies direct check" is asserted.
    """

    case: str
    predicate_holds: bool
    direct_check_holds: bool
    witness: Optional[str] = None
    isomorphic: Optional[bool] = None
    triple: Optional[str] = None
    one_directional: bool = False

    @property
    def consistent(self) -> bool:
        if self.one_directional:
            return self.direct_check_holds or not self.predicate_holds
        return self.predicate_holds == self.direct_check_holds

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["consistent"] = self.consistent
        return data


def check_admissible(triple: StructureTriple) -> None:
    """
    Constraints every (G/Z, G/G', G') triple of a class-2 group satisfies

    Raises:
        InadmissibleTriple: naming the violated constraint
    """
    A, B, C = triple.center_quotient, triple.abelianization, triple.derived
    if A.free_rank > B.free_rank:
        raise InadmissibleTriple("free-rank", f"rho(G/Z) = {A.free_rank} exceeds rho(G/G') = {B.free_rank}")
    if abelian.exponent_of_torsion(A) != abelian.exponent_of_torsion(C):
        raise InadmissibleTriple(
            "torsion-exponent",
            f"exp T(G/Z) = {abelian.exponent_of_torsion(A)} but exp T(G') = {abelian.exponent_of_torsion(C)}",
        )
    if (A.free_rank == 0) != (C.free_rank == 0):
        raise InadmissibleTriple("finiteness", "G/Z is finite exactly when G' is finite")
    if B.free_rank == 0:
        # G/Z is then a quotient of the finite group G/G'
        for p, alpha in A.primary:
            beta = B.exponents(p)
            if not beta:
                raise InadmissibleTriple("prime-support", f"{p} divides |T(G/Z)| but not |G/G'|")
            if len(alpha) > len(beta) or any(a > b for a, b in zip(alpha, beta)):
                raise InadmissibleTriple("quotient", f"{p}-part of G/Z is not a quotient of that of G/G'")


def finite_case_predicate(A: FgAbelian, B: FgAbelian, C: FgAbelian) -> Tuple[bool, Optional[str]]:
    """
    The prime-by-prime predicate for finite triples

    For every prime p of G/Z: both G/Z and G/G' have the same number of
    p-factors, G' is cyclic, and G/Z is homocyclic at p or, with r the
    first index where beta_r < alpha_1, alpha_j = alpha_1 below r and
    beta_j = alpha_j from r on.

    Returns:
        (holds, explanation of the first failed clause)
    """
    if not abelian.is_cyclic(C):
        return False, f"G' = {format_descriptor(C)} is not cyclic"
    for p, alpha in A.primary:
        beta = B.exponents(p)
        if len(alpha) != len(beta):
            return False, f"at p = {p}: G/Z has {len(alpha)} factors but G/G' has {len(beta)}"
        if abelian.is_homocyclic_at(A, p):
            continue
        r = next((j for j, b in enumerate(beta) if b < alpha[0]), None)
        if r is None:
            return False, f"at p = {p}: no factor of G/G' below p^{alpha[0]} and G/Z is not homocyclic"
        if any(a != alpha[0] for a in alpha[:r]):
            return False, f"at p = {p}: exponents {alpha[:r]} before index {r + 1} are not all {alpha[0]}"
        if any(a != b for a, b in zip(alpha[r:], beta[r:])):
            return False, f"at p = {p}: exponents from index {r + 1} differ ({alpha[r:]} vs {beta[r:]})"
    return True, None


def _case_of(triple: StructureTriple) -> str:
    A, B, C = triple.center_quotient, triple.abelianization, triple.derived
    a, b, c = A.free_rank, B.free_rank, C.free_rank
    if a == b == c == 0:
        return "finite"
    if not (A.primary or B.primary or C.primary):
        return "torsion-free"
    if c == 0:
        return "torsion-c"
    if not C.primary:
        return "mixed-b"
    return "mixed-d"


def classify_thm21_symbolic(triple: StructureTriple, star: bool = False) -> ClassificationVerdict:
    """
    Classify a structure triple without a group

    The predicate of the applicable case is compared with the Hom check
    Hom(G/G', G') ~ G/Z (or, with star, Hom(G/Z, G') ~ G/Z against G'
    cyclic).

    Args:
        triple: Descriptors of G/Z, G/G', G'
        star: Classify IA(G)* instead of IA(G)

    Returns:
        ClassificationVerdict

    Raises:
        InadmissibleTriple: no class-2 group has this triple
    """
    check_admissible(triple)
    A, B, C = triple.center_quotient, triple.abelianization, triple.derived
    one_directional = triple.source == "user-supplied"
    if star:
        holds = abelian.is_cyclic(C)
        direct = abelian.is_isomorphic(abelian.hom_structure(A, C), A)
        return ClassificationVerdict(
            "iii", holds, direct, None if holds else f"G' = {format_descriptor(C)} is not cyclic",
            triple=str(triple), one_directional=one_directional,
        )

    case = _case_of(triple)
    a, b, c = A.free_rank, B.free_rank, C.free_rank
    TA, TB, TC = (abelian.torsion_part(U) for U in (A, B, C))
    witness = None
    if case == "finite":
        holds, witness = finite_case_predicate(A, B, C)
    elif case in ("torsion-free", "mixed-b"):
        holds = c == 1 and a == b
        if not holds:
            witness = f"need G' ~ Z and rho(G/Z) = rho(G/G'), got c = {c}, a = {a}, b = {b}"
    elif case == "torsion-c":
        holds = not TB.primary and abelian.is_isomorphic(TA, abelian.power(TC, b))
        if not holds:
            witness = f"need G/G' torsion-free and T(G/Z) ~ T(G')^{b}"
    else:
        holds = c == 1 and a == b and not TB.primary and abelian.is_isomorphic(TA, abelian.power(TC, b))
        if not holds:
            witness = f"need G/G' torsion-free, G' ~ C x Z, rho equal and T(G/Z) ~ T(G')^{b}"
    direct = abelian.is_isomorphic(abelian.hom_structure(B, C), A)
    return ClassificationVerdict(case, holds, direct, witness, triple=str(triple), one_directional=one_directional)


def classify_thm21_finite(G: FiniteGroup) -> ClassificationVerdict:
    """
    IA(G) = Inn(G) on a finite group of class at most 2

    The predicate comes from the recognized triple; the direct check is
    set equality of the computed IA(G) and Inn(G). Whether the two sets
    are isomorphic is recorded separately.

    Raises:
        NotClass2: class 3 or more
        NotNilpotent: G is not nilpotent
        TheoremViolation: Inn(G) is not contained in IA(G)
    """
    facts = facts_for(G)
    triple = facts.triple
    holds, witness = finite_case_predicate(triple.center_quotient, triple.abelianization, triple.derived)
    I, A = facts.inner, facts.ia_hom
    if not I.issubset(A):
        raise TheoremViolation(f"{G.name}: an inner automorphism acts non-trivially on G/G'")
    equal = set_equal(I, A)
    isomorphic = _same_structure(A, I)
    if isomorphic and not equal:
        logger("theorems").warning(f"{G.name}: IA(G) ~ Inn(G) without IA(G) = Inn(G)")
    return ClassificationVerdict("finite", holds, equal, witness, isomorphic=isomorphic, triple=str(triple))


def check_thm21_iii(G: FiniteGroup) -> ClassificationVerdict:
    """IA(G)* ~ Inn(G) against G' cyclic, on a finite group of class at most 2"""
    facts = facts_for(G)
    triple = facts.triple
    holds = abelian.is_cyclic(triple.derived)
    S, I = facts.ia_star_hom, facts.inner
    isomorphic = _same_structure(S, I)
    return ClassificationVerdict(
        "iii", holds, isomorphic,
        None if holds else f"G' = {format_descriptor(triple.derived)} is not cyclic",
        isomorphic=isomorphic, triple=str(triple),
    )


def check_cor22(G: FiniteGroup) -> bool:
    """
    Aut_c(G) = Inn(G) when G' is cyclic

    Raises:
        NotApplicable: G' is not cyclic
    """
    facts = facts_for(G)
    if not abelian.is_cyclic(facts.triple.derived):
        raise NotApplicable(f"G' = {format_descriptor(facts.triple.derived)} is not cyclic")
    return set_equal(facts.aut_c, facts.inner)


def check_cor23(G: FiniteGroup) -> bool:
    """
    IA(G) = Inn(G) for a 2-generated group of class 2

    Raises:
        NotApplicable: d(G) != 2
    """
    facts = facts_for(G)
    facts.require_class2()
    d = minimal_generator_count(G)
    if d != 2:
        raise NotApplicable(f"{G.name} needs {d} generators, not 2")
    return set_equal(facts.ia, facts.inner)


def check_cor25(G: FiniteGroup) -> ClassificationVerdict:
    """
    The finite classification restricted to p-groups

    Raises:
        NotApplicable: G is not a p-group
    """
    if is_p_group(G) is None:
        raise NotApplicable(f"{G.name} is not a p-group")
    return classify_thm21_finite(G)


def check_lemma12(G: FiniteGroup) -> bool:
    """exp T(G/Z) = exp T(G') for class at most 2"""
    triple = facts_for(G).triple
    return abelian.exponent_of_torsion(triple.center_quotient) == abelian.exponent_of_torsion(triple.derived)


def counting_details(G: FiniteGroup) -> Dict[str, Any]:
    facts = facts_for(G)
    triple = facts.triple
    return {
        "ia_order": facts.ia_hom.order,
        "hom_abelianization_derived": abelian.hom_order(triple.abelianization, triple.derived),
        "ia_star_order": facts.ia_star_hom.order,
        "hom_center_quotient_derived": abelian.hom_order(triple.center_quotient, triple.derived),
        "ia_star_paths_agree": set_equal(facts.ia_star_hom, facts.ia_star),
    }


def check_lemma14(G: FiniteGroup) -> bool:
    """|IA(G)| = |Hom(G/G', G')|, |IA(G)*| = |Hom(G/Z, G')|, and both IA(G)* paths agree"""
    details = counting_details(G)
    return (
        details["ia_order"] == details["hom_abelianization_derived"]
        and details["ia_star_order"] == details["hom_center_quotient_derived"]
        and details["ia_star_paths_agree"]
    )


def check_oracle(G: FiniteGroup) -> bool:
    """
    The Hom construction and brute force give the same IA(G)

    Raises:
        CapExceeded: |G| above oracle_cap
    """
    facts = facts_for(G)
    facts.require_class2()
    return set_equal(facts.ia_hom, facts.ia_bruteforce)


def containment_details(G: FiniteGroup) -> Dict[str, Any]:
    facts = facts_for(G)
    chain = [facts.inner, facts.aut_c, facts.ia_star, facts.ia]
    return {
        "orders": {S.kind: S.order for S in chain},
        "nested": all(S.issubset(T) for S, T in zip(chain, chain[1:])),
        "closed": all(S.is_closed() for S in chain),
    }


def check_containments(G: FiniteGroup) -> bool:
    """Inn <= Aut_c <= IA* <= IA as sets, each closed under composition"""
    details = containment_details(G)
    return details["nested"] and details["closed"]


def check_symbolic_agreement(G: FiniteGroup) -> bool:
    """
    The symbolic and the computed classification of G agree

    Set equality and isomorphism can only differ in the direct checks; such
    a group is logged, not counted as disagreement.
    """
    symbolic = classify_thm21_symbolic(facts_for(G).triple)
    computed = classify_thm21_finite(G)
    if symbolic.predicate_holds != computed.predicate_holds:
        return False
    if symbolic.direct_check_holds != computed.direct_check_holds:
        if symbolic.direct_check_holds == computed.isomorphic:
            logger("theorems").warning(f"{G.name}: Hom check matches IA ~ Inn but not IA = Inn")
            return True
        return False
    return True


# ============================================================
# SCHUR-TYPE BOUNDS
# ============================================================

@dataclass
class SchurReport:
    """
    |G/Z| <= prod |[x_i, G]| <= |K(G)|^d <= |G'|^d over generating tuples of G/Z

    `derived_equality` is equality in |G/Z| <= |G'|^d and
    `commutator_equality` equality in |G/Z| <= |K(G)|^d.
    """

    group: str
    d: int
    center_index: int
    derived_order: int
    commutator_count: int
    products: List[int]
    commutator_bound: int
    derived_bound: int
    derived_equality: bool
    commutator_equality: bool
    chain_holds: bool
    derived_is_commutators: Optional[bool] = None
    inner_aut_c_ia_star_equal: Optional[bool] = None
    ia_star_order: Optional[int] = None
    ia_star_bound_holds: Optional[bool] = None
    violations: List[str] = field(default_factory=list)

    @property
    def product_range(self) -> Tuple[int, int]:
        return min(self.products), max(self.products)

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["products"] = sorted(set(self.products))
        data["tuples"] = len(self.products)
        return data


def schur_report(G: FiniteGroup) -> SchurReport:
    """
    Evaluate the Schur-type chain on sampled generating tuples of G/Z

    Representatives x_i in G of each tuple give prod |[x_i, G]|. When
    |G/Z| = |G'|^d the report also checks G' = K(G) and
    Inn(G) = Aut_c(G) = IA(G)*; the bound |IA(G)*| <= |G'|^d is checked
    whenever IA(G)* can be computed. Failures are listed in `violations`.
    """
    facts = facts_for(G)
    cq = facts.central_quotient
    Q = cq.group
    d = minimal_generator_count(Q)
    D, K = facts.derived, facts.commutators
    n_center, n_derived, k = Q.order, D.order, len(K)

    sizes = {q: len(commutator_with(G, cq.representatives[q])) for q in range(Q.order)}
    products = []
    for entries in minimal_generating_tuples(Q):
        product = 1
        for q in entries:
            product *= sizes[q]
        products.append(product)

    report = SchurReport(
        group=G.name,
        d=d,
        center_index=n_center,
        derived_order=n_derived,
        commutator_count=k,
        products=products,
        commutator_bound=k**d,
        derived_bound=n_derived**d,
        derived_equality=n_center == n_derived**d,
        commutator_equality=n_center == k**d,
        chain_holds=all(n_center <= P <= k**d for P in products) and k**d <= n_derived**d,
    )
    if not report.chain_holds:
        report.violations.append(f"chain broken: |G/Z| = {n_center}, products {report.product_range}, {k}^{d}, {n_derived}^{d}")

    try:
        S = facts.ia_star
    except CapExceeded as e:
        logger("theorems").info(f"{G.name}: IA(G)* not computed ({e})")
        S = None
    if S is not None:
        report.ia_star_order = S.order
        report.ia_star_bound_holds = S.order <= n_derived**d
        if not report.ia_star_bound_holds:
            report.violations.append(f"|IA(G)*| = {S.order} exceeds |G'|^d = {n_derived**d}")

    if report.derived_equality:
        report.derived_is_commutators = k == n_derived
        if not report.derived_is_commutators:
            report.violations.append(f"equality holds but |K(G)| = {k} < |G'| = {n_derived}")
        if S is not None:
            report.inner_aut_c_ia_star_equal = set_equal(facts.inner, facts.aut_c) and set_equal(facts.aut_c, S)
            if not report.inner_aut_c_ia_star_equal:
                report.violations.append("equality holds but Inn, Aut_c and IA* differ")
    return report


def check_thm35(G: FiniteGroup) -> bool:
    """G/Z ~ (G')^r(G/Z) exactly when G' is cyclic and G/Z homocyclic"""
    triple = facts_for(G).triple
    A, C = triple.center_quotient, triple.derived
    isomorphic = abelian.is_isomorphic(A, abelian.power(C, abelian.rank(A)))
    predicate = abelian.is_cyclic(C) and abelian.is_homocyclic(A)
    return isomorphic == predicate


def derived_equality_holds(G: FiniteGroup) -> bool:
    """|G/Z| = |G'|^d with d = d(G/Z)"""
    facts = facts_for(G)
    Q = facts.central_quotient.group
    return Q.order == facts.derived.order ** minimal_generator_count(Q)


def central_automorphism_count(G: FiniteGroup) -> int:
    """|Hom(G/G', Z(G))|, the automorphisms centralizing both G/Z and Z"""
    return abelian.hom_order(abelian_structure(abelianization(G).group), abelian_structure(facts_for(G).center))


def check_thm36(G: FiniteGroup, strict: bool = False) -> bool:
    """
    Co-class 2 p-groups with |G/Z| = |G'|^d have order p^4 or p^5

    Args:
        G: Group
        strict: Raise NotApplicable outside the hypotheses instead of
            returning True

    Raises:
        NotApplicable: with strict, when G is not a non-abelian co-class 2
            p-group with equality
    """
    p = is_p_group(G)
    reason = None
    if p is None:
        reason = f"{G.name} is not a p-group"
    elif G.is_abelian:
        reason = f"{G.name} is abelian"
    elif coclass(G) != 2:
        reason = f"{G.name} has co-class {coclass(G)}"
    elif not derived_equality_holds(G):
        reason = f"|G/Z| < |G'|^d for {G.name}"
    if reason:
        if strict:
            raise NotApplicable(reason)
        return True
    return multiplicity(p, G.order) in (4, 5)


def check_maximal_class(G: FiniteGroup) -> bool:
    """
    For a p-group of maximal class, |G/Z| = |G'|^d exactly when |G| = p^3

    Raises:
        NotApplicable: G is not a p-group of order >= p^3 and class n - 1
    """
    p = is_p_group(G)
    if p is None:
        raise NotApplicable(f"{G.name} is not a p-group")
    n = multiplicity(p, G.order)
    if n < 3 or nilpotency_class(G) != n - 1:
        raise NotApplicable(f"{G.name} is not of maximal class")
    return derived_equality_holds(G) == (n == 3)


# ============================================================
# THE CLASS-3 GROUP OF ORDER 32
# ============================================================

@dataclass(frozen=True)
class Fact:
    name: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class TheoremReport:
    group: str
    facts: List[Fact]

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.facts)

    @property
    def failed(self) -> List[str]:
        return [f.name for f in self.facts if not f.ok]

    def raise_for_failures(self) -> None:
        if self.failed:
            raise TheoremViolation(f"{self.group}: failed facts {', '.join(self.failed)}")

    def as_dict(self) -> Dict[str, Any]:
        return {f.name: {"expected": f.expected, "actual": f.actual} for f in self.facts}


def verify_example32(G: Optional[FiniteGroup] = None) -> TheoremReport:
    """
    Every stated fact about <x, y | x^2 y^-4 = [x,y,x] = [x,y,y] y^-4 = 1>

    Args:
        G: The group (built from its presentation when omitted)
    """
    from ia_nilpotent.groups.pcgroup import paper_example_32

    G = G or paper_example_32()
    x, y, u = (G.element(name) for name in ("x", "y", "u"))
    e = G.identity
    y2, y4 = G.power(y, 2), G.power(y, 4)
    Z, D = center(G), derived_subgroup(G)
    Q = central_quotient(G).group
    d = minimal_generator_count(Q)
    facts = [
        Fact("order", 32, G.order),
        Fact("nilpotency_class", 3, nilpotency_class(G)),
        Fact("order_x", 4, G.element_order(x)),
        Fact("order_y", 8, G.element_order(y)),
        Fact("order_u", 2, G.element_order(u)),
        Fact("u_is_commutator_x_y", True, G.commutator(x, y) == u),
        Fact("x2_equals_y4", True, G.power(x, 2) == y4),
        Fact("commutator_x_y_x_trivial", True, G.commutator(G.commutator(x, y), x) == e),
        Fact("commutator_x_y_y_equals_y4", True, G.commutator(G.commutator(x, y), y) == y4),
        Fact("center_is_y4", True, Z == generated(G, [y4])),
        Fact("center_order", 2, Z.order),
        Fact("frattini_is_y2_u", True, frattini_subgroup(G) == generated(G, [y2, u])),
        Fact("frattini_order", 8, frattini_subgroup(G).order),
        Fact("derived_order", 4, D.order),
        Fact("derived_elementary_abelian", True, D.is_elementary_abelian),
        Fact("derived_cyclic", False, D.is_cyclic),
        Fact("center_index", 16, Q.order),
        Fact("center_index_is_derived_squared", True, Q.order == D.order**2),
        Fact("generators_of_group", 2, minimal_generator_count(G)),
        Fact("generators_of_central_quotient", 2, d),
        Fact("derived_equality", True, Q.order == D.order**d),
        Fact("coclass", 2, coclass(G)),
        Fact("order_is_p5", True, multiplicity(2, G.order) == 5),
    ]
    return TheoremReport(G.name, facts)


# ============================================================
# SUITE
# ============================================================

@dataclass
class CheckOutcome:
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[str] = None
    violated: bool = False


def _verdict_outcome(verdict: ClassificationVerdict) -> CheckOutcome:
    witness = None
    if not verdict.consistent:
        witness = f"predicate {verdict.predicate_holds} but direct check {verdict.direct_check_holds}"
        if verdict.witness:
            witness += f" ({verdict.witness})"
    return CheckOutcome(verdict.consistent, verdict.as_dict(), witness)


def run_exponents(G: FiniteGroup) -> CheckOutcome:
    triple = facts_for(G).triple
    return CheckOutcome(check_lemma12(G), {
        "center_quotient_exponent": abelian.exponent_of_torsion(triple.center_quotient),
        "derived_exponent": abelian.exponent_of_torsion(triple.derived),
    })


def run_counting(G: FiniteGroup) -> CheckOutcome:
    return CheckOutcome(check_lemma14(G), counting_details(G))


def run_oracle(G: FiniteGroup) -> CheckOutcome:
    passed = check_oracle(G)
    facts = facts_for(G)
    return CheckOutcome(passed, {"hom_order": facts.ia_hom.order, "bruteforce_order": facts.ia_bruteforce.order})


def run_containments(G: FiniteGroup) -> CheckOutcome:
    return CheckOutcome(check_containments(G), containment_details(G))


def run_ia_inner(G: FiniteGroup) -> CheckOutcome:
    return _verdict_outcome(classify_thm21_finite(G))


def run_ia_star_inner(G: FiniteGroup) -> CheckOutcome:
    outcome = _verdict_outcome(check_thm21_iii(G))
    facts = facts_for(G)
    outcome.details["set_equal"] = set_equal(facts.ia_star_hom, facts.inner)
    return outcome


def run_symbolic(G: FiniteGroup) -> CheckOutcome:
    verdict = classify_thm21_symbolic(facts_for(G).triple)
    return CheckOutcome(check_symbolic_agreement(G), verdict.as_dict())


def run_cyclic_derived(G: FiniteGroup) -> CheckOutcome:
    passed = check_cor22(G)
    facts = facts_for(G)
    return CheckOutcome(passed, {"aut_c_order": facts.aut_c.order, "inner_order": facts.inner.order})


def run_two_generator(G: FiniteGroup) -> CheckOutcome:
    passed = check_cor23(G)
    facts = facts_for(G)
    return CheckOutcome(passed, {"ia_order": facts.ia.order, "inner_order": facts.inner.order})


def run_p_group(G: FiniteGroup) -> CheckOutcome:
    return _verdict_outcome(check_cor25(G))


def run_schur(G: FiniteGroup) -> CheckOutcome:
    report = schur_report(G)
    witness = "; ".join(report.violations) or None
    return CheckOutcome(not report.violations, report.as_dict(), witness, violated=bool(report.violations))


def run_central_quotient_power(G: FiniteGroup) -> CheckOutcome:
    triple = facts_for(G).triple
    return CheckOutcome(check_thm35(G), {
        "center_quotient": format_descriptor(triple.center_quotient),
        "derived": format_descriptor(triple.derived),
        "rank": abelian.rank(triple.center_quotient),
    })


def run_coclass_two(G: FiniteGroup) -> CheckOutcome:
    passed = check_thm36(G, strict=True)
    p = is_p_group(G)
    return CheckOutcome(passed, {
        "order": G.order,
        "p": p,
        "exponent": multiplicity(p, G.order),
        "central_automorphisms": central_automorphism_count(G),
    })


def run_maximal_class(G: FiniteGroup) -> CheckOutcome:
    passed = check_maximal_class(G)
    return CheckOutcome(passed, {"order": G.order, "derived_equality": derived_equality_holds(G)})


def run_example32(G: FiniteGroup) -> CheckOutcome:
    if G.family != "paper-example-32":
        raise NotApplicable(f"{G.name} is not the class-3 group of order 32")
    report = verify_example32(G)
    witness = f"failed facts: {', '.join(report.failed)}" if report.failed else None
    return CheckOutcome(report.ok, report.as_dict(), witness, violated=not report.ok)


def resolve_selectors(which: Union[str, Sequence[str]] = "all") -> List[str]:
    """
    Expand "all", a comma-separated string or a list into known selectors

    Raises:
        PreconditionError: unknown selector
    """
    if isinstance(which, str):
        which = [s.strip() for s in which.split(",") if s.strip()]
    if "all" in which:
        return list(hooks.theorem_checks)
    unknown = [s for s in which if s not in hooks.theorem_checks]
    if unknown:
        raise PreconditionError(f"unknown checks {unknown}; choose from {', '.join(hooks.theorem_checks)}")
    return list(dict.fromkeys(which))


def evaluate(selector: str, G: FiniteGroup, with_timings: bool = False) -> Record:
    """
    Run one check on one group and wrap the outcome as a theorem_record

    Precondition failures and caps become not-applicable records; failing
    records carry the serialized group.
    """
    check = get_attr(hooks.theorem_checks[selector])
    started = time.perf_counter()
    reproduction = None
    try:
        outcome = check(G)
    except TheoremViolation as e:
        status, details, witness = "violation", {}, str(e)
    except (PreconditionError, NotClass2, NotNilpotent, NotAbelian, CapExceeded, InadmissibleTriple) as e:
        status, details, witness = "not-applicable", {"reason": str(e)}, None
    else:
        status = "violation" if outcome.violated else "pass" if outcome.passed else "fail"
        details, witness = outcome.details, outcome.witness
    seconds = round(time.perf_counter() - started, 6) if with_timings else None
    if status in ("fail", "violation"):
        reproduction = group_to_dict(G)
        log_error(f"{status}{f' ({witness})' if witness else ''}", f"{G.name}/{selector}")
    return make_record(
        "theorem_record",
        group=G.name,
        check=selector,
        status=status,
        details=_plain(details),
        witness=witness,
        reproduction=reproduction,
        seconds=seconds,
    )


def _plain(value):
    """JSON-ready copy: numpy and sympy integers become int, tuples become lists"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    return int(value)


def _run_group(G: FiniteGroup, selectors: Sequence[str], settings: Settings, with_timings: bool) -> List[Record]:
    with use_settings(settings):
        return [evaluate(selector, G, with_timings) for selector in selectors]


def run_suite(
    corpus: Iterable[FiniteGroup],
    which: Union[str, Sequence[str]] = "all",
    jobs: Optional[int] = None,
    with_timings: bool = False,
    progress: bool = False
) -> Record:
    """
    Run checks over a corpus

    Args:
        corpus: Groups to check
        which: "all", a comma-separated string or a list of selectors
        jobs: Worker processes (default from settings); the report does not
            depend on it
        with_timings: Record seconds per check
        progress: Show a progress bar on stderr

    Returns:
        suite_report record with records sorted by (group, check)
    """
    selectors = resolve_selectors(which)
    corpus = list(corpus)
    settings = get_settings()
    jobs = jobs or settings.jobs
    records: List[Record] = []
    if jobs > 1 and len(corpus) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_group, G, selectors, settings, with_timings) for G in corpus]
            for future in tqdm(as_completed(futures), total=len(futures), desc="groups", disable=not progress):
                records.extend(future.result())
    else:
        for G in tqdm(corpus, desc="groups", disable=not progress):
            records.extend(_run_group(G, selectors, settings, with_timings))
    records.sort(key=lambda r: (r["group"], r["check"]))
    counts = {status: sum(r["status"] == status for r in records) for status in STATUSES}
    logger("theorems").info(f"suite over {len(corpus)} groups: {counts}")
    return make_record(
        "suite_report",
        ok=not (counts["fail"] or counts["violation"]),
        groups=len(corpus),
        checks=selectors,
        counts=counts,
        settings=settings.as_dict(),
        records=records,
    )


def render_table(report: Record) -> str:
    """Human-readable summary of a suite report"""
    rows = [("group", "check", "status", "witness")]
    rows += [(r["group"], r["check"], r["status"], r["witness"] or "") for r in report["records"]]
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row[:3], widths)) + ("  " + row[3] if row[3] else "") for row in rows]
    counts = ", ".join(f"{n} {status}" for status, n in report["counts"].items())
    lines.append("")
    lines.append(f"{report['groups']} groups, {len(report['records'])} records: {counts}")
    return "\n".join(line.rstrip() for line in lines)
