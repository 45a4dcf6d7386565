import itertools

from sympy import factorint
from sympy.utilities.iterables import partitions

from ia_nilpotent.groups.abelian import FgAbelian


def abelian_types(max_order):
    """Every finite abelian group of order <= max_order, once per isomorphism type"""
    types = []
    for n in range(1, max_order + 1):
        per_prime = []
        for p, e in factorint(n).items():
            per_prime.append([
                (p, [k for k, m in sorted(part.items(), reverse=True) for _ in range(m)])
                for part in (dict(q) for q in partitions(e))
            ])
        for combo in itertools.product(*per_prime):
            types.append(FgAbelian.make(dict(combo)))
    return types
