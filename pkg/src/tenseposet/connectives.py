"""Set-valued conjunction and implication on a bounded poset.

The conjunction of two elements is the antichain of maximal common lower
bounds; the implication collects the maximal elements whose conjunction
with the antecedent stays below the consequent.  Both extend to nonempty
subsets and, slicewise, to trajectories.

Readings fixed for the subset extensions: ``a <= U(S)`` means ``a`` lies in
the closure LU(S), and the guard of the subset implication requires every
element of ``a (.) B`` to lie in LU(C).  These are the readings under which
the unit law ``1 (.) B = Max LU(B)`` comes out true, which the test suite
asserts.
"""

from __future__ import annotations

from .errors import EmptySetError, SliceMismatchError
from .poset import Poset, bits


def odot(p: Poset, x: int, y: int) -> int:
    """Maximal common lower bounds of two elements (an antichain mask)."""
    return p.maximals(p.dn[x] & p.dn[y])


def imp(p: Poset, x: int, y: int) -> int:
    """Maximal z with every element of x (.) z below y."""
    target = p.dn[y]
    good = 0
    for z in range(p.n):
        if p.dn[x] & p.dn[z] & ~target == 0:
            good |= 1 << z
    return p.maximals(good)


def neg(p: Poset, x: int) -> int:
    if p.bottom is None:
        raise EmptySetError("negation needs a least element")
    return imp(p, x, p.bottom)


def set_odot(p: Poset, b: int, c: int) -> int:
    """Subset conjunction: maximal elements of the closure of all pairwise
    conjunctions."""
    if not b or not c:
        raise EmptySetError("subset conjunction needs nonempty operands")
    pool = 0
    for x in bits(b):
        for y in bits(c):
            pool |= p.dn[x] & p.dn[y]
    # the union of the pairwise antichains has the same closure as the
    # union of the pairwise lower cones
    return p.maximals(p.lu(pool))


def set_imp(p: Poset, b: int, c: int) -> int:
    """Subset implication: maximal a whose conjunction with b stays in LU(c)."""
    if not b or not c:
        raise EmptySetError("subset implication needs nonempty operands")
    target = p.lu(c)
    good = 0
    for a in range(p.n):
        if set_odot(p, 1 << a, b) & ~target == 0:
            good |= 1 << a
    return p.maximals(good)


def traj_odot(p: Poset, b, c) -> tuple:
    if len(b) != len(c):
        raise SliceMismatchError("trajectories disagree on time sets")
    return tuple(set_odot(p, x, y) for x, y in zip(b, c))


def traj_imp(p: Poset, b, c) -> tuple:
    if len(b) != len(c):
        raise SliceMismatchError("trajectories disagree on time sets")
    return tuple(set_imp(p, x, y) for x, y in zip(b, c))
