"""The six preorders on nonempty subsets of a poset.

``ALL`` compares every pair across the two sets; the others quantify one
side existentially.  Empty operands are rejected: the definitions live on
nonempty subsets and we do not invent conventions for them.
"""

from __future__ import annotations

import enum

from .errors import EmptySetError
from .poset import Poset


class SubsetOrder(enum.Enum):
    ALL = "all"          # every x <= every y
    ONE_FWD = "leq1"     # every x below some y
    ONE_BWD = "leq2"     # every y above some x
    EXISTS = "sqsubseteq"  # some x below some y
    EQ1 = "approx1"      # leq1 both ways
    EQ2 = "approx2"      # leq2 both ways


def compare(p: Poset, kind: SubsetOrder, x: int, y: int) -> bool:
    if not x or not y:
        raise EmptySetError("subset preorders are defined on nonempty sets")
    if kind is SubsetOrder.ALL:
        return not x & ~p.lower_cone(y)
    if kind is SubsetOrder.ONE_FWD:
        return not x & ~p.down_closure(y)
    if kind is SubsetOrder.ONE_BWD:
        return not y & ~p.up_closure(x)
    if kind is SubsetOrder.EXISTS:
        return bool(x & p.down_closure(y))
    if kind is SubsetOrder.EQ1:
        return (compare(p, SubsetOrder.ONE_FWD, x, y)
                and compare(p, SubsetOrder.ONE_FWD, y, x))
    if kind is SubsetOrder.EQ2:
        return (compare(p, SubsetOrder.ONE_BWD, x, y)
                and compare(p, SubsetOrder.ONE_BWD, y, x))
    raise ValueError(f"unknown subset order {kind!r}")


def leq_all(p: Poset, x: int, y: int) -> bool:
    return compare(p, SubsetOrder.ALL, x, y)


def leq1(p: Poset, x: int, y: int) -> bool:
    return compare(p, SubsetOrder.ONE_FWD, x, y)


def leq2(p: Poset, x: int, y: int) -> bool:
    return compare(p, SubsetOrder.ONE_BWD, x, y)
