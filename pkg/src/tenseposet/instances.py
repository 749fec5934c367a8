"""Ready-made posets, frames and residuated tables used by tests, docs and
the verify suites."""

from __future__ import annotations

import itertools

from .frames import TimeFrame
from .poset import Poset
from .residuated import ResiduatedPoset


def chain(k: int, labels=None) -> Poset:
    labels = labels or [str(i) for i in range(k)]
    return Poset.from_covers(labels, [(labels[i], labels[i + 1])
                                      for i in range(k - 1)])


def diamond() -> Poset:
    return Poset.from_covers("0ab1", [("0", "a"), ("0", "b"),
                                      ("a", "1"), ("b", "1")])


def nonlattice9() -> Poset:
    """A nine-element bounded poset that is not a lattice: three atoms, a
    middle element, three coatoms, with incomparable pairs lacking joins."""
    covers = [("0", "a"), ("0", "b"), ("0", "c"),
              ("a", "e"), ("a", "f"), ("b", "d"), ("b", "e"), ("b", "g"),
              ("c", "f"), ("c", "g"), ("d", "f"),
              ("e", "1"), ("f", "1"), ("g", "1")]
    return Poset.from_covers("0abcdefg1", covers)


def chain_frame(k: int, labels=None) -> TimeFrame:
    """Points 1..k under the reflexive total order."""
    labels = labels or [str(i + 1) for i in range(k)]
    pairs = [(labels[i], labels[j]) for i in range(k) for j in range(i, k)]
    return TimeFrame.from_pairs(labels, pairs)


def boolean_cube(dim: int) -> ResiduatedPoset:
    """The powerset algebra on ``dim`` atoms with meet and material
    implication."""
    points = list(itertools.product((0, 1), repeat=dim))
    labels = ["".join(map(str, pt)) for pt in points] if dim else ["1"]
    covers = []
    for i, a in enumerate(points):
        for j, b in enumerate(points):
            diff = [u < v for u, v in zip(a, b)]
            if sum(u != v for u, v in zip(a, b)) == 1 and any(diff):
                covers.append((labels[i], labels[j]))
    base = Poset.from_covers(labels, covers,
                             involution=[points.index(tuple(1 - u for u in pt))
                                         for pt in points])
    idx = {pt: i for i, pt in enumerate(points)}
    times = [[idx[tuple(u & v for u, v in zip(a, b))] for b in points]
             for a in points]
    arrow = [[idx[tuple((1 - u) | v for u, v in zip(a, b))] for b in points]
             for a in points]
    return ResiduatedPoset(base, times, arrow)


def godel_chain(k: int) -> ResiduatedPoset:
    """The k-element chain with minimum as product and the order implication
    (1 when x <= y, else y)."""
    base = chain(k)
    times = [[min(x, y) for y in range(k)] for x in range(k)]
    arrow = [[k - 1 if x <= y else y for y in range(k)] for x in range(k)]
    return ResiduatedPoset(base, times, arrow)


def lukasiewicz_chain(k: int) -> ResiduatedPoset:
    """The k-element chain with truncated addition semantics."""
    top = k - 1
    base = chain(k)
    times = [[max(0, x + y - top) for y in range(k)] for x in range(k)]
    arrow = [[min(top, top - x + y) for y in range(k)] for x in range(k)]
    return ResiduatedPoset(base, times, arrow)
