"""Seeded random structures for the verify suites and property tests.

Everything is driven by a caller-supplied ``random.Random`` so that suites
are reproducible from a seed.
"""

from __future__ import annotations

import itertools

from .frames import TimeFrame
from .instances import boolean_cube, chain, godel_chain, lukasiewicz_chain
from .poset import Poset


def rand_bounded_poset(rng, n_max: int = 8, n_min: int = 2) -> Poset:
    """Random bounded poset: a random cover DAG on middle elements glued
    between a forced bottom and top."""
    n = rng.randint(max(2, n_min), max(2, n_max))
    labels = [f"x{i}" for i in range(n)]
    covers = []
    middle = range(1, n - 1)
    density = rng.uniform(0.15, 0.5)
    has_in = set()
    has_out = set()
    for i in middle:
        for j in middle:
            if i < j and rng.random() < density:
                covers.append((labels[i], labels[j]))
                has_out.add(i)
                has_in.add(j)
    for i in middle:
        if i not in has_in:
            covers.append((labels[0], labels[i]))
        if i not in has_out:
            covers.append((labels[i], labels[n - 1]))
    if n == 2:
        covers.append((labels[0], labels[1]))
    return Poset.from_covers(labels, covers)


def rand_poset_with_involution(rng, n_max: int = 9) -> Poset:
    """Random bounded poset carrying an antitone involution."""
    kind = rng.randrange(3)
    if kind == 0:
        k = rng.randint(2, min(6, n_max))
        labels = [str(i) for i in range(k)]
        return Poset.from_covers(labels, [(labels[i], labels[i + 1])
                                          for i in range(k - 1)],
                                 involution=list(reversed(range(k))))
    if kind == 1:
        dim = rng.randint(1, 3 if n_max >= 8 else 2)
        return boolean_cube(dim).base
    # a poset times its dual carries the coordinate swap as involution
    q = rand_bounded_poset(rng, max(2, int(n_max ** 0.5)))
    prod = Poset.product([q, q.dual()])
    swap = [(k % q.n) * q.n + (k // q.n) for k in range(prod.n)]
    return Poset(prod.labels, prod.up, swap)


def rand_serial_frame(rng, m_max: int = 4, reflexive: bool = False) -> TimeFrame:
    m = rng.randint(1, m_max)
    labels = [f"t{i}" for i in range(m)]
    succ = [0] * m
    density = rng.uniform(0.2, 0.7)
    for s in range(m):
        for t in range(m):
            if rng.random() < density:
                succ[s] |= 1 << t
    if reflexive:
        for s in range(m):
            succ[s] |= 1 << s
    frame = TimeFrame(labels, succ)
    while not frame.serial:
        succ = list(frame.succ)
        for s in range(m):
            if not succ[s]:
                succ[s] |= 1 << rng.randrange(m)
        frame = TimeFrame(labels, succ)
        pred_missing = [t for t in range(m) if not frame.pred[t]]
        if pred_missing:
            succ = list(frame.succ)
            for t in pred_missing:
                succ[rng.randrange(m)] |= 1 << t
            frame = TimeFrame(labels, succ)
    return frame


def rand_subset(rng, n: int) -> int:
    return rng.randrange(1, 1 << n)


def rand_prop(rng, n: int, m: int) -> tuple:
    return tuple(rng.randrange(n) for _ in range(m))


def rand_family(rng, n: int, m: int, k_max: int = 3) -> frozenset:
    return frozenset(rand_prop(rng, n, m) for _ in range(rng.randint(1, k_max)))


def rand_trajectory(rng, p: Poset, m: int, antichains: bool = False) -> tuple:
    out = []
    for _ in range(m):
        x = rand_subset(rng, p.n)
        out.append(p.maximals(x) if antichains else x)
    return tuple(out)


def rand_residuated(rng, n_max: int = 6):
    kind = rng.randrange(3)
    if kind == 0:
        return godel_chain(rng.randint(2, min(6, n_max)))
    if kind == 1:
        return lukasiewicz_chain(rng.randint(2, min(6, n_max)))
    return boolean_cube(rng.randint(1, 2 if n_max >= 4 else 1))


def rand_closed_trajectory(rng, dm, m: int) -> tuple:
    return tuple(dm.closed[rng.randrange(len(dm.closed))] for _ in range(m))


def all_nonempty_subsets(n: int):
    return range(1, 1 << n)


def subset_triples(n: int):
    """Every ordered triple of nonempty subsets; exponential cubed."""
    return itertools.product(range(1, 1 << n), repeat=3)
