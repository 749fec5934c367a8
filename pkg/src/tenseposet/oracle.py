"""Brute-force reference implementations.

Everything here recomputes results from the definitions by scanning element
lists, sharing nothing with the optimized core beyond the domain types and
the scalar order lookup.  Slow on purpose; used to tag expected values and
to cross-check the core over randomized corpora.
"""

from __future__ import annotations

import itertools

from .errors import SizeError
from .frames import TimeFrame
from .poset import Poset
from .tense import TenseOp


def _as_list(p: Poset, mask_or_list):
    if isinstance(mask_or_list, int):
        return [i for i in range(p.n) if mask_or_list >> i & 1]
    return list(mask_or_list)


def _as_mask(items) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def oracle_lower_cone(p: Poset, x) -> int:
    xs = _as_list(p, x)
    return _as_mask(a for a in range(p.n) if all(p.leq(a, b) for b in xs))


def oracle_upper_cone(p: Poset, x) -> int:
    xs = _as_list(p, x)
    return _as_mask(a for a in range(p.n) if all(p.leq(b, a) for b in xs))


def oracle_maximals(p: Poset, x) -> int:
    xs = _as_list(p, x)
    return _as_mask(a for a in xs
                    if not any(b != a and p.leq(a, b) for b in xs))


def oracle_minimals(p: Poset, x) -> int:
    xs = _as_list(p, x)
    return _as_mask(a for a in xs
                    if not any(b != a and p.leq(b, a) for b in xs))


def oracle_min_u(p: Poset, x) -> int:
    return oracle_minimals(p, oracle_upper_cone(p, x))


def oracle_max_l(p: Poset, x) -> int:
    return oracle_maximals(p, oracle_lower_cone(p, x))


def oracle_compare(p: Poset, kind, x, y) -> bool:
    xs, ys = _as_list(p, x), _as_list(p, y)
    name = kind.name
    if name == "ALL":
        return all(p.leq(a, b) for a in xs for b in ys)
    if name == "ONE_FWD":
        return all(any(p.leq(a, b) for b in ys) for a in xs)
    if name == "ONE_BWD":
        return all(any(p.leq(a, b) for a in xs) for b in ys)
    if name == "EXISTS":
        return any(p.leq(a, b) for a in xs for b in ys)
    if name == "EQ1":
        return (oracle_compare(p, kind.__class__.ONE_FWD, xs, ys)
                and oracle_compare(p, kind.__class__.ONE_FWD, ys, xs))
    if name == "EQ2":
        return (oracle_compare(p, kind.__class__.ONE_BWD, xs, ys)
                and oracle_compare(p, kind.__class__.ONE_BWD, ys, xs))
    raise ValueError(name)


def oracle_tense(op: TenseOp, p: Poset, f: TimeFrame, family) -> tuple:
    """Literal evaluation of the defining formulas, point by point."""
    out = []
    for s in range(f.m):
        if op in (TenseOp.P, TenseOp.H):
            collected = [q[t] for q in family for t in range(f.m) if f.rel(t, s)]
        else:
            collected = [q[t] for q in family for t in range(f.m) if f.rel(s, t)]
        if op in (TenseOp.P, TenseOp.F):
            out.append(oracle_min_u(p, collected))
        else:
            out.append(oracle_max_l(p, collected))
    return tuple(out)


def oracle_phi(p: Poset, traj, cap: int = 10_000) -> frozenset:
    size = 1
    lists = []
    for x in traj:
        xs = _as_list(p, x)
        size *= len(xs)
        if size > cap:
            raise SizeError(f"selector expansion exceeds {cap}")
        lists.append(xs)
    return frozenset(itertools.product(*lists))


def oracle_compose(x: TenseOp, y: TenseOp, p: Poset, f: TimeFrame, family,
                   cap: int = 10_000) -> tuple:
    """Composition through the materialized selector family."""
    inner = oracle_tense(y, p, f, family)
    return oracle_tense(x, p, f, oracle_phi(p, inner, cap))


def oracle_odot(p: Poset, x: int, y: int) -> int:
    return oracle_max_l(p, [x, y])


def oracle_imp(p: Poset, x: int, y: int) -> int:
    good = []
    for z in range(p.n):
        prod = _as_list(p, oracle_odot(p, x, z))
        if all(p.leq(w, y) for w in prod):
            good.append(z)
    return oracle_maximals(p, good)


def oracle_set_odot(p: Poset, bs, cs) -> int:
    pool = set()
    for b in _as_list(p, bs):
        for c in _as_list(p, cs):
            pool.update(_as_list(p, oracle_odot(p, b, c)))
    closed = oracle_lower_cone(p, _as_list(p, oracle_upper_cone(p, sorted(pool))))
    return oracle_maximals(p, closed)


def oracle_set_imp(p: Poset, bs, cs) -> int:
    lu_c = oracle_lower_cone(p, _as_list(p, oracle_upper_cone(p, _as_list(p, cs))))
    good = [a for a in range(p.n)
            if oracle_set_odot(p, [a], bs) & ~lu_c == 0]
    return oracle_maximals(p, good)


def oracle_closed_sets(p: Poset):
    """All distinct LU-closures, as a sorted list of masks."""
    seen = set()
    for mask in range(1 << p.n):
        xs = _as_list(p, mask)
        seen.add(oracle_lower_cone(p, _as_list(p, oracle_upper_cone(p, xs))))
    return sorted(seen)


def oracle_principal_ideals(p: Poset):
    """All distinct L(S) over subsets S, for the two-definition cross-check."""
    seen = set()
    for mask in range(1 << p.n):
        seen.add(oracle_lower_cone(p, mask))
    return sorted(seen)


def oracle_induced_relation(p: Poset, m: int, evaluators, cap: int = 512):
    """The preference relation synthesized from tense operators, by checking
    the defining sandwich over every nonempty proposition family."""
    props = list(itertools.product(range(p.n), repeat=m))
    if (1 << len(props)) - 1 > cap:
        raise SizeError(f"family space exceeds {cap}")
    families = []
    for choice in range(1, 1 << len(props)):
        families.append(frozenset(props[i] for i in range(len(props))
                                  if choice >> i & 1))
    rows = [0] * m
    for s in range(m):
        for t in range(m):
            if all(_sandwich_holds(p, fam, evaluators, s, t, m)
                   for fam in families):
                rows[s] |= 1 << t
    return tuple(rows)


def _sandwich_holds(p, fam, evaluators, s, t, m):
    slice_s = [q[s] for q in fam]
    slice_t = [q[t] for q in fam]
    hb = _as_list(p, evaluators[TenseOp.H](fam)[t])
    pb = _as_list(p, evaluators[TenseOp.P](fam)[t])
    gb = _as_list(p, evaluators[TenseOp.G](fam)[s])
    fb = _as_list(p, evaluators[TenseOp.F](fam)[s])
    return (all(p.leq(a, b) for a in hb for b in slice_s)
            and all(p.leq(a, b) for a in slice_s for b in pb)
            and all(p.leq(a, b) for a in gb for b in slice_t)
            and all(p.leq(a, b) for a in slice_t for b in fb))
