"""Reconstruct a time-preference relation from tense operators, and the
past/future frame extension that recovers the operators exactly.

A pair (s, t) enters the synthesized relation when, for every witness
family, the universal-operator slices bound the family slices from below
and the existential ones from above, in the all-pairs subset order.  The
defining quantifier ranges over every nonempty family, so finite witness
sets yield an over-approximation: fewer witnesses, more pairs.  Exact
computation is offered at micro scale only.
"""

from __future__ import annotations

import itertools

from .errors import EmptySetError, NonSerialError, SizeError
from .frames import TimeFrame
from .orders import SubsetOrder, compare
from .poset import Poset, bits
from .report import Report
from .tense import (TenseOp, _tense_raw, apply_tense, apply_tense_trajectory,
                    family_slices, make_family, traj_compare)


class OperatorBundle:
    """Four trajectory-valued evaluators over a shared poset and time set."""

    __slots__ = ("poset", "time_labels", "ops", "frame")

    def __init__(self, poset: Poset, time_labels, ops, frame: TimeFrame | None = None):
        self.poset = poset
        self.time_labels = tuple(time_labels)
        self.ops = dict(ops)
        self.frame = frame
        if set(self.ops) != set(TenseOp):
            raise ValueError("bundle needs evaluators for all four operators")

    @property
    def m(self) -> int:
        return len(self.time_labels)

    @classmethod
    def from_frame(cls, poset: Poset, frame: TimeFrame) -> "OperatorBundle":
        ops = {op: (lambda fam, _op=op: apply_tense(_op, poset, frame, fam))
               for op in TenseOp}
        return cls(poset, frame.labels, ops, frame)

    @classmethod
    def constant(cls, poset: Poset, time_labels) -> "OperatorBundle":
        """Universal operators pinned to the bottom, existential to the top;
        the synthesized relation becomes total."""
        if poset.bottom is None or poset.top is None:
            raise EmptySetError("constant bundle needs a bounded poset")
        m = len(tuple(time_labels))
        low = tuple([1 << poset.bottom] * m)
        high = tuple([1 << poset.top] * m)
        ops = {TenseOp.P: lambda fam: high, TenseOp.F: lambda fam: high,
               TenseOp.H: lambda fam: low, TenseOp.G: lambda fam: low}
        return cls(poset, time_labels, ops, None)

    def evaluate(self, op: TenseOp, family):
        return self.ops[op](family)


def induce_relation(bundle: OperatorBundle, witnesses) -> tuple:
    """Synthesize the relation from witness families; returns successor rows.

    The result contains every pair admitted by all witnesses, hence it
    over-approximates the relation defined by the full family space.
    """
    if not witnesses:
        raise EmptySetError("at least one witness family is required")
    p, m = bundle.poset, bundle.m
    rows = [(1 << m) - 1] * m
    for fam in witnesses:
        fam = make_family(fam)
        slices = family_slices(fam, m)
        hb = bundle.evaluate(TenseOp.H, fam)
        pb = bundle.evaluate(TenseOp.P, fam)
        gb = bundle.evaluate(TenseOp.G, fam)
        fb = bundle.evaluate(TenseOp.F, fam)
        for s in range(m):
            row = rows[s]
            for t in bits(row):
                if not (compare(p, SubsetOrder.ALL, hb[t], slices[s])
                        and compare(p, SubsetOrder.ALL, slices[s], pb[t])
                        and compare(p, SubsetOrder.ALL, gb[s], slices[t])
                        and compare(p, SubsetOrder.ALL, slices[t], fb[s])):
                    row &= ~(1 << t)
            rows[s] = row
    return tuple(rows)


def all_families(n: int, m: int, cap: int = 512):
    """Every nonempty family of propositions; exponential twice over."""
    props = list(itertools.product(range(n), repeat=m))
    if (1 << len(props)) - 1 > cap:
        raise SizeError(f"family space exceeds {cap}")
    for choice in range(1, 1 << len(props)):
        yield frozenset(props[i] for i in range(len(props)) if choice >> i & 1)


def exact_relation(bundle: OperatorBundle, cap: int = 512) -> tuple:
    """The synthesized relation with the full family space as witnesses."""
    return induce_relation(bundle, all_families(bundle.poset.n, bundle.m, cap))


def induced_ops_from(bundle: OperatorBundle, relation, families) -> Report:
    """Compare the bundle against the operators induced by the synthesized
    relation: sandwich inequalities always, exact equality when the bundle
    itself came from a frame."""
    p = bundle.poset
    frame = TimeFrame(bundle.time_labels, relation)
    if not frame.serial:
        raise NonSerialError("synthesized relation is not serial")
    rep = Report("induced")
    families = [make_family(fam) for fam in families]
    for k, fam in enumerate(families):
        star = {op: apply_tense(op, p, frame, fam) for op in TenseOp}
        given = {op: bundle.evaluate(op, fam) for op in TenseOp}
        rep.require(f"family{k}.P*leq2P", traj_compare(
            p, SubsetOrder.ONE_BWD, star[TenseOp.P], given[TenseOp.P]))
        rep.require(f"family{k}.F*leq2F", traj_compare(
            p, SubsetOrder.ONE_BWD, star[TenseOp.F], given[TenseOp.F]))
        rep.require(f"family{k}.Hleq1H*", traj_compare(
            p, SubsetOrder.ONE_FWD, given[TenseOp.H], star[TenseOp.H]))
        rep.require(f"family{k}.Gleq1G*", traj_compare(
            p, SubsetOrder.ONE_FWD, given[TenseOp.G], star[TenseOp.G]))
        if bundle.frame is not None:
            for op in TenseOp:
                rep.require(f"family{k}.{op.value}*eq", star[op] == given[op])
    rep.add("compared", True, f"{len(families)} families")
    return rep


class ExtendedFrame:
    """Three copies of the time set: a past echo, the original points under
    the synthesized relation, and a future echo."""

    __slots__ = ("bundle", "relation", "frame", "m")

    def __init__(self, bundle: OperatorBundle, relation):
        self.bundle = bundle
        self.relation = tuple(relation)
        m = bundle.m
        self.m = m
        labels = ([f"({lab},1)" for lab in bundle.time_labels]
                  + list(bundle.time_labels)
                  + [f"({lab},2)" for lab in bundle.time_labels])
        succ = [0] * (3 * m)
        for t in range(m):
            succ[t] = 1 << (m + t)                      # past echo -> point
            succ[m + t] = (self.relation[t] << m) | (1 << (2 * m + t))
        self.frame = TimeFrame(labels, succ)

    def lift_bar(self, family) -> tuple:
        """Boundary slices from the existential operators; middle from the
        family itself."""
        p = self.bundle.poset
        fam = make_family(family)
        slices = family_slices(fam, self.m)
        pb = self.bundle.evaluate(TenseOp.P, fam)
        fb = self.bundle.evaluate(TenseOp.F, fam)
        past = tuple(p.max_l(pb[t]) for t in range(self.m))
        future = tuple(p.max_l(fb[t]) for t in range(self.m))
        return past + slices + future

    def lift_hat(self, family) -> tuple:
        """Boundary slices from the universal operators."""
        p = self.bundle.poset
        fam = make_family(family)
        slices = family_slices(fam, self.m)
        hb = self.bundle.evaluate(TenseOp.H, fam)
        gb = self.bundle.evaluate(TenseOp.G, fam)
        past = tuple(p.min_u(hb[t]) for t in range(self.m))
        future = tuple(p.min_u(gb[t]) for t in range(self.m))
        return past + slices + future

    def lift_traj_bar(self, traj, frame: TimeFrame | None = None) -> tuple:
        """Trajectory form of the past/future lift; needs a frame-induced
        bundle (or an explicit frame) to evaluate operators on trajectories."""
        f = frame or self.bundle.frame
        if f is None:
            raise EmptySetError("trajectory lift needs a frame-induced bundle")
        p = self.bundle.poset
        pb = apply_tense_trajectory(TenseOp.P, p, f, traj)
        fb = apply_tense_trajectory(TenseOp.F, p, f, traj)
        return (tuple(p.max_l(pb[t]) for t in range(self.m)) + tuple(traj)
                + tuple(p.max_l(fb[t]) for t in range(self.m)))

    def lift_traj_hat(self, traj, frame: TimeFrame | None = None) -> tuple:
        f = frame or self.bundle.frame
        if f is None:
            raise EmptySetError("trajectory lift needs a frame-induced bundle")
        p = self.bundle.poset
        hb = apply_tense_trajectory(TenseOp.H, p, f, traj)
        gb = apply_tense_trajectory(TenseOp.G, p, f, traj)
        return (tuple(p.min_u(hb[t]) for t in range(self.m)) + tuple(traj)
                + tuple(p.min_u(gb[t]) for t in range(self.m)))

    def tense(self, op: TenseOp, lifted) -> tuple:
        """Evaluate an operator over the extended frame.  Boundary points
        have no predecessors (or successors), so the raw empty-cone
        convention applies there; the restriction never reads them."""
        return _tense_raw(op, self.bundle.poset, self.frame, lifted)

    def restrict(self, lifted) -> tuple:
        return tuple(lifted[self.m:2 * self.m])


def extend_frame(bundle: OperatorBundle, relation) -> ExtendedFrame:
    return ExtendedFrame(bundle, relation)
