"""Tense operators on proposition families over a time frame.

A proposition is a tuple of element indices, one per time point.  A family
is a nonempty frozenset of propositions.  The four operators map a family
to a trajectory: a tuple of nonempty antichain bitmasks, one per point.

Composition never materializes the selector-set expansion of a trajectory;
it uses the closed form (union of slices over the relevant points).  The
expansion itself is available, capped, for oracle cross-checks.
"""

from __future__ import annotations

import enum
import itertools

from .errors import EmptySetError, NonSerialError, SizeError
from .frames import TimeFrame
from .orders import SubsetOrder, compare
from .poset import Poset, bits
from .report import Report

PHI_CAP = 10_000


class TenseOp(enum.Enum):
    P = "P"  # somewhere in the past
    F = "F"  # somewhere in the future
    H = "H"  # everywhere in the past
    G = "G"  # everywhere in the future

    @property
    def uses_past(self) -> bool:
        return self in (TenseOp.P, TenseOp.H)

    @property
    def is_existential(self) -> bool:
        """Existential flavour: value is Min U of the collected slice."""
        return self in (TenseOp.P, TenseOp.F)


def make_family(props) -> frozenset:
    fam = frozenset(tuple(q) for q in props)
    if not fam:
        raise EmptySetError("proposition family must be nonempty")
    lengths = {len(q) for q in fam}
    if len(lengths) != 1:
        raise EmptySetError("propositions in a family must share a time set")
    return fam


def family_slices(family, m: int):
    """Per-point subset {q(t) : q in family}, as bitmasks."""
    slices = [0] * m
    for q in family:
        for t, e in enumerate(q):
            slices[t] |= 1 << e
    return tuple(slices)


def _tense_raw(op: TenseOp, p: Poset, f: TimeFrame, slices):
    """Closed-form evaluation; empty index sets fall back to the whole-carrier
    cone convention (Min U(empty) is the bottom, Max L(empty) the top)."""
    rel = f.pred if op.uses_past else f.succ
    out = []
    for s in range(f.m):
        acc = 0
        for t in bits(rel[s]):
            acc |= slices[t]
        out.append(p.min_u(acc) if op.is_existential else p.max_l(acc))
    return tuple(out)


def _require_serial(f: TimeFrame):
    if not f.serial:
        raise NonSerialError("time frame is not serial")


def apply_tense(op: TenseOp, p: Poset, f: TimeFrame, family) -> tuple:
    """Evaluate one tense operator on a proposition family."""
    _require_serial(f)
    return _tense_raw(op, p, f, family_slices(family, f.m))


def apply_tense_trajectory(op: TenseOp, p: Poset, f: TimeFrame, traj) -> tuple:
    """Evaluate one tense operator on a trajectory without expanding it.

    Input slices are normalized to antichains first (maximals for the
    existential operators, minimals for the universal ones); the collected
    cones are unchanged by this.
    """
    _require_serial(f)
    if any(not x for x in traj):
        raise EmptySetError("trajectory slices must be nonempty")
    if op.is_existential:
        norm = tuple(p.maximals(x) for x in traj)
    else:
        norm = tuple(p.minimals(x) for x in traj)
    return _tense_raw(op, p, f, norm)


def materialize_phi(traj, cap: int = PHI_CAP) -> frozenset:
    """All selector propositions of a trajectory (cartesian product)."""
    size = 1
    for x in traj:
        if not x:
            raise EmptySetError("trajectory slices must be nonempty")
        size *= x.bit_count()
        if size > cap:
            raise SizeError(f"selector family would exceed {cap} propositions")
    choices = [list(bits(x)) for x in traj]
    return frozenset(itertools.product(*choices))


def compose(x: TenseOp, y: TenseOp, p: Poset, f: TimeFrame, family) -> tuple:
    """The composite x * y: apply y, then x on the resulting trajectory."""
    return apply_tense_trajectory(x, p, f, apply_tense(y, p, f, family))


# -- slicewise comparisons ------------------------------------------------

def traj_compare(p: Poset, kind: SubsetOrder, a, b) -> bool:
    """Compare two time-indexed subset tuples slice by slice."""
    if len(a) != len(b):
        raise ValueError("trajectories disagree on time sets")
    return all(compare(p, kind, x, y) for x, y in zip(a, b))


def family_leq1(p: Poset, c, d) -> bool:
    """c <=1 d in the componentwise order on propositions."""
    return all(any(all(p.leq(q[t], r[t]) for t in range(len(q))) for r in d)
               for q in c)


def family_leq2(p: Poset, c, d) -> bool:
    """c <=2 d in the componentwise order on propositions."""
    return all(any(all(p.leq(q[t], r[t]) for t in range(len(r))) for q in c)
               for r in d)


# -- dynamic pairs and Galois connections ----------------------------------

def _operator_handles(p, f):
    return {op: (lambda fam, _op=op: apply_tense(_op, p, f, fam))
            for op in TenseOp}


def _family_pool(p: Poset, f: TimeFrame, families, singleton_cap: int = 32):
    """Supplied families, the constant bound families, and (when the space is
    small) every singleton family."""
    pool = [make_family(fam) for fam in families]
    if p.bottom is not None:
        pool.append(make_family([(p.bottom,) * f.m]))
    if p.top is not None:
        pool.append(make_family([(p.top,) * f.m]))
    if p.n ** f.m <= singleton_cap:
        for q in itertools.product(range(p.n), repeat=f.m):
            pool.append(frozenset([q]))
    seen, unique = set(), []
    for fam in pool:
        if fam not in seen:
            seen.add(fam)
            unique.append(fam)
    return unique


def _describe(p, f, family):
    rows = ",".join("[" + ",".join(str(p.labels[e]) for e in q) + "]"
                    for q in sorted(family))
    return "{" + rows + "}"


def check_dynamic_pair(p: Poset, f: TimeFrame, families=(), *,
                       evaluators=None, singleton_cap: int = 32) -> Report:
    """Check the dynamic-pair laws for (P,G) and (F,H).

    T0: the constant-top family is a fixpoint of the universal operator and
    the constant-bottom one of the existential operator.  T1: monotonicity
    in the appropriate preorders.  T2: the unit/counit sandwich.
    """
    if p.bottom is None or p.top is None:
        raise EmptySetError("dynamic-pair check needs a bounded poset")
    _require_serial(f)
    ops = evaluators if evaluators is not None else _operator_handles(p, f)
    pool = _family_pool(p, f, families, singleton_cap)
    rep = Report("dynamic")
    values = {op: {fam: ops[op](fam) for fam in pool} for op in TenseOp}
    slices = {fam: family_slices(fam, f.m) for fam in pool}

    top_traj = tuple([1 << p.top] * f.m)
    bot_traj = tuple([1 << p.bottom] * f.m)
    top_fam = make_family([(p.top,) * f.m])
    bot_fam = make_family([(p.bottom,) * f.m])
    for exi, uni, tag in ((TenseOp.P, TenseOp.G, "PG"), (TenseOp.F, TenseOp.H, "FH")):
        rep.add(f"{tag}.T0", values[uni][top_fam] == top_traj
                and values[exi][bot_fam] == bot_traj)
        ok1 = ok2 = True
        witness1 = witness2 = ""
        for c in pool:
            for d in pool:
                if ok1 and family_leq1(p, c, d):
                    if not traj_compare(p, SubsetOrder.ONE_BWD,
                                        values[exi][c], values[exi][d]):
                        ok1, witness1 = False, _describe(p, f, c) + " , " + _describe(p, f, d)
                if ok2 and family_leq2(p, c, d):
                    if not traj_compare(p, SubsetOrder.ONE_FWD,
                                        values[uni][c], values[uni][d]):
                        ok2, witness2 = False, _describe(p, f, c) + " , " + _describe(p, f, d)
        rep.add(f"{tag}.T1.i", ok1, witness1)
        rep.add(f"{tag}.T1.ii", ok2, witness2)
        ok_unit = ok_counit = True
        wit_unit = wit_counit = ""
        for c in pool:
            gp = apply_tense_trajectory(uni, p, f, values[exi][c])
            pg = apply_tense_trajectory(exi, p, f, values[uni][c])
            if ok_unit and not traj_compare(p, SubsetOrder.ONE_FWD, slices[c], gp):
                ok_unit, wit_unit = False, _describe(p, f, c)
            if ok_counit and not traj_compare(p, SubsetOrder.ONE_BWD, pg, slices[c]):
                ok_counit, wit_counit = False, _describe(p, f, c)
        rep.add(f"{tag}.T2.unit", ok_unit, wit_unit)
        rep.add(f"{tag}.T2.counit", ok_counit, wit_counit)
    return rep


def check_galois(p: Poset, f: TimeFrame, families=(), *,
                 evaluators=None, singleton_cap: int = 32) -> Report:
    """Check the Galois condition for (P,G) and (F,H) over a family pool,
    and cross-check its equivalence with T1+T2 on the same pool."""
    if p.bottom is None or p.top is None:
        raise EmptySetError("Galois check needs a bounded poset")
    _require_serial(f)
    ops = evaluators if evaluators is not None else _operator_handles(p, f)
    pool = _family_pool(p, f, families, singleton_cap)
    rep = Report("galois")
    values = {op: {fam: ops[op](fam) for fam in pool} for op in TenseOp}
    slices = {fam: family_slices(fam, f.m) for fam in pool}

    galois_ok = True
    for exi, uni, tag in ((TenseOp.P, TenseOp.G, "PG"), (TenseOp.F, TenseOp.H, "FH")):
        ok = True
        witness = ""
        for c in pool:
            for d in pool:
                lhs = traj_compare(p, SubsetOrder.ONE_BWD, values[exi][c], slices[d])
                rhs = traj_compare(p, SubsetOrder.ONE_FWD, slices[c], values[uni][d])
                if lhs != rhs:
                    ok = False
                    witness = _describe(p, f, c) + " , " + _describe(p, f, d)
                    break
            if not ok:
                break
        rep.add(f"{tag}.Ga", ok, witness)
        galois_ok = galois_ok and ok

    dyn = check_dynamic_pair(p, f, families, evaluators=evaluators,
                             singleton_cap=singleton_cap)
    t1t2 = all(ok for label, ok, _ in dyn.entries if ".T1" in label or ".T2" in label)
    rep.add("chaga.equiv", galois_ok == t1t2,
            f"galois={galois_ok} t1t2={t1t2}")
    return rep
