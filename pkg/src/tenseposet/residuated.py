"""Residuated posets given by explicit operation tables.

The multiplication and implication arrive as full tables rather than being
derived from cones; validation checks the five axioms exhaustively.  The
closed-set lattice of the base inherits a complete residuated structure
with the lifted (bold) operations, and the subset-level connectives come
back as the maximal/minimal antichains of those.
"""

from __future__ import annotations

from .completion import DMLattice, dm_complete
from .errors import EmptySetError, NonSerialError
from .frames import TimeFrame
from .poset import ENUM_CAP, Poset, bits
from .report import Report
from .tense import TenseOp, apply_tense, _tense_raw, family_slices
from . import completion


class ResiduatedPoset:
    """A bounded poset plus total multiplication and implication tables.

    Tables are row-major tuples of element indices.  Construction checks
    shape only; run :func:`validate_residuated` for the axioms.
    """

    __slots__ = ("base", "times", "arrow")

    def __init__(self, base: Poset, times, arrow):
        if base.bottom is None or base.top is None:
            raise EmptySetError("residuated structure needs a bounded poset")
        self.base = base
        self.times = tuple(tuple(row) for row in times)
        self.arrow = tuple(tuple(row) for row in arrow)
        n = base.n
        for name, table in (("times", self.times), ("arrow", self.arrow)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{name} table is not {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"{name} table mentions unknown elements")

    def mul(self, x: int, y: int) -> int:
        return self.times[x][y]

    def res(self, x: int, y: int) -> int:
        return self.arrow[x][y]

    def with_cell(self, table: str, x: int, y: int, value: int) -> "ResiduatedPoset":
        """Copy with one table cell replaced; for mutation testing."""
        times = [list(r) for r in self.times]
        arrow = [list(r) for r in self.arrow]
        (times if table == "times" else arrow)[x][y] = value
        return ResiduatedPoset(self.base, times, arrow)


def validate_residuated(rp: ResiduatedPoset) -> Report:
    """Exhaustively check the residuation axioms and the two basic bounds.

    Reports the first violation per axiom with a witness triple.
    """
    p = rp.base
    n = p.n
    lab = p.labels
    rep = Report("residuated")
    one = p.top

    ok, wit = True, ""
    for x in range(n):
        if rp.mul(x, one) != x:
            ok, wit = False, f"x={lab[x]}"
            break
    rep.add("axiom1.unit", ok, wit)

    ok, wit = True, ""
    for x in range(n):
        for y in range(n):
            if rp.mul(x, y) != rp.mul(y, x):
                ok, wit = False, f"x={lab[x]} y={lab[y]}"
                break
        if not ok:
            break
    rep.add("axiom2.commutative", ok, wit)

    ok, wit = True, ""
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if rp.mul(x, rp.mul(y, z)) != rp.mul(rp.mul(x, y), z):
                    ok, wit = False, f"x={lab[x]} y={lab[y]} z={lab[z]}"
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("axiom3.associative", ok, wit)

    ok, wit = True, ""
    for x in range(n):
        for v in bits(p.up[x]):
            for y in range(n):
                for z in bits(p.up[y]):
                    if not p.leq(rp.mul(x, y), rp.mul(v, z)):
                        ok, wit = False, f"x={lab[x]} v={lab[v]} y={lab[y]} z={lab[z]}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("axiom4.monotone", ok, wit)

    ok, wit = True, ""
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if p.leq(rp.mul(x, y), z) != p.leq(x, rp.res(y, z)):
                    ok, wit = False, f"x={lab[x]} y={lab[y]} z={lab[z]}"
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("axiom5.residuation", ok, wit)

    ok, wit = True, ""
    for x in range(n):
        for y in range(n):
            if not p.leq(x, rp.res(y, rp.mul(x, y))):
                ok, wit = False, f"x={lab[x]} y={lab[y]}"
                break
            if not p.leq(rp.mul(rp.res(x, y), x), y):
                ok, wit = False, f"x={lab[x]} y={lab[y]}"
                break
        if not ok:
            break
    rep.add("basic.bounds", ok, wit)
    return rep


class ResiduatedDM:
    """The closed-set lattice of a residuated poset with the lifted operations."""

    __slots__ = ("rp", "dm")

    def __init__(self, rp: ResiduatedPoset, cap: int = ENUM_CAP):
        self.rp = rp
        self.dm = dm_complete(rp.base, cap)

    @property
    def base(self) -> Poset:
        return self.rp.base

    def bold_zero(self) -> int:
        return self.base.lu(0)

    def bold_one(self) -> int:
        return self.base.full

    def bold_mul(self, x: int, y: int) -> int:
        """Closure of the elementwise products; defined for arbitrary subsets,
        closed on closed sets."""
        p = self.base
        pool = 0
        for a in bits(x):
            for b in bits(y):
                pool |= 1 << self.rp.mul(a, b)
        return p.lu(pool)

    def bold_res(self, x: int, y: int) -> int:
        """Intersection of the principal ideals of pointwise implications into
        upper bounds of ``y``."""
        p = self.base
        acc = p.full
        uy = p.upper_cone(y)
        for a in bits(x):
            for z in bits(uy):
                acc &= p.dn[self.rp.res(a, z)]
        return acc


def boxdot(rd: ResiduatedDM, b: int, c: int) -> int:
    """Subset conjunction: maximal elements of the closed product."""
    if not b or not c:
        raise EmptySetError("subset conjunction needs nonempty operands")
    return rd.base.maximals(rd.bold_mul(b, c))


def double_arrow(rd: ResiduatedDM, b: int, c: int) -> int:
    """Subset implication: minimal upper bounds of the lifted implication."""
    if not b or not c:
        raise EmptySetError("subset implication needs nonempty operands")
    return rd.base.min_u(rd.bold_res(b, c))


def check_adjunction(rd: ResiduatedDM, triples) -> Report:
    """Check the subset-level residuation laws on given (B, C, D) triples.

    ``X <= U(Y)`` is evaluated as X being contained in the closure LU(Y),
    and ``X <= Y`` between antichains as the all-pairs order.
    """
    p = rd.base
    rep = Report("adjunction")

    def show(mask):
        return "{" + ",".join(str(p.labels[i]) for i in bits(mask)) + "}"

    one = 1 << p.top
    ok1, wit1 = True, ""
    ok2, wit2 = True, ""
    ok3, wit3 = True, ""
    ok4, wit4 = True, ""
    ok5, wit5 = True, ""
    for b, c, d in triples:
        if ok1:
            if boxdot(rd, b, one) != p.maximals(p.lu(b)) \
                    or double_arrow(rd, one, b) != p.min_u(b):
                ok1, wit1 = False, show(b)
        if ok2 and boxdot(rd, b, c) != boxdot(rd, c, b):
            ok2, wit2 = False, f"{show(b)},{show(c)}"
        if ok3:
            # LU(C) and LU(D) are the largest operands satisfying the
            # premises, and containment in the closed target is monotone,
            # so this instance subsumes every smaller one
            if boxdot(rd, p.lu(c), p.lu(d)) & ~p.lu(boxdot(rd, c, d)):
                ok3, wit3 = False, f"{show(c)},{show(d)}"
        if ok4:
            lhs = boxdot(rd, b, c) & ~p.lu(d) == 0
            rhs = b & ~p.lower_cone(double_arrow(rd, c, d)) == 0
            if lhs != rhs:
                ok4, wit4 = False, f"{show(b)},{show(c)},{show(d)}"
        if ok5:
            lcd = p.lower_cone(double_arrow(rd, c, d))
            if boxdot(rd, lcd, c) & ~p.lu(d):
                ok5, wit5 = False, f"{show(c)},{show(d)}"
            elif c & ~p.lower_cone(double_arrow(rd, lcd, d)):
                ok5, wit5 = False, f"{show(c)},{show(d)}"
    rep.add("adj1.units", ok1, wit1)
    rep.add("adj2.commutative", ok2, wit2)
    rep.add("adj3.compatible", ok3, wit3)
    rep.add("adj4.residuation", ok4, wit4)
    rep.add("adj5.counit", ok5, wit5)
    return rep


def _hat(op: TenseOp, rd: ResiduatedDM, f: TimeFrame, traj):
    return completion.hat_tense(op, rd.dm, f, traj)


def check_dr_laws(rd: ResiduatedDM, f: TimeFrame, trajectories) -> Report:
    """Lattice-side distribution laws and the Galois property of the hat
    operators over closed-set trajectories."""
    if not f.serial:
        raise NonSerialError("time frame is not serial")
    rep = Report("dr")
    traj = [tuple(t) for t in trajectories]
    values = {op: {t: _hat(op, rd, f, t) for t in traj} for op in TenseOp}

    def mul(a, b):
        return tuple(rd.bold_mul(x, y) for x, y in zip(a, b))

    def res(a, b):
        return tuple(rd.bold_res(x, y) for x, y in zip(a, b))

    def below(a, b):
        return all(x & ~y == 0 for x, y in zip(a, b))

    ok = {k: True for k in ("dr1.mul", "dr1.res", "dr2", "dr3.mul", "dr3.res",
                            "dr4", "galois.PG", "galois.FH")}
    wit = {k: "" for k in ok}
    for i, p1 in enumerate(traj):
        for p2 in traj:
            ghat = values[TenseOp.G]
            hhat = values[TenseOp.H]
            if ok["dr1.mul"] and not below(mul(ghat[p1], ghat[p2]),
                                           _hat(TenseOp.G, rd, f, mul(p1, p2))):
                ok["dr1.mul"], wit["dr1.mul"] = False, f"pair {i}"
            if ok["dr1.res"] and not below(_hat(TenseOp.G, rd, f, res(p1, p2)),
                                           res(ghat[p1], ghat[p2])):
                ok["dr1.res"], wit["dr1.res"] = False, f"pair {i}"
            if ok["dr2"] and not below(_hat(TenseOp.P, rd, f, mul(p1, p2)),
                                       mul(values[TenseOp.P][p1], values[TenseOp.P][p2])):
                ok["dr2"], wit["dr2"] = False, f"pair {i}"
            if ok["dr3.mul"] and not below(mul(hhat[p1], hhat[p2]),
                                           _hat(TenseOp.H, rd, f, mul(p1, p2))):
                ok["dr3.mul"], wit["dr3.mul"] = False, f"pair {i}"
            if ok["dr3.res"] and not below(_hat(TenseOp.H, rd, f, res(p1, p2)),
                                           res(hhat[p1], hhat[p2])):
                ok["dr3.res"], wit["dr3.res"] = False, f"pair {i}"
            if ok["dr4"] and not below(_hat(TenseOp.F, rd, f, mul(p1, p2)),
                                       mul(values[TenseOp.F][p1], values[TenseOp.F][p2])):
                ok["dr4"], wit["dr4"] = False, f"pair {i}"
            if ok["galois.PG"] and (below(values[TenseOp.P][p1], p2)
                                    != below(p1, values[TenseOp.G][p2])):
                ok["galois.PG"], wit["galois.PG"] = False, f"pair {i}"
            if ok["galois.FH"] and (below(values[TenseOp.F][p1], p2)
                                    != below(p1, values[TenseOp.H][p2])):
                ok["galois.FH"], wit["galois.FH"] = False, f"pair {i}"
    for k in ("dr1.mul", "dr1.res", "dr2", "dr3.mul", "dr3.res", "dr4",
              "galois.PG", "galois.FH"):
        rep.add(k, ok[k], wit[k])
    return rep


def check_dt_laws(rd: ResiduatedDM, f: TimeFrame, families) -> Report:
    """Base-side distribution laws combining tense operators with the subset
    connectives, slicewise."""
    if not f.serial:
        raise NonSerialError("time frame is not serial")
    p = rd.base
    rep = Report("dt")
    fams = [frozenset(fam) for fam in families]

    def traj_box(a, b):
        return tuple(boxdot(rd, x, y) for x, y in zip(a, b))

    def traj_arrow(a, b):
        return tuple(double_arrow(rd, x, y) for x, y in zip(a, b))

    ok = {k: True for k in ("dt1.mul", "dt1.res", "dt2", "dt3.mul",
                            "dt3.res", "dt4")}
    wit = {k: "" for k in ok}
    for i, c1 in enumerate(fams):
        for c2 in fams:
            s1 = family_slices(c1, f.m)
            s2 = family_slices(c2, f.m)
            u1 = tuple(p.upper_cone(x) for x in s1)
            u2 = tuple(p.upper_cone(x) for x in s2)
            for universal, existential, mulk, resk, lk in (
                    (TenseOp.G, TenseOp.P, "dt1.mul", "dt1.res", "dt2"),
                    (TenseOp.H, TenseOp.F, "dt3.mul", "dt3.res", "dt4")):
                gu1 = _tense_raw(universal, p, f, u1)
                gu2 = _tense_raw(universal, p, f, u2)
                if ok[mulk]:
                    lhs = traj_box(gu1, gu2)
                    inner = tuple(p.upper_cone(x) for x in traj_box(s1, s2))
                    rhs = _tense_raw(universal, p, f, inner)
                    if not all(x & ~p.lower_cone(p.min_u(y)) == 0
                               for x, y in zip(lhs, rhs)):
                        ok[mulk], wit[mulk] = False, f"pair {i}"
                if ok[resk]:
                    lhs = _tense_raw(universal, p, f, traj_arrow(s1, s2))
                    rhs = traj_arrow(gu1, gu2)
                    if not all(x & ~p.lower_cone(y) == 0
                               for x, y in zip(lhs, rhs)):
                        ok[resk], wit[resk] = False, f"pair {i}"
                if ok[lk]:
                    pd = _tense_raw(existential, p, f, traj_box(s1, s2))
                    lp1 = tuple(p.lower_cone(x)
                                for x in _tense_raw(existential, p, f, s1))
                    lp2 = tuple(p.lower_cone(x)
                                for x in _tense_raw(existential, p, f, s2))
                    rhs = traj_box(lp1, lp2)
                    if not all(p.lower_cone(x) & ~p.lu(y) == 0
                               for x, y in zip(pd, rhs)):
                        ok[lk], wit[lk] = False, f"pair {i}"
    for k in ("dt1.mul", "dt1.res", "dt2", "dt3.mul", "dt3.res", "dt4"):
        rep.add(k, ok[k], wit[k])
    return rep
