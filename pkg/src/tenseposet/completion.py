"""Completion of a poset into the lattice of cone-closed subsets.

A subset is closed when it equals the lower cone of its upper cone.  The
closed subsets ordered by inclusion form a complete lattice into which the
base poset embeds via principal ideals; meets are intersections and joins
are closures of unions.  Enumeration is definitional (close every subset
and deduplicate), capped because it is exponential.
"""

from __future__ import annotations

from .errors import NonSerialError, SizeError, UnknownLabelError
from .frames import TimeFrame
from .poset import ENUM_CAP, Poset, bits
from .tense import TenseOp


class DMLattice:
    """The closed-set lattice of a base poset plus the embedding table."""

    __slots__ = ("base", "closed", "position", "lattice", "embedding")

    def __init__(self, base: Poset, closed):
        self.base = base
        self.closed = tuple(closed)
        self.position = {mask: i for i, mask in enumerate(self.closed)}
        labels = tuple("{" + ",".join(str(base.labels[b]) for b in bits(mask)) + "}"
                       for mask in self.closed)
        up = []
        for mask in self.closed:
            row = 0
            for j, other in enumerate(self.closed):
                if mask & ~other == 0:
                    row |= 1 << j
            up.append(row)
        self.lattice = Poset(labels, up)
        self.embedding = tuple(self.position[base.dn[x]] for x in range(base.n))

    def __len__(self):
        return len(self.closed)

    def index_of(self, mask: int) -> int:
        try:
            return self.position[mask]
        except KeyError:
            raise UnknownLabelError(f"{mask:b} is not a closed set") from None

    def closure_index(self, mask: int) -> int:
        return self.position[self.base.lu(mask)]

    def embed(self, x: int) -> int:
        return self.embedding[x]

    def join(self, i: int, j: int) -> int:
        return self.position[self.base.lu(self.closed[i] | self.closed[j])]

    def meet(self, i: int, j: int) -> int:
        return self.position[self.closed[i] & self.closed[j]]

    def join_masks(self, x: int, y: int) -> int:
        return self.base.lu(x | y)

    def meet_masks(self, x: int, y: int) -> int:
        return x & y

    @property
    def bottom_mask(self) -> int:
        return self.base.lu(0)

    @property
    def top_mask(self) -> int:
        return self.base.full


def dm_complete(p: Poset, cap: int = ENUM_CAP) -> DMLattice:
    """Enumerate all closed subsets of ``p`` and build the lattice."""
    if p.n > cap:
        raise SizeError(f"carrier has {p.n} elements, cap is {cap}")
    seen = set()
    for mask in range(1 << p.n):
        seen.add(p.lu(mask))
    closed = sorted(seen, key=lambda m: (m.bit_count(), m))
    return DMLattice(p, closed)


def dm_join(d: DMLattice, x: int, y: int) -> int:
    """Join of two closed sets, given and returned as masks."""
    return d.join_masks(x, y)


def dm_meet(d: DMLattice, x: int, y: int) -> int:
    return d.meet_masks(x, y)


def _hat_raw(op: TenseOp, d: DMLattice, f: TimeFrame, traj):
    rel = f.pred if op.uses_past else f.succ
    out = []
    for s in range(f.m):
        if op.is_existential:
            acc = 0
            for t in bits(rel[s]):
                acc |= traj[t]
            out.append(d.base.lu(acc))
        else:
            acc = d.base.full
            for t in bits(rel[s]):
                acc &= traj[t]
            out.append(acc)
    return tuple(out)


def hat_tense(op: TenseOp, d: DMLattice, f: TimeFrame, traj) -> tuple:
    """Evaluate a lattice-side tense operator on a closed-set trajectory.

    Existential operators take the join (closure of the union) over the
    relevant points, universal ones the meet (intersection).  Slices are
    masks of closed sets of the base poset.
    """
    if not f.serial:
        raise NonSerialError("time frame is not serial")
    for x in traj:
        if x not in d.position:
            raise UnknownLabelError("trajectory slice is not a closed set")
    return _hat_raw(op, d, f, traj)
