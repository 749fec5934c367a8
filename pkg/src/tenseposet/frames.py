"""Time frames: a finite point set with an arbitrary binary relation.

No order axioms are imposed on the relation; callers opt into seriality or
reflexivity per operation.  Points are dense indices with surface labels,
and the relation is stored as successor/predecessor bitmask rows.
"""

from __future__ import annotations

from .errors import RelationError, UnknownLabelError
from .poset import bits


class TimeFrame:
    __slots__ = ("labels", "m", "full", "succ", "pred", "serial", "reflexive",
                 "_index")

    def __init__(self, labels, succ):
        labels = tuple(labels)
        m = len(labels)
        if len(set(labels)) != m:
            raise RelationError("duplicate point labels")
        self.labels = labels
        self.m = m
        self.full = (1 << m) - 1
        self.succ = tuple(succ)
        pred = [0] * m
        for s in range(m):
            for t in bits(self.succ[s]):
                pred[t] |= 1 << s
        self.pred = tuple(pred)
        self.serial = all(self.succ[s] and self.pred[s] for s in range(m))
        self.reflexive = all(self.succ[s] >> s & 1 for s in range(m))
        self._index = {lab: i for i, lab in enumerate(labels)}

    @classmethod
    def from_pairs(cls, labels, pairs):
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        succ = [0] * len(labels)
        for a, b in pairs:
            if a not in index or b not in index:
                raise UnknownLabelError(f"unknown point in pair {a}->{b}")
            succ[index[a]] |= 1 << index[b]
        return cls(labels, succ)

    def rel(self, s: int, t: int) -> bool:
        return bool(self.succ[s] >> t & 1)

    def pairs(self):
        return [(self.labels[s], self.labels[t])
                for s in range(self.m) for t in bits(self.succ[s])]

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown point {label!r}") from None

    def invert(self) -> "TimeFrame":
        """Transpose the relation; seriality is preserved."""
        return TimeFrame(self.labels, self.pred)

    def __eq__(self, other):
        return (isinstance(other, TimeFrame) and self.labels == other.labels
                and self.succ == other.succ)

    def __hash__(self):
        return hash((self.labels, self.succ))

    def __repr__(self):
        tags = [t for t, on in (("serial", self.serial),
                                ("reflexive", self.reflexive)) if on]
        return f"TimeFrame({self.m} points{', ' + ', '.join(tags) if tags else ''})"


def build_frame(labels, pairs) -> TimeFrame:
    return TimeFrame.from_pairs(labels, pairs)
