"""Finite posets as bitmask structures.

Elements are dense indices 0..n-1; labels are surface syntax only.  Subsets
of the carrier are plain ints used as bitmasks, which keeps every cone and
extremal-element query a handful of word operations.  A ``Poset`` is
immutable after construction and safe to share.

Conventions: the lower/upper cone of the empty subset is the whole carrier
(vacuous quantification), which the completion and serial-edge machinery
rely on.
"""

from __future__ import annotations

from .errors import CycleError, RelationError, SizeError, UnknownLabelError

ENUM_CAP = 12  # default cap for exponential (per-subset) checks
PRODUCT_CAP = 1024


def bits(mask: int):
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Poset:
    """A finite partial order with optional bounds and antitone involution."""

    __slots__ = ("labels", "n", "full", "up", "dn", "bottom", "top",
                 "involution", "_index")

    def __init__(self, labels, up, involution=None):
        labels = tuple(labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise RelationError("duplicate element labels")
        self.labels = labels
        self.n = n
        self.full = (1 << n) - 1
        self.up = tuple(up)
        dn = [0] * n
        for i in range(n):
            for j in bits(self.up[i]):
                dn[j] |= 1 << i
        self.dn = tuple(dn)
        self._check_order()
        self.bottom = next((i for i in range(n) if self.up[i] == self.full), None)
        self.top = next((i for i in range(n) if self.dn[i] == self.full), None)
        self.involution = None
        if involution is not None:
            self.involution = tuple(involution)
            self._check_involution()
        self._index = {lab: i for i, lab in enumerate(labels)}

    # -- construction ----------------------------------------------------

    @classmethod
    def from_covers(cls, labels, covers, involution=None):
        """Reflexive-transitive closure of cover pairs (label pairs a < b)."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        if len(index) != n:
            raise RelationError("duplicate element labels")
        up = [1 << i for i in range(n)]
        for a, b in covers:
            if a not in index or b not in index:
                raise UnknownLabelError(f"unknown element in cover {a}<{b}")
            up[index[a]] |= 1 << index[b]
        for k in range(n):
            bk = 1 << k
            for i in range(n):
                if up[i] & bk:
                    up[i] |= up[k]
        for i in range(n):
            for j in bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise CycleError(
                        f"antisymmetry fails: {labels[i]} <= {labels[j]} <= {labels[i]}")
        return cls(labels, up, involution)

    @classmethod
    def from_relation(cls, labels, pairs, involution=None):
        """Take ``pairs`` as the entire order relation; no closure is applied."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        up = [0] * n
        for a, b in pairs:
            if a not in index or b not in index:
                raise UnknownLabelError(f"unknown element in pair {a}<{b}")
            up[index[a]] |= 1 << index[b]
        for i in range(n):
            if not up[i] >> i & 1:
                raise RelationError(f"relation not reflexive at {labels[i]}")
        for i in range(n):
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    k = next(bits(up[j] & ~up[i]))
                    raise RelationError(
                        "relation not transitive: "
                        f"{labels[i]} <= {labels[j]} <= {labels[k]}")
                if j != i and up[j] >> i & 1:
                    raise RelationError(
                        f"relation not antisymmetric at {labels[i]},{labels[j]}")
        return cls(labels, up, involution)

    @classmethod
    def product(cls, posets, cap: int = PRODUCT_CAP):
        """Componentwise order on the cartesian product of the carriers."""
        if not posets:
            raise ValueError("product of an empty family")
        size = 1
        for p in posets:
            size *= p.n
        if size > cap:
            raise SizeError(f"product carrier has {size} elements, cap is {cap}")
        combos = [()]
        for p in posets:
            combos = [c + (i,) for c in combos for i in range(p.n)]
        labels = tuple("(" + ",".join(str(p.labels[i]) for p, i in zip(posets, c)) + ")"
                       for c in combos)
        up = []
        for c in combos:
            mask = 0
            for j, d in enumerate(combos):
                if all(p.up[ci] >> di & 1 for p, ci, di in zip(posets, c, d)):
                    mask |= 1 << j
            up.append(mask)
        inv = None
        if all(p.involution is not None for p in posets):
            pos = {d: j for j, d in enumerate(combos)}
            inv = tuple(pos[tuple(p.involution[ci] for p, ci in zip(posets, c))]
                        for c in combos)
        return cls(labels, up, inv)

    # -- validation ------------------------------------------------------

    def _check_order(self):
        for i in range(self.n):
            if not self.up[i] >> i & 1:
                raise RelationError(f"not reflexive at {self.labels[i]}")
            if self.up[i] & self.dn[i] != 1 << i:
                j = next(b for b in bits(self.up[i] & self.dn[i]) if b != i)
                raise RelationError(
                    f"not antisymmetric at {self.labels[i]},{self.labels[j]}")
            for j in bits(self.up[i]):
                if self.up[j] & ~self.up[i]:
                    raise RelationError(f"not transitive at {self.labels[i]}")

    def _check_involution(self):
        inv = self.involution
        if sorted(inv) != list(range(self.n)):
            raise RelationError("involution is not a permutation")
        for i in range(self.n):
            if inv[inv[i]] != i:
                raise RelationError(f"involution not involutive at {self.labels[i]}")
            for j in bits(self.up[i]):
                if not self.up[inv[j]] >> inv[i] & 1:
                    raise RelationError(
                        f"involution not antitone at {self.labels[i]}<={self.labels[j]}")

    def check_complementation(self):
        """Involution must satisfy x v x' = 1 and x ^ x' = 0."""
        if self.involution is None:
            raise RelationError("no involution declared")
        if self.bottom is None or self.top is None:
            raise RelationError("complementation requires a bounded poset")
        for i in range(self.n):
            pair = (1 << i) | (1 << self.involution[i])
            if self.upper_cone(pair) != 1 << self.top:
                raise RelationError(f"{self.labels[i]} v {self.labels[i]}' != 1")
            if self.lower_cone(pair) != 1 << self.bottom:
                raise RelationError(f"{self.labels[i]} ^ {self.labels[i]}' != 0")

    # -- basic queries ---------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def leq_matrix(self):
        """The relation as a row-major list of boolean lists."""
        return [[bool(self.up[i] >> j & 1) for j in range(self.n)]
                for i in range(self.n)]

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown element {label!r}") from None

    def mask_of(self, labels) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def set_of(self, mask: int):
        return [self.labels[i] for i in bits(mask)]

    def covers(self):
        """Cover pairs (label pairs) reconstructed from the relation."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            for j in bits(strict):
                between = strict & self.dn[j] & ~(1 << j)
                if not between:
                    out.append((self.labels[i], self.labels[j]))
        return out

    # -- cones and extremal elements --------------------------------------

    def lower_cone(self, x: int) -> int:
        m = self.full
        for i in bits(x):
            m &= self.dn[i]
        return m

    def upper_cone(self, x: int) -> int:
        m = self.full
        for i in bits(x):
            m &= self.up[i]
        return m

    def down_closure(self, x: int) -> int:
        m = 0
        for i in bits(x):
            m |= self.dn[i]
        return m

    def up_closure(self, x: int) -> int:
        m = 0
        for i in bits(x):
            m |= self.up[i]
        return m

    def maximals(self, x: int) -> int:
        m = 0
        for i in bits(x):
            if self.up[i] & x == 1 << i:
                m |= 1 << i
        return m

    def minimals(self, x: int) -> int:
        m = 0
        for i in bits(x):
            if self.dn[i] & x == 1 << i:
                m |= 1 << i
        return m

    def lu(self, x: int) -> int:
        return self.lower_cone(self.upper_cone(x))

    def ul(self, x: int) -> int:
        return self.upper_cone(self.lower_cone(x))

    def min_u(self, x: int) -> int:
        return self.minimals(self.upper_cone(x))

    def max_l(self, x: int) -> int:
        return self.maximals(self.lower_cone(x))

    def is_antichain(self, x: int) -> bool:
        for i in bits(x):
            if self.up[i] & x != 1 << i:
                return False
        return True

    def apply_involution(self, x: int) -> int:
        m = 0
        for i in bits(x):
            m |= 1 << self.involution[i]
        return m

    # -- derived posets ----------------------------------------------------

    def dual(self) -> "Poset":
        return Poset(self.labels, self.dn, self.involution)

    def is_mlub_complete(self, cap: int = ENUM_CAP) -> bool:
        """Exhaustively verify the minimal-upper/maximal-lower bound property.

        Any finite poset satisfies it; the point of this check is that the
        definition itself is evaluated, subset by subset.
        """
        if self.n > cap:
            raise SizeError(f"carrier has {self.n} elements, cap is {cap}")
        for m in range(1, self.full + 1):
            um = self.upper_cone(m)
            min_um = self.minimals(um)
            for x in bits(um):
                if not self.dn[x] & min_um:
                    return False
            lm = self.lower_cone(m)
            max_lm = self.maximals(lm)
            for x in bits(lm):
                if not self.up[x] & max_lm:
                    return False
        return True

    # -- misc --------------------------------------------------------------

    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.labels == other.labels
                and self.up == other.up and self.involution == other.involution)

    def __hash__(self):
        return hash((self.labels, self.up, self.involution))

    def __repr__(self):
        return f"Poset({len(self.labels)} elements)"


def build_poset(labels, pairs, mode: str = "covers", involution=None) -> Poset:
    """Build a poset from cover pairs or from a full relation.

    ``mode='covers'`` closes the pairs reflexively and transitively;
    ``mode='full'`` takes them verbatim and validates the order axioms.
    Bottom and top are detected automatically when they exist.
    """
    if mode == "covers":
        return Poset.from_covers(labels, pairs, involution)
    if mode == "full":
        return Poset.from_relation(labels, pairs, involution)
    raise ValueError(f"unknown mode {mode!r}")
