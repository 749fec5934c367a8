"""Plain-text instance format: posets, frames, propositions, families and
residuated tables, plus a JSON mirror for machine consumers.

Grammar (``#`` starts a comment, whitespace is free):

    poset NAME { elements: id+ ; covers: id<id (, id<id)* ;
                 [rel: id<id (, id<id)* ;] [involution: id:id (, id:id)* ;] }
    frame NAME { points: id+ ; rel: id->id (, id->id)* ; }
    prop NAME over POSET,FRAME = [ id (, id)* ];
    family NAME = { propname (, propname)* };
    residuated NAME over POSET { times: id id id ; ... arrow: id id id ; ... }

A poset block uses either ``covers`` (closed reflexively and transitively)
or ``rel`` (the full relation, validated as given).  Residuated blocks list
one ``x y result`` row per line and must cover every cell of both tables.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import ArityError, ParseError, ResolveError, UnknownLabelError
from .frames import TimeFrame
from .poset import Poset, bits
from .residuated import ResiduatedPoset

_IDENT = re.compile(r"[A-Za-z0-9_]+")
_PUNCT = ("->", "{", "}", ";", ":", ",", "<", "=", "[", "]")


@dataclass(frozen=True)
class PropDecl:
    name: str
    poset: str
    frame: str
    values: tuple  # element indices, one per time point


@dataclass(frozen=True)
class FamilyDecl:
    name: str
    members: tuple  # proposition names


@dataclass(frozen=True)
class ResiduatedDecl:
    name: str
    poset: str
    table: ResiduatedPoset


@dataclass
class InstanceFile:
    posets: dict = field(default_factory=dict)
    frames: dict = field(default_factory=dict)
    props: dict = field(default_factory=dict)
    families: dict = field(default_factory=dict)
    residuated: dict = field(default_factory=dict)
    locations: dict = field(default_factory=dict)

    def __eq__(self, other):
        return (isinstance(other, InstanceFile)
                and self.posets == other.posets and self.frames == other.frames
                and self.props == other.props and self.families == other.families
                and {k: (d.poset, d.table.base, d.table.times, d.table.arrow)
                     for k, d in self.residuated.items()}
                == {k: (d.poset, d.table.base, d.table.times, d.table.arrow)
                    for k, d in other.residuated.items()})

    def family_members(self, name: str):
        decl = self.families[name]
        return [self.props[m] for m in decl.members]


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind, self.value, self.line, self.col = kind, value, line, col


def _tokenize(text: str):
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        col = 0
        while col < len(line):
            ch = line[col]
            if ch == "#":
                break
            if ch.isspace():
                col += 1
                continue
            m = _IDENT.match(line, col)
            if m:
                tokens.append(_Token("ident", m.group(), lineno, col + 1))
                col = m.end()
                continue
            for punct in _PUNCT:
                if line.startswith(punct, col):
                    tokens.append(_Token(punct, punct, lineno, col + 1))
                    col += len(punct)
                    break
            else:
                raise ParseError(f"unexpected character {ch!r}", lineno, col + 1)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _error(self, message):
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            line = last.line if last else 1
            col = last.col + len(last.value) if last else 1
            raise ParseError(f"{message}, found end of input", line, col)
        raise ParseError(f"{message}, found {tok.value!r}", tok.line, tok.col)

    def _take(self, kind, message=None):
        tok = self._peek()
        if tok is None or tok.kind != kind:
            self._error(message or f"expected {kind!r}")
        self.pos += 1
        return tok

    def _take_ident(self, what="identifier"):
        return self._take("ident", f"expected {what}")

    def _keyword(self, word):
        tok = self._take_ident(f"keyword {word!r}")
        if tok.value != word:
            self.pos -= 1
            self._error(f"expected keyword {word!r}")
        return tok

    def _at_keyword(self, word):
        tok = self._peek()
        return tok is not None and tok.kind == "ident" and tok.value == word

    def parse(self) -> InstanceFile:
        inst = InstanceFile()
        while self._peek() is not None:
            tok = self._peek()
            if tok.kind != "ident":
                self._error("expected a declaration")
            handler = {"poset": self._poset, "frame": self._frame,
                       "prop": self._prop, "family": self._family,
                       "residuated": self._residuated}.get(tok.value)
            if handler is None:
                self._error("expected poset/frame/prop/family/residuated")
            handler(inst)
        return inst

    def _declare(self, inst, kind, name_tok):
        store = getattr(inst, kind)
        if name_tok.value in store:
            raise ParseError(f"duplicate {kind[:-1]} {name_tok.value!r}",
                             name_tok.line, name_tok.col)
        inst.locations[(kind, name_tok.value)] = (name_tok.line, name_tok.col)

    def _label_list(self, stop_kind=";"):
        labels = []
        while self._peek() is not None and self._peek().kind == "ident":
            labels.append(self._take("ident").value)
        if not labels:
            self._error("expected at least one identifier")
        self._take(stop_kind)
        return labels

    def _pair_list(self, sep):
        pairs = []
        while True:
            a = self._take_ident("element").value
            self._take(sep)
            b = self._take_ident("element").value
            pairs.append((a, b))
            if self._peek() is not None and self._peek().kind == ",":
                self.pos += 1
                continue
            break
        self._take(";")
        return pairs

    def _poset(self, inst):
        self._keyword("poset")
        name = self._take_ident("poset name")
        self._declare(inst, "posets", name)
        self._take("{")
        self._keyword("elements")
        self._take(":")
        labels = self._label_list()
        covers, relation, involution = None, None, None
        while not (self._peek() is not None and self._peek().kind == "}"):
            tok = self._take_ident("covers/rel/involution")
            self._take(":")
            if tok.value == "covers":
                covers = self._pair_list("<")
            elif tok.value == "rel":
                relation = self._pair_list("<")
            elif tok.value == "involution":
                involution = self._pair_list(":")
            else:
                self.pos -= 2
                self._error("expected covers/rel/involution")
        self._take("}")
        inv = None
        if involution is not None:
            index = {lab: i for i, lab in enumerate(labels)}
            inv = list(range(len(labels)))
            for a, b in involution:
                if a not in index or b not in index:
                    raise ResolveError(f"involution mentions unknown element in {name.value!r}")
                inv[index[a]] = index[b]
                inv[index[b]] = index[a]
        try:
            if relation is not None and covers is not None:
                raise ResolveError(f"poset {name.value!r} gives both covers and rel")
            if relation is not None:
                reflexive = relation + [(lab, lab) for lab in labels]
                poset = Poset.from_relation(labels, reflexive, inv)
            else:
                poset = Poset.from_covers(labels, covers or [], inv)
        except UnknownLabelError as exc:
            raise ResolveError(f"poset {name.value!r}: {exc}") from exc
        inst.posets[name.value] = poset

    def _frame(self, inst):
        self._keyword("frame")
        name = self._take_ident("frame name")
        self._declare(inst, "frames", name)
        self._take("{")
        self._keyword("points")
        self._take(":")
        labels = self._label_list()
        pairs = []
        if self._at_keyword("rel"):
            self.pos += 1
            self._take(":")
            pairs = self._pair_list("->")
        self._take("}")
        try:
            inst.frames[name.value] = TimeFrame.from_pairs(labels, pairs)
        except UnknownLabelError as exc:
            raise ResolveError(f"frame {name.value!r}: {exc}") from exc

    def _prop(self, inst):
        self._keyword("prop")
        name = self._take_ident("proposition name")
        self._declare(inst, "props", name)
        self._keyword("over")
        poset_name = self._take_ident("poset name").value
        self._take(",")
        frame_name = self._take_ident("frame name").value
        self._take("=")
        self._take("[")
        values = [self._take_ident("element").value]
        while self._peek() is not None and self._peek().kind == ",":
            self.pos += 1
            values.append(self._take_ident("element").value)
        self._take("]")
        self._take(";")
        if poset_name not in inst.posets:
            raise ResolveError(f"prop {name.value!r} references unknown poset {poset_name!r}")
        if frame_name not in inst.frames:
            raise ResolveError(f"prop {name.value!r} references unknown frame {frame_name!r}")
        poset = inst.posets[poset_name]
        frame = inst.frames[frame_name]
        if len(values) != frame.m:
            raise ArityError(
                f"prop {name.value!r} has {len(values)} values for {frame.m} points")
        try:
            indices = tuple(poset.index(v) for v in values)
        except UnknownLabelError as exc:
            raise ResolveError(f"prop {name.value!r}: {exc}") from exc
        inst.props[name.value] = PropDecl(name.value, poset_name, frame_name, indices)

    def _family(self, inst):
        self._keyword("family")
        name = self._take_ident("family name")
        self._declare(inst, "families", name)
        self._take("=")
        self._take("{")
        members = [self._take_ident("proposition name").value]
        while self._peek() is not None and self._peek().kind == ",":
            self.pos += 1
            members.append(self._take_ident("proposition name").value)
        self._take("}")
        self._take(";")
        for member in members:
            if member not in inst.props:
                raise ResolveError(f"family {name.value!r} references unknown prop {member!r}")
        anchors = {(inst.props[m].poset, inst.props[m].frame) for m in members}
        if len(anchors) != 1:
            raise ResolveError(f"family {name.value!r} mixes posets or frames")
        seen, unique = set(), []
        for member in members:
            if member not in seen:
                seen.add(member)
                unique.append(member)
        inst.families[name.value] = FamilyDecl(name.value, tuple(unique))

    def _residuated(self, inst):
        self._keyword("residuated")
        name = self._take_ident("residuated name")
        self._declare(inst, "residuated", name)
        self._keyword("over")
        poset_name = self._take_ident("poset name").value
        if poset_name not in inst.posets:
            raise ResolveError(
                f"residuated {name.value!r} references unknown poset {poset_name!r}")
        poset = inst.posets[poset_name]
        n = poset.n
        tables = {"times": [[None] * n for _ in range(n)],
                  "arrow": [[None] * n for _ in range(n)]}
        self._take("{")
        while not (self._peek() is not None and self._peek().kind == "}"):
            kind = self._take_ident("times/arrow")
            if kind.value not in tables:
                self.pos -= 1
                self._error("expected times/arrow")
            self._take(":")
            row = [self._take_ident("element").value for _ in range(3)]
            self._take(";")
            try:
                x, y, z = (poset.index(v) for v in row)
            except UnknownLabelError as exc:
                raise ResolveError(f"residuated {name.value!r}: {exc}") from exc
            tables[kind.value][x][y] = z
        self._take("}")
        for kind, table in tables.items():
            for x in range(n):
                for y in range(n):
                    if table[x][y] is None:
                        raise ResolveError(
                            f"residuated {name.value!r} is missing {kind} cell "
                            f"{poset.labels[x]},{poset.labels[y]}")
        inst.residuated[name.value] = ResiduatedDecl(
            name.value, poset_name,
            ResiduatedPoset(poset, tables["times"], tables["arrow"]))


def parse(text: str) -> InstanceFile:
    return _Parser(text).parse()


def _safe_labels(labels):
    if all(_IDENT.fullmatch(str(lab)) for lab in labels):
        return [str(lab) for lab in labels]
    return [f"x{i}" for i in range(len(labels))]


def serialize(inst: InstanceFile) -> str:
    """Canonical text form; parse(serialize(x)) is structurally equal to x
    provided all labels are plain identifiers."""
    out = []
    for name, poset in inst.posets.items():
        labels = _safe_labels(poset.labels)
        parts = [f"poset {name} {{ elements: {' '.join(labels)} ;"]
        covers = [(labels[poset.index(a)], labels[poset.index(b)])
                  for a, b in poset.covers()]
        if covers:
            parts.append("covers: " + ", ".join(f"{a}<{b}" for a, b in covers) + " ;")
        if poset.involution is not None:
            pairs = []
            for i, j in enumerate(poset.involution):
                if i <= j and i != j:
                    pairs.append(f"{labels[i]}:{labels[j]}")
            if pairs:
                parts.append("involution: " + ", ".join(pairs) + " ;")
        parts.append("}")
        out.append(" ".join(parts))
    for name, frame in inst.frames.items():
        labels = _safe_labels(frame.labels)
        parts = [f"frame {name} {{ points: {' '.join(labels)} ;"]
        pairs = [(labels[s], labels[t])
                 for s in range(frame.m) for t in bits(frame.succ[s])]
        if pairs:
            parts.append("rel: " + ", ".join(f"{a}->{b}" for a, b in pairs) + " ;")
        parts.append("}")
        out.append(" ".join(parts))
    for name, decl in inst.props.items():
        labels = _safe_labels(inst.posets[decl.poset].labels)
        values = ", ".join(labels[i] for i in decl.values)
        out.append(f"prop {name} over {decl.poset},{decl.frame} = [ {values} ];")
    for name, decl in inst.families.items():
        out.append(f"family {name} = {{ {', '.join(decl.members)} }};")
    for name, decl in inst.residuated.items():
        labels = _safe_labels(decl.table.base.labels)
        lines = [f"residuated {name} over {decl.poset} {{"]
        for kind, table in (("times", decl.table.times), ("arrow", decl.table.arrow)):
            for x, row in enumerate(table):
                for y, z in enumerate(row):
                    lines.append(f"  {kind}: {labels[x]} {labels[y]} {labels[z]} ;")
        lines.append("}")
        out.append("\n".join(lines))
    return "\n".join(out) + ("\n" if out else "")


def to_json(inst: InstanceFile) -> dict:
    """JSON mirror with stable field names; see the schema in the README."""
    doc = {"posets": [], "frames": [], "props": [], "families": [],
           "residuated": []}
    for name, poset in inst.posets.items():
        entry = {"name": name,
                 "elements": [str(lab) for lab in poset.labels],
                 "leq": [[int(v) for v in row] for row in poset.leq_matrix()],
                 "bottom": None if poset.bottom is None else str(poset.labels[poset.bottom]),
                 "top": None if poset.top is None else str(poset.labels[poset.top])}
        if poset.involution is not None:
            entry["involution"] = [str(poset.labels[j]) for j in poset.involution]
        doc["posets"].append(entry)
    for name, frame in inst.frames.items():
        doc["frames"].append({
            "name": name,
            "points": [str(lab) for lab in frame.labels],
            "rel": [[str(a), str(b)] for a, b in frame.pairs()],
            "serial": frame.serial,
            "reflexive": frame.reflexive})
    for name, decl in inst.props.items():
        labels = inst.posets[decl.poset].labels
        doc["props"].append({"name": name, "poset": decl.poset,
                             "frame": decl.frame,
                             "values": [str(labels[i]) for i in decl.values]})
    for name, decl in inst.families.items():
        doc["families"].append({"name": name, "members": list(decl.members)})
    for name, decl in inst.residuated.items():
        labels = decl.table.base.labels
        doc["residuated"].append({
            "name": name, "poset": decl.poset,
            "times": [[str(labels[v]) for v in row] for row in decl.table.times],
            "arrow": [[str(labels[v]) for v in row] for row in decl.table.arrow]})
    return doc


def to_json_text(inst: InstanceFile) -> str:
    return json.dumps(to_json(inst), indent=2, sort_keys=False) + "\n"
