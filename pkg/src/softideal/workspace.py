"""Line-oriented workspace files.

One declaration per line, ``#`` starts a comment::

    universe x1 x2 x3
    params s1 s2
    softset G { s1: x1 ; s2: x1 x3 }
    softset E {}
    space G
    topology T = { E G }
    epset A = mod(4: 2) + finite(1 3)
    ideal I = gens(mod(2: 0); A)
    seq W = prefix[x1@s1] pattern[x1@s1 x3@s2]

Names must be declared before use.  Without a ``space`` line the ambient set is the
absolute soft set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .convergence import EpSoftSeq
from .errors import AxiomViolation, SoftIdealError
from .ideals import Ideal, parse_ideal
from .natset import EpSet, format_epset, parse_epset
from .softset import (
    ParameterSet,
    SoftPoint,
    SoftSet,
    Universe,
    absolute_soft_set,
    make_soft_set,
)
from .topology import SoftTopology, topology_new


class WorkspaceError(SoftIdealError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass
class Workspace:
    universe: Universe | None = None
    params: ParameterSet | None = None
    softsets: dict[str, SoftSet] = field(default_factory=dict)
    space_name: str | None = None
    topologies: dict[str, SoftTopology] = field(default_factory=dict)
    topology_members: dict[str, list[str]] = field(default_factory=dict)
    ideals: dict[str, Ideal] = field(default_factory=dict)
    epsets: dict[str, EpSet] = field(default_factory=dict)
    sequences: dict[str, EpSoftSeq] = field(default_factory=dict)
    # only populated when parsed with strict=False
    invalid_topologies: dict[str, AxiomViolation] = field(default_factory=dict, compare=False)

    @property
    def space(self) -> SoftSet:
        if self.space_name is not None:
            return self.softsets[self.space_name]
        if self.universe is None or self.params is None:
            raise SoftIdealError("workspace declares no universe/params")
        return absolute_soft_set(self.universe, self.params)

    def lookup(self, kind: str, name: str):
        table = {
            "softset": self.softsets,
            "topology": self.topologies,
            "ideal": self.ideals,
            "epset": self.epsets,
            "seq": self.sequences,
        }[kind]
        if name not in table:
            if kind == "topology" and name in self.invalid_topologies:
                raise self.invalid_topologies[name]
            raise SoftIdealError(f"unknown {kind} {name!r}")
        return table[name]


_NAME = r"[A-Za-z_][\w.']*"
_DECL = re.compile(r"^(?P<kw>universe|params|softset|space|topology|epset|ideal|seq)\b\s*(?P<rest>.*)$")
_SOFTSET = re.compile(rf"^(?P<name>{_NAME})\s*\{{(?P<body>[^}}]*)\}}$")
_ASSIGN = re.compile(rf"^(?P<name>{_NAME})\s*=\s*(?P<body>.+)$")
_TOPO_BODY = re.compile(r"^\{(?P<body>[^}]*)\}$")
_SEQ_BODY = re.compile(r"^(?:prefix\[(?P<prefix>[^\]]*)\]\s*)?pattern\[(?P<pattern>[^\]]*)\]$")


def parse_workspace(text: str, strict: bool = True) -> Workspace:
    """Parse a workspace.  With ``strict=False`` topology axiom failures are recorded
    in ``invalid_topologies`` instead of raised."""
    ws = Workspace()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        try:
            _parse_line(ws, line, strict)
        except WorkspaceError:
            raise
        except AxiomViolation as exc:
            raise WorkspaceError(lineno, col, str(exc)) from exc
        except SoftIdealError as exc:
            raise WorkspaceError(lineno, col, str(exc)) from exc
    return ws


def _declare(ws: Workspace, table: dict, name: str) -> None:
    if name in table or (table is ws.topologies and name in ws.invalid_topologies):
        raise SoftIdealError(f"duplicate name {name!r}")


def _require_context(ws: Workspace) -> tuple[Universe, ParameterSet]:
    if ws.universe is None or ws.params is None:
        raise SoftIdealError("'universe' and 'params' must come first")
    return ws.universe, ws.params


def _parse_line(ws: Workspace, line: str, strict: bool) -> None:
    m = _DECL.match(line)
    if not m:
        raise SoftIdealError(f"unknown declaration {line.split()[0]!r}")
    kw, rest = m.group("kw"), m.group("rest").strip()
    if kw == "universe":
        if ws.universe is not None:
            raise SoftIdealError("universe declared twice")
        ws.universe = Universe(rest.split())
    elif kw == "params":
        if ws.params is not None:
            raise SoftIdealError("params declared twice")
        ws.params = ParameterSet(rest.split())
    elif kw == "softset":
        u, s = _require_context(ws)
        sm = _SOFTSET.match(rest)
        if not sm:
            raise SoftIdealError("expected: softset <name> { <param>: <elem>* ; ... }")
        name = sm.group("name")
        _declare(ws, ws.softsets, name)
        entries = []
        for chunk in sm.group("body").split(";"):
            if not chunk.strip():
                continue
            param, sep, elems = chunk.partition(":")
            if not sep:
                raise SoftIdealError(f"missing ':' in {chunk.strip()!r}")
            entries.append((param.strip(), elems.split()))
        ws.softsets[name] = make_soft_set(u, s, entries)
    elif kw == "space":
        _require_context(ws)
        if ws.space_name is not None:
            raise SoftIdealError("space declared twice")
        if rest not in ws.softsets:
            raise SoftIdealError(f"unknown softset {rest!r}")
        ws.space_name = rest
    else:
        am = _ASSIGN.match(rest)
        if not am:
            raise SoftIdealError(f"expected: {kw} <name> = ...")
        name, body = am.group("name"), am.group("body").strip()
        if kw == "topology":
            _require_context(ws)
            _declare(ws, ws.topologies, name)
            tm = _TOPO_BODY.match(body)
            if not tm:
                raise SoftIdealError("expected: topology <name> = { <softset>+ }")
            members = tm.group("body").split()
            opens = []
            for ref in members:
                if ref not in ws.softsets:
                    raise SoftIdealError(f"unknown softset {ref!r}")
                opens.append(ws.softsets[ref])
            ws.topology_members[name] = members
            try:
                ws.topologies[name] = topology_new(ws.space, opens)
            except AxiomViolation as exc:
                if strict:
                    raise
                ws.invalid_topologies[name] = exc
        elif kw == "epset":
            _declare(ws, ws.epsets, name)
            ws.epsets[name] = parse_epset(body, ws.epsets)
        elif kw == "ideal":
            _declare(ws, ws.ideals, name)
            ws.ideals[name] = parse_ideal(body, ws.epsets)
        elif kw == "seq":
            _require_context(ws)
            _declare(ws, ws.sequences, name)
            sq = _SEQ_BODY.match(body)
            if not sq:
                raise SoftIdealError("expected: seq <name> = prefix[...] pattern[...]")
            prefix = [SoftPoint.parse(tok) for tok in (sq.group("prefix") or "").split()]
            pattern = [SoftPoint.parse(tok) for tok in sq.group("pattern").split()]
            ws.sequences[name] = EpSoftSeq(ws.space, prefix, pattern)


def serialize_workspace(ws: Workspace) -> str:
    lines = []
    if ws.universe is not None:
        lines.append("universe " + " ".join(ws.universe.elements))
    if ws.params is not None:
        lines.append("params " + " ".join(ws.params.params))
    for name, a in ws.softsets.items():
        lines.append(f"softset {name} {a}")
    if ws.space_name is not None:
        lines.append(f"space {ws.space_name}")
    for name, a in ws.epsets.items():
        lines.append(f"epset {name} = {format_epset(a)}")
    for name, i in ws.ideals.items():
        lines.append(f"ideal {name} = {i}")
    for name, members in ws.topology_members.items():
        lines.append(f"topology {name} = {{ {' '.join(members)} }}")
    for name, w in ws.sequences.items():
        lines.append(f"seq {name} = {w}")
    return "\n".join(lines) + "\n"


def serialize_instance(t: SoftTopology, w: EpSoftSeq | None = None, i: Ideal | None = None,
                       comments: list[str] | None = None) -> str:
    """Standalone workspace holding one topology (and optionally a sequence and an ideal)."""
    space = t.space
    lines = [f"# {c}" for c in comments or []]
    lines.append("universe " + " ".join(space.universe.elements))
    lines.append("params " + " ".join(space.params.params))
    lines.append(f"softset G {space}")
    lines.append("space G")
    names = []
    for k, o in enumerate(t.opens):
        if o == space:
            names.append("G")
            continue
        lines.append(f"softset O{k} {o}")
        names.append(f"O{k}")
    lines.append(f"topology T = {{ {' '.join(names)} }}")
    if i is not None:
        lines.append(f"ideal I = {i}")
    if w is not None:
        lines.append(f"seq W = {w}")
    return "\n".join(lines) + "\n"
