"""Agree/disagree, special 2-paths, and the "sees" relation.

Two vertices x, y agree on a common neighbor z when z carries the same
adjacency label from both; a special 2-path u-w-v is one whose endpoints
disagree on the middle vertex.  u sees v when they are adjacent or joined
by a special 2-path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import GraphInputError, NMGraph, label_of


@dataclass(frozen=True, order=True)
class SeeWitness:
    kind: str                 # "direct" or "via"
    via: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("direct", "via"):
            raise GraphInputError(f"bad witness kind {self.kind!r}")
        if (self.kind == "via") != (self.via is not None):
            raise GraphInputError("via witness needs an internal vertex")


class SeeingGraph:
    """Simple graph of seeing pairs with per-pair witness lists.

    Witness lists are ordered: direct first, then via-vertices ascending.
    """

    def __init__(self, vertex_count: int,
                 witnesses: dict[tuple[int, int], list[SeeWitness]]):
        self.vertex_count = vertex_count
        self.witnesses = witnesses
        self.adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for (u, v) in witnesses:
            self.adj[u].add(v)
            self.adj[v].add(u)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.witnesses)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def witnesses_for(self, u: int, v: int) -> list[SeeWitness]:
        return list(self.witnesses.get((min(u, v), max(u, v)), []))

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def agree(g: NMGraph, x: int, y: int, z: int) -> bool:
    """True iff z is an alpha-neighbor of both x and y for some alpha.

    Total by convention: false whenever z is not a common neighbor.
    """
    if len({x, y, z}) != 3:
        raise GraphInputError("agree requires three distinct vertices")
    lx = label_of(g, x, z)
    ly = label_of(g, y, z)
    return lx is not None and lx == ly


def is_special_2path(g: NMGraph, u: int, w: int, v: int) -> bool:
    """True iff u-w-v is a 2-path whose endpoints disagree on w."""
    if len({u, w, v}) != 3:
        raise GraphInputError("special 2-path requires three distinct vertices")
    lu = label_of(g, u, w)
    lv = label_of(g, v, w)
    return lu is not None and lv is not None and lu != lv


def sees(g: NMGraph, u: int, v: int) -> Optional[SeeWitness]:
    """First witness (direct, then ascending via-vertex), or None."""
    if u == v:
        raise GraphInputError("sees requires distinct vertices")
    if label_of(g, u, v) is not None:
        return SeeWitness("direct")
    nu = set(g.neighbors(u))
    for w in g.neighbors(v):
        if w in nu and g._label[(u, w)] != g._label[(v, w)]:
            return SeeWitness("via", w)
    return None


def seeing_graph(g: NMGraph, restrict_to=None) -> SeeingGraph:
    """Seeing graph on restrict_to (default: all vertices).

    Via-vertices of special 2-paths are not restricted; only the endpoint
    pairs are.  Enumerates pairs through common neighbors, O(sum deg^2).
    """
    if restrict_to is None:
        keep = None
    else:
        keep = set(restrict_to)
        for v in keep:
            g._check_vertex(v)

    witnesses: dict[tuple[int, int], list[SeeWitness]] = {}

    def pair_key(u, v):
        return (u, v) if u < v else (v, u)

    def in_scope(v):
        return keep is None or v in keep

    for (u, v, _t) in g.arcs:
        if in_scope(u) and in_scope(v):
            witnesses[pair_key(u, v)] = [SeeWitness("direct")]
    for (u, v, _t) in g.edges:
        if in_scope(u) and in_scope(v):
            witnesses[pair_key(u, v)] = [SeeWitness("direct")]

    via: dict[tuple[int, int], list[int]] = {}
    for w in range(g.vertex_count):
        nw = g.neighbors(w)
        for i in range(len(nw)):
            u = nw[i]
            if not in_scope(u):
                continue
            lu = g._label[(u, w)]
            for j in range(i + 1, len(nw)):
                v = nw[j]
                if not in_scope(v):
                    continue
                if lu != g._label[(v, w)]:
                    via.setdefault(pair_key(u, v), []).append(w)
    for key, ws in via.items():
        lst = witnesses.setdefault(key, [])
        lst.extend(SeeWitness("via", w) for w in sorted(ws))

    return SeeingGraph(g.vertex_count, witnesses)


def serialize_seeing(sg: SeeingGraph) -> str:
    """Edge list with witness comments, one seeing pair per line."""
    lines = [f"vertices {sg.vertex_count}"]
    for (u, v) in sg.edges():
        parts = []
        for w in sg.witnesses[(u, v)]:
            parts.append("direct" if w.kind == "direct" else f"via {w.via}")
        lines.append(f"see {u} {v}  # {'; '.join(parts)}")
    return "\n".join(lines) + "\n"
