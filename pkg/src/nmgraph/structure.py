"""Structural queries: girth, triangle-freeness, planarity with a
certified rotation system, and the named pole/common-neighbor
configurations used as diagnostics.

Planarity itself is delegated to networkx's linear-time edge-addition
test; the trusted component is validate_embedding, which re-checks any
returned rotation system by face tracing and Euler's formula.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .core import GraphInputError, NMGraph

RotationSystem = dict[int, tuple[int, ...]]


@dataclass(frozen=True)
class FkOccurrence:
    poles: tuple[int, int]
    good_common_neighbors: tuple[int, ...]


@dataclass(frozen=True)
class ExceptionalOccurrence:
    poles: tuple[int, int]
    good_vertices: tuple[int, int, int]
    helpers: tuple[int, int, int]   # internal vertices for pairs (12, 13, 23)


def girth(g: NMGraph) -> Optional[int]:
    """Length of a shortest cycle in the underlying graph; None for forests.

    BFS from every vertex; a non-tree edge met at depths d(u), d(v) closes
    a walk of length d(u)+d(v)+1 >= girth, with equality achieved when the
    root lies on a shortest cycle.
    """
    best: Optional[int] = None
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v in g.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v and parent[v] != u:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def is_triangle_free(g: NMGraph) -> bool:
    for v in range(g.vertex_count):
        nv = set(g.neighbors(v))
        for u in g.neighbors(v):
            if u > v and nv & set(g.neighbors(u)):
                return False
    return True


def _underlying_nx(g: NMGraph) -> nx.Graph:
    ug = nx.Graph()
    ug.add_nodes_from(range(g.vertex_count))
    ug.add_edges_from((u, v) for (u, v, _t) in g.arcs)
    ug.add_edges_from((u, v) for (u, v, _t) in g.edges)
    return ug


def is_planar(g: NMGraph) -> Optional[RotationSystem]:
    """A certified planar rotation system, or None.

    networkx returns clockwise neighbor orders; they are reversed to the
    counterclockwise convention and re-checked with validate_embedding on
    each connected component.
    """
    ug = _underlying_nx(g)
    planar, embedding = nx.check_planarity(ug)
    if not planar:
        return None
    data = embedding.get_data()
    rot: RotationSystem = {v: tuple(reversed(data.get(v, ())))
                           for v in range(g.vertex_count)}
    for comp in nx.connected_components(ug):
        sub = _induced_with_rotation(g, rot, sorted(comp))
        _faces, ok = validate_embedding(*sub)
        assert ok, "planarity certificate failed face-trace validation"
    return rot


def _induced_with_rotation(g: NMGraph, rot: RotationSystem,
                           vertices: list[int]) -> tuple[NMGraph, RotationSystem]:
    from .core import induced_subgraph
    index = {v: i for i, v in enumerate(vertices)}
    sub = induced_subgraph(g, vertices)
    sub_rot = {index[v]: tuple(index[w] for w in rot[v] if w in index)
               for v in vertices}
    return sub, sub_rot


def validate_embedding(g: NMGraph,
                       rot: RotationSystem) -> tuple[int, bool]:
    """Trace faces of a rotation system; returns (face count, Euler ok).

    Requires a connected underlying graph.  Next dart after (u, v): leave v
    along the successor of u in the rotation at v.
    """
    if g.vertex_count == 0:
        raise GraphInputError("cannot validate the empty graph")
    if set(rot) != set(range(g.vertex_count)):
        raise GraphInputError("rotation system must cover every vertex")
    for v, order in rot.items():
        if sorted(order) != g.neighbors(v):
            raise GraphInputError(
                f"rotation at {v} does not list exactly its neighbors")
    if not _connected(g):
        raise GraphInputError("Euler validation restricted to connected graphs")

    succ = {}
    for v, order in rot.items():
        k = len(order)
        for i, u in enumerate(order):
            succ[(v, u)] = order[(i + 1) % k]

    darts = {(u, v) for v in range(g.vertex_count) for u in rot[v]}
    if not darts:
        # Connected and dartless means a single vertex: one (outer) face.
        return 1, g.vertex_count == 1
    faces = 0
    seen: set[tuple[int, int]] = set()
    for dart in darts:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            u, v = cur
            cur = (v, succ[(v, u)])
    e = g.adjacency_count()
    return faces, g.vertex_count - e + faces == 2


def _connected(g: NMGraph) -> bool:
    if g.vertex_count == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.vertex_count


def find_Fk(g: NMGraph, good, k: int) -> list[FkOccurrence]:
    """All pole pairs with at least k common neighbors inside `good`.

    Each occurrence lists the full common-good-neighbor set.  Diagnostic
    only; no claim about arbitrary inputs being forbidden.
    """
    if k < 1:
        raise GraphInputError("k must be at least 1")
    good_set = set(good)
    for v in good_set:
        g._check_vertex(v)
    out = []
    nbr_sets = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    for x in range(g.vertex_count):
        for y in range(x + 1, g.vertex_count):
            common = sorted(nbr_sets[x] & nbr_sets[y] & good_set)
            if len(common) >= k:
                out.append(FkOccurrence((x, y), tuple(common)))
    return out


def find_exceptional_configuration(g: NMGraph,
                                   good) -> list[ExceptionalOccurrence]:
    """Pole pairs agreeing on three good vertices joined pairwise by
    special 2-paths through three distinct internal vertices.

    The three good vertices must share one label seen from x and one seen
    from y; the internal vertices must avoid {x, y, g1, g2, g3} and be
    pairwise distinct.  One occurrence per (poles, good triple), with the
    lexicographically least helper triple as witness.
    """
    good_set = set(good)
    for v in good_set:
        g._check_vertex(v)
    out = []
    nbr_sets = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    for x in range(g.vertex_count):
        for y in range(x + 1, g.vertex_count):
            common = sorted(nbr_sets[x] & nbr_sets[y] & good_set)
            if len(common) < 3:
                continue
            groups: dict[tuple[int, int], list[int]] = {}
            for v in common:
                key = (g._label[(x, v)], g._label[(y, v)])
                groups.setdefault(key, []).append(v)
            for members in groups.values():
                if len(members) < 3:
                    continue
                for triple in combinations(members, 3):
                    helpers = _disjoint_special_path_triple(g, x, y, triple)
                    if helpers is not None:
                        out.append(ExceptionalOccurrence(
                            (x, y), triple, helpers))
    return out


def _disjoint_special_path_triple(g: NMGraph, x: int, y: int,
                                  triple) -> Optional[tuple[int, int, int]]:
    g1, g2, g3 = triple
    excluded = {x, y, g1, g2, g3}
    pairs = [(g1, g2), (g1, g3), (g2, g3)]
    candidates = []
    for (a, b) in pairs:
        na = set(g.neighbors(a))
        ws = sorted(w for w in g.neighbors(b)
                    if w in na and w not in excluded
                    and g._label[(a, w)] != g._label[(b, w)])
        if not ws:
            return None
        candidates.append(ws)
    for h12 in candidates[0]:
        for h13 in candidates[1]:
            if h13 == h12:
                continue
            for h23 in candidates[2]:
                if h23 != h12 and h23 != h13:
                    return (h12, h13, h23)
    return None
