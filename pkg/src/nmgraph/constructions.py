"""Deterministic generators for the toolkit's named graphs.

generate_tight builds the triangle-free planar graph achieving relative
clique number 2p^2+2 (p = 2n+m): a K_{2,2p^2} with poles x, y whose middle
vertices g/g' realize every label pair (alpha from x, beta from y) twice,
plus one special 2-path g-h-g' per mate pair.  The embedding comes from an
explicit straight-line drawing: poles above/below, middles on a line,
helpers between their mates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (GraphInputError, NMGraph, NMParams, adjacency_for_label)
from .structure import RotationSystem


@dataclass(frozen=True)
class TightConstruction:
    graph: NMGraph
    embedding: RotationSystem
    good_set: tuple[int, ...]
    # vertex -> ("x",) | ("y",) | ("g", a, b) | ("g'", a, b) | ("h", a, b)
    roles: dict[int, tuple]


@dataclass(frozen=True)
class Gadget:
    graph: NMGraph
    good_set: tuple[int, ...]
    poles: tuple[int, int]


def _add_labeled(adjs: list, params: NMParams, x: int, v: int, alpha: int):
    adjs.append(adjacency_for_label(params, x, v, alpha))


def _build(params: NMParams, vertex_count: int, adjs,
           embedding=None) -> NMGraph:
    arcs = [(u, v, t) for (kind, u, v, t) in adjs if kind == "arc"]
    edges = [(u, v, t) for (kind, u, v, t) in adjs if kind == "edge"]
    return NMGraph(params, vertex_count, arcs, edges, embedding)


def generate_tight(params: NMParams) -> TightConstruction:
    """The tight construction: 2+3p^2 vertices, 6p^2 adjacencies, girth 4."""
    p = params.p
    if p < 2:
        raise GraphInputError("tight construction needs 2n+m >= 2")
    x, y = 0, 1

    def block(a: int, b: int) -> int:
        return (a - 1) * p + (b - 1)

    def g_of(a: int, b: int) -> int:
        return 2 + 2 * block(a, b)

    def h_of(a: int, b: int) -> int:
        return 2 + 2 * p * p + block(a, b)

    roles: dict[int, tuple] = {x: ("x",), y: ("y",)}
    adjs: list[tuple] = []
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            gv = g_of(a, b)
            gp = gv + 1
            hv = h_of(a, b)
            roles[gv] = ("g", a, b)
            roles[gp] = ("g'", a, b)
            roles[hv] = ("h", a, b)
            for mid in (gv, gp):
                _add_labeled(adjs, params, x, mid, a)   # mid in N^a(x)
                _add_labeled(adjs, params, y, mid, b)   # mid in N^b(y)
            # Labels 1 and 2 seen from h disagree, making g-h-g' special.
            _add_labeled(adjs, params, hv, gv, 1)
            _add_labeled(adjs, params, hv, gp, 2)

    vertex_count = 2 + 3 * p * p
    embedding = _tight_embedding(p, vertex_count)
    graph = _build(params, vertex_count, adjs, embedding)
    good = (x, y) + tuple(v for v in range(2, 2 + 2 * p * p))
    return TightConstruction(graph, embedding, good, roles)


def _tight_embedding(p: int, vertex_count: int) -> RotationSystem:
    """Counterclockwise rotations from a straight-line drawing.

    x at (0, 1), y at (0, -1), middle vertex i (0-based) at (i+1, 0),
    helper for block j between its mates at (2j + 1.5, 0).
    """
    coords = {0: (0.0, 1.0), 1: (0.0, -1.0)}
    for i in range(2 * p * p):
        coords[2 + i] = (float(i + 1), 0.0)
    for j in range(p * p):
        coords[2 + 2 * p * p + j] = (2 * j + 1.5, 0.0)

    nbrs: dict[int, list[int]] = {v: [] for v in range(vertex_count)}
    for j in range(p * p):
        gv, gp, hv = 2 + 2 * j, 3 + 2 * j, 2 + 2 * p * p + j
        for mid in (gv, gp):
            nbrs[0].append(mid)
            nbrs[1].append(mid)
            nbrs[mid] += [0, 1]
        nbrs[hv] += [gv, gp]
        nbrs[gv].append(hv)
        nbrs[gp].append(hv)

    rot: RotationSystem = {}
    for v, around in nbrs.items():
        cx, cy = coords[v]

        def angle(w):
            wx, wy = coords[w]
            return math.atan2(wy - cy, wx - cx)

        rot[v] = tuple(sorted(around, key=lambda w: (angle(w), w)))
    return rot


def generate_exceptional(params: NMParams, alpha: int, beta: int) -> Gadget:
    """The exceptional gadget: poles x, y agreeing on three good vertices
    that pairwise see each other via three distinct helpers.

    Vertices: x=0, y=1, g1..g3 = 2..4, helpers h12=5, h13=6, h23=7.
    """
    p = params.p
    if not 1 <= alpha <= p or not 1 <= beta <= p:
        raise GraphInputError(f"labels must lie in 1..{p}")
    x, y = 0, 1
    gs = (2, 3, 4)
    helpers = {(2, 3): 5, (2, 4): 6, (3, 4): 7}
    adjs: list[tuple] = []
    for gv in gs:
        _add_labeled(adjs, params, x, gv, alpha)
        _add_labeled(adjs, params, y, gv, beta)
    for (ga, gb), hv in helpers.items():
        _add_labeled(adjs, params, hv, ga, 1)
        _add_labeled(adjs, params, hv, gb, 2)
    graph = _build(params, 8, adjs)
    return Gadget(graph, (x, y) + gs, (x, y))


def generate_Fk(params: NMParams, label_pairs) -> Gadget:
    """Poles x, y with one common neighbor per (alpha, beta) label pair
    and no other adjacencies; underlying graph K_{2,k}."""
    pairs = list(label_pairs)
    if not pairs:
        raise GraphInputError("need at least one label pair")
    p = params.p
    x, y = 0, 1
    adjs: list[tuple] = []
    for i, (a, b) in enumerate(pairs):
        if not 1 <= a <= p or not 1 <= b <= p:
            raise GraphInputError(f"labels must lie in 1..{p}")
        gv = 2 + i
        _add_labeled(adjs, params, x, gv, a)
        _add_labeled(adjs, params, y, gv, b)
    graph = _build(params, 2 + len(pairs), adjs)
    return Gadget(graph, tuple(range(2, 2 + len(pairs))), (x, y))
