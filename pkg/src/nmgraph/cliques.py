"""Exact (n,m)-relative and (n,m)-absolute clique numbers.

A relative clique is a pairwise-seeing vertex set (witnesses anywhere in
the graph); an absolute clique additionally needs its seeing witnesses
inside the set.  The relative clique number is the maximum clique of the
seeing graph, computed by branch-and-bound with a greedy coloring bound
over bitset candidate sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import NMGraph, label_of
from .seeing import SeeWitness, SeeingGraph, seeing_graph


@dataclass(frozen=True)
class CliqueCertificate:
    kind: str                                   # "relative" or "absolute"
    vertices: tuple[int, ...]
    witness_map: dict[tuple[int, int], SeeWitness]


# ---------------------------------------------------------------------------
# Max clique kernel (Tomita-style, Python-int bitsets).

def _adjacency_bitsets(sg: SeeingGraph) -> list[int]:
    adj = [0] * sg.vertex_count
    for (u, v) in sg.witnesses:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _degeneracy_order(adj: list[int], n: int) -> list[int]:
    deg = [bin(a).count("1") for a in adj]
    alive = set(range(n))
    order = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        order.append(v)
        alive.remove(v)
        rest = adj[v]
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if w in alive:
                deg[w] -= 1
    return order


def _color_sort(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy-coloring bound: vertices of cand in nondecreasing color order."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        cls = rest
        while cls:
            v = (cls & -cls).bit_length() - 1
            cls &= cls - 1
            order.append(v)
            colors.append(color)
            cls &= ~adj[v]
            rest &= ~(1 << v)
    return order, colors


def _max_clique_bits(adj: list[int], n: int,
                     at_least: Optional[int] = None) -> tuple[int, list[int]]:
    """Maximum clique over the bitset adjacency.

    If at_least is given, stops as soon as a clique of that size is found
    (decision mode); the returned size is then a lower bound witness.
    """
    if n == 0:
        return 0, []
    # Degeneracy order gives a deterministic, effective branching order.
    order = _degeneracy_order(adj, n)
    pos = {v: i for i, v in enumerate(order)}
    best_size = 0
    best: list[int] = []
    done = False

    def expand(current: list[int], cand: int):
        nonlocal best_size, best, done
        if done:
            return
        vs, colors = _color_sort(cand, adj)
        for i in range(len(vs) - 1, -1, -1):
            if len(current) + colors[i] <= best_size:
                return
            v = vs[i]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > best_size:
                best_size = len(current)
                best = list(current)
                if at_least is not None and best_size >= at_least:
                    done = True
            current.pop()
            if done:
                return
            cand &= ~(1 << v)

    full = 0
    for v in range(n):
        full |= 1 << v
    # Seed with singletons handled inside expand via empty-cand branch.
    expand([], full)
    return best_size, sorted(best)


def _lex_min_max_clique(adj: list[int], n: int, size: int) -> list[int]:
    """Lexicographically smallest clique of maximum size."""
    chosen: list[int] = []
    cand = 0
    for v in range(n):
        cand |= 1 << v
    remaining = size
    v = 0
    while remaining > 0:
        while not (cand >> v) & 1:
            v += 1
        nxt = cand & adj[v]
        if _clique_decision(adj, n, nxt, remaining - 1):
            chosen.append(v)
            cand = nxt
            remaining -= 1
        else:
            cand &= ~(1 << v)
        v += 1
    return chosen


def _clique_decision(adj: list[int], n: int, within: int, size: int) -> bool:
    if size <= 0:
        return True
    if bin(within).count("1") < size:
        return False
    verts = []
    rest = within
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        verts.append(v)
    index = {v: i for i, v in enumerate(verts)}
    sub = [0] * len(verts)
    for i, v in enumerate(verts):
        a = adj[v] & within
        while a:
            w = (a & -a).bit_length() - 1
            a &= a - 1
            sub[i] |= 1 << index[w]
    found, _ = _max_clique_bits(sub, len(verts), at_least=size)
    return found >= size


def max_clique(sg: SeeingGraph) -> list[int]:
    """Lexicographically smallest maximum clique of a seeing graph."""
    adj = _adjacency_bitsets(sg)
    n = sg.vertex_count
    if n == 0:
        return []
    size, _ = _max_clique_bits(adj, n)
    size = max(size, 1)  # a single vertex is always a clique
    return _lex_min_max_clique(adj, n, size)


# ---------------------------------------------------------------------------
# Relative cliques.

def verify_relative_clique(g: NMGraph, vertices) -> Optional[CliqueCertificate]:
    """Certificate iff every pair of the set sees each other in g."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    sg = seeing_graph(g, vs)
    witness_map: dict[tuple[int, int], SeeWitness] = {}
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            u, v = vs[i], vs[j]
            ws = sg.witnesses_for(u, v)
            if not ws:
                return None
            witness_map[(u, v)] = ws[0]
    return CliqueCertificate("relative", tuple(vs), witness_map)


def first_non_seeing_pair(g: NMGraph, vertices) -> Optional[tuple[int, int]]:
    """Diagnostic: the first pair of the set that fails to see."""
    vs = sorted(set(vertices))
    sg = seeing_graph(g, vs)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if not sg.has_edge(vs[i], vs[j]):
                return (vs[i], vs[j])
    return None


def relative_clique_number(g: NMGraph) -> tuple[int, CliqueCertificate]:
    """Maximum pairwise-seeing set size with one certifying set."""
    if g.vertex_count == 0:
        return 0, CliqueCertificate("relative", (), {})
    sg = seeing_graph(g)
    clique = max_clique(sg)
    cert = verify_relative_clique(g, clique)
    assert cert is not None
    return len(clique), cert


# ---------------------------------------------------------------------------
# Absolute cliques: seeing witnesses must live inside the set.

def _internal_witness(g: NMGraph, u: int, v: int,
                      inside: set[int]) -> Optional[SeeWitness]:
    if label_of(g, u, v) is not None:
        return SeeWitness("direct")
    nu = set(g.neighbors(u))
    for w in g.neighbors(v):
        if w in nu and w in inside and g._label[(u, w)] != g._label[(v, w)]:
            return SeeWitness("via", w)
    return None


def verify_absolute_clique(g: NMGraph, vertices) -> Optional[CliqueCertificate]:
    """Certificate iff every pair sees each other within the induced set."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    inside = set(vs)
    witness_map: dict[tuple[int, int], SeeWitness] = {}
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            w = _internal_witness(g, vs[i], vs[j], inside)
            if w is None:
                return None
            witness_map[(vs[i], vs[j])] = w
    return CliqueCertificate("absolute", tuple(vs), witness_map)


def absolute_clique_number(g: NMGraph) -> tuple[int, CliqueCertificate]:
    """Maximum set whose pairs see each other with internal witnesses.

    Internal-witness seeing implies global seeing, so candidate sets are
    cliques of the seeing graph; the greedy-coloring clique bound prunes
    soundly.  The internal-witness condition is not monotone (dropping a
    vertex can drop a witness), so sets are checked in full whenever they
    beat the current best, not just at leaves.
    """
    n = g.vertex_count
    if n == 0:
        return 0, CliqueCertificate("absolute", (), {})
    sg = seeing_graph(g)
    adj = _adjacency_bitsets(sg)

    best_set: list[int] = [0]
    best_cert = verify_absolute_clique(g, [0])
    assert best_cert is not None

    def expand(current: list[int], cand: int):
        nonlocal best_set, best_cert
        vs, colors = _color_sort(cand, adj)
        for i in range(len(vs) - 1, -1, -1):
            if len(current) + colors[i] <= len(best_set):
                return
            v = vs[i]
            current.append(v)
            if len(current) > len(best_set):
                cert = verify_absolute_clique(g, current)
                if cert is not None:
                    best_set = list(current)
                    best_cert = cert
            nxt = cand & adj[v]
            if nxt:
                expand(current, nxt)
            current.pop()
            cand &= ~(1 << v)

    full = (1 << n) - 1
    expand([], full)
    return len(best_set), best_cert


def serialize_certificate(cert: CliqueCertificate) -> str:
    lines = [f"kind {cert.kind}",
             "set " + " ".join(str(v) for v in cert.vertices)]
    for (u, v), w in sorted(cert.witness_map.items()):
        how = "direct" if w.kind == "direct" else f"via {w.via}"
        lines.append(f"pair {u} {v} {how}")
    return "\n".join(lines) + "\n"
