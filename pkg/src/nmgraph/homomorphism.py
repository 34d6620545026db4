"""Homomorphism decision and exact (n,m)-chromatic number.

A homomorphism maps vertices so every arc/edge lands on a target arc/edge
of the same type and direction.  The chromatic number is the least order
of any target admitting a homomorphism; it is computed by a CSP over
colorings that commits target relations lazily (adding adjacencies to a
target never blocks a homomorphism, so lazily built partial targets reach
the same minimum as quantifying over all targets).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import GraphInputError, NMGraph
from .cliques import relative_clique_number
from .seeing import seeing_graph

# A pair relation is ("arc", t, lo_to_hi: bool) or ("edge", t, True),
# keyed by the unordered color pair (lo, hi).
Relation = tuple[str, int, bool]


@dataclass(frozen=True)
class HomomorphismWitness:
    mapping: tuple[int, ...]
    pair_table: Optional[dict[tuple[int, int], Relation]] = None


@dataclass(frozen=True)
class ChromaticResult:
    value: Optional[int]           # None iff the bounded search was exhausted
    witness: Optional[HomomorphismWitness]
    target: Optional[NMGraph]
    lower_bound_used: int
    max_order_reached: Optional[int] = None

    @property
    def exhausted(self) -> bool:
        return self.value is None


def verify_homomorphism(g: NMGraph, h: NMGraph, mapping) -> bool:
    """Check typed-adjacency preservation of a candidate mapping."""
    if g.params != h.params:
        return False
    if len(mapping) != g.vertex_count:
        return False
    for (u, v, t) in g.arcs:
        if (mapping[u], mapping[v], t) not in h.arcs:
            return False
    for (u, v, t) in g.edges:
        a, b = mapping[u], mapping[v]
        if (min(a, b), max(a, b), t) not in h.edges:
            return False
    return True


def homomorphism_exists(g: NMGraph, h: NMGraph) -> Optional[HomomorphismWitness]:
    """Backtracking search with forward checking, or None."""
    if g.params != h.params:
        raise GraphInputError("source and target must share (n,m) parameters")
    ng, nh = g.vertex_count, h.vertex_count
    if ng == 0:
        return HomomorphismWitness(())
    if nh == 0:
        return None

    p = g.params.p
    # Per-label neighbor bitsets of the target, for forward checking.
    h_nbr = [[0] * (p + 1) for _ in range(nh)]
    for w in range(nh):
        for x in h.neighbors(w):
            h_nbr[w][h._label[(w, x)]] |= 1 << x

    full = (1 << nh) - 1
    # Initial domains: target vertex w is feasible for v only if w has at
    # least one alpha-neighbor for every label alpha used at v.
    domains = [full] * ng
    for v in range(ng):
        used = {g._label[(v, u)] for u in g.neighbors(v)}
        dom = 0
        for w in range(nh):
            if all(h_nbr[w][alpha] for alpha in used):
                dom |= 1 << w
        domains[v] = dom
        if dom == 0:
            return None

    order = sorted(range(ng), key=lambda v: (-g.degree(v), v))
    mapping = [-1] * ng

    def search(i: int, doms: list[int]) -> bool:
        if i == ng:
            return True
        v = order[i]
        cand = doms[v]
        unassigned_nbrs = [u for u in g.neighbors(v) if mapping[u] == -1]
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            mapping[v] = w
            new_doms = list(doms)
            ok = True
            for u in unassigned_nbrs:
                nd = new_doms[u] & h_nbr[w][g._label[(v, u)]]
                if nd == 0:
                    ok = False
                    break
                new_doms[u] = nd
            if ok and search(i + 1, new_doms):
                return True
            mapping[v] = -1
        return False

    if search(0, domains):
        return HomomorphismWitness(tuple(mapping))
    return None


def compose(f: HomomorphismWitness, e: HomomorphismWitness) -> HomomorphismWitness:
    return HomomorphismWitness(tuple(e.mapping[x] for x in f.mapping))


def _relation_key(c1: int, c2: int, kind: str, t: int,
                  forward: bool) -> tuple[tuple[int, int], Relation]:
    """Canonical (unordered color pair, relation) for an adjacency c1->c2."""
    if kind == "edge":
        return (min(c1, c2), max(c1, c2)), (kind, t, True)
    if c1 < c2:
        return (c1, c2), (kind, t, forward)
    return (c2, c1), (kind, t, not forward)


def _target_from_table(params, k: int,
                       table: dict[tuple[int, int], Relation]) -> NMGraph:
    arcs, edges = [], []
    for (lo, hi), (kind, t, fwd) in table.items():
        if kind == "edge":
            edges.append((lo, hi, t))
        elif fwd:
            arcs.append((lo, hi, t))
        else:
            arcs.append((hi, lo, t))
    return NMGraph(params, k, arcs, edges)


def chromatic_number(g: NMGraph,
                     max_order: Optional[int] = None) -> ChromaticResult:
    """Least k such that g maps into some (n,m)-graph on k vertices.

    Starts at the relative clique number (a sound lower bound) and grows k;
    for each k runs a CSP over colorings with lazily committed pair
    relations.  Vertices of the certifying relative clique are constrained
    pairwise-distinct up front, and color c is only usable once all colors
    below c are in use (value-symmetry break).
    """
    if g.vertex_count == 0:
        raise GraphInputError("chromatic number of the empty graph is undefined")
    if max_order is None:
        max_order = g.vertex_count
    lb, cert = relative_clique_number(g)
    lb = max(lb, 1)

    sg = seeing_graph(g)
    order = sorted(range(g.vertex_count), key=lambda v: (-sg.degree(v), v))
    clique = set(cert.vertices)

    # Per-vertex assigned neighbors in `order`-prefix, precomputed.
    earlier_nbrs: list[list[int]] = [[] for _ in range(g.vertex_count)]
    rank = {v: i for i, v in enumerate(order)}
    for v in range(g.vertex_count):
        for u in g.neighbors(v):
            if rank[u] < rank[v]:
                earlier_nbrs[v].append(u)
    earlier_clique: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for v in clique:
        earlier_clique[v] = [u for u in clique if u != v and rank[u] < rank[v]]

    def source_relation(u: int, v: int) -> tuple[str, int, bool]:
        """Relation of the adjacency u->v in g: (kind, type, u_is_tail)."""
        alpha = g._label[(u, v)]
        n = g.params.n
        if alpha > 2 * n:
            return ("edge", alpha - 2 * n, True)
        t = (alpha + 1) // 2
        return ("arc", t, alpha % 2 == 0)

    def search_k(k: int) -> Optional[tuple[list[int],
                                           dict[tuple[int, int], Relation]]]:
        colors = [-1] * g.vertex_count
        table: dict[tuple[int, int], Relation] = {}

        def assign(i: int, used: int) -> bool:
            if i == g.vertex_count:
                return True
            v = order[i]
            limit = min(k, used + 1)
            forbidden = {colors[u] for u in earlier_clique[v]}
            for c in range(limit):
                if c in forbidden:
                    continue
                committed = []
                ok = True
                for u in earlier_nbrs[v]:
                    d = colors[u]
                    if d == c:
                        ok = False
                        break
                    kind, t, fwd = source_relation(u, v)
                    key, rel = _relation_key(d, c, kind, t, fwd)
                    existing = table.get(key)
                    if existing is None:
                        table[key] = rel
                        committed.append(key)
                    elif existing != rel:
                        ok = False
                        break
                if ok:
                    colors[v] = c
                    if assign(i + 1, max(used, c + 1)):
                        return True
                    colors[v] = -1
                for key in committed:
                    del table[key]
            return False

        if assign(0, 0):
            return colors, dict(table)
        return None

    for k in range(lb, max_order + 1):
        found = search_k(k)
        if found is not None:
            colors, table = found
            target = _target_from_table(g.params, k, table)
            witness = HomomorphismWitness(tuple(colors), table)
            return ChromaticResult(k, witness, target, lb)
    return ChromaticResult(None, None, None, lb, max_order_reached=max_order)


def serialize_witness(w: HomomorphismWitness) -> str:
    lines = [f"map {src} {tgt}" for src, tgt in enumerate(w.mapping)]
    if w.pair_table:
        for (lo, hi), (kind, t, fwd) in sorted(w.pair_table.items()):
            if kind == "edge":
                rel = f"edge {t}"
            else:
                rel = f"arc {t} {lo}->{hi}" if fwd else f"arc {t} {hi}->{lo}"
            lines.append(f"pair {lo} {hi} {rel}")
    return "\n".join(lines) + "\n"
