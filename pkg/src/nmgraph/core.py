"""Core data model for (n,m)-colored mixed graphs.

An (n,m)-graph has n types of arcs and m types of edges over a simple
underlying graph.  From the point of view of a vertex x, each neighbor
carries one of 2n+m adjacency labels:

  * arc of type i from x to y  ->  y has label 2i seen from x,
                                   x has label 2i-1 seen from y;
  * edge of type j between x,y ->  both see label 2n+j.

Vertices are dense integers 0..vertex_count-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class GraphInputError(ValueError):
    """Invalid vertices, labels, permutations, or graph structure."""


class ParseError(GraphInputError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class NMParams:
    """Number of arc types (n) and edge types (m); requires 2n+m >= 2."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise GraphInputError(f"negative type counts: ({self.n},{self.m})")
        if 2 * self.n + self.m < 2:
            raise GraphInputError(
                f"(n,m)=({self.n},{self.m}) not supported; need 2n+m >= 2"
            )

    @property
    def p(self) -> int:
        return 2 * self.n + self.m

    def label_count(self) -> int:
        return self.p


class NMGraph:
    """Immutable (n,m)-graph with optional combinatorial embedding.

    arcs: iterable of (u, v, t), arc of type t (1..n) from u to v.
    edges: iterable of (u, v, t), edge of type t (1..m); endpoints unordered.
    embedding: optional per-vertex counterclockwise neighbor order.
    """

    __slots__ = ("params", "vertex_count", "arcs", "edges", "embedding",
                 "_label", "_nbrs")

    def __init__(self, params: NMParams, vertex_count: int,
                 arcs: Iterable[tuple[int, int, int]] = (),
                 edges: Iterable[tuple[int, int, int]] = (),
                 embedding: Optional[dict[int, tuple[int, ...]]] = None):
        if vertex_count < 0:
            raise GraphInputError("negative vertex count")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "vertex_count", vertex_count)

        label: dict[tuple[int, int], int] = {}
        nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
        arc_set = set()
        for (u, v, t) in arcs:
            self._check_vertex(u)
            self._check_vertex(v)
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if not 1 <= t <= params.n:
                raise GraphInputError(f"arc type {t} out of range 1..{params.n}")
            if (u, v) in label or (v, u) in label:
                raise GraphInputError(
                    f"multiple adjacencies between {u} and {v}")
            label[(u, v)] = 2 * t
            label[(v, u)] = 2 * t - 1
            nbrs[u].append(v)
            nbrs[v].append(u)
            arc_set.add((u, v, t))
        edge_set = set()
        for (u, v, t) in edges:
            self._check_vertex(u)
            self._check_vertex(v)
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if not 1 <= t <= params.m:
                raise GraphInputError(f"edge type {t} out of range 1..{params.m}")
            if (u, v) in label or (v, u) in label:
                raise GraphInputError(
                    f"multiple adjacencies between {u} and {v}")
            a, b = min(u, v), max(u, v)
            label[(u, v)] = 2 * params.n + t
            label[(v, u)] = 2 * params.n + t
            nbrs[u].append(v)
            nbrs[v].append(u)
            edge_set.add((a, b, t))
        for lst in nbrs:
            lst.sort()
        object.__setattr__(self, "arcs", frozenset(arc_set))
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "_label", label)
        object.__setattr__(self, "_nbrs", nbrs)
        if embedding is not None:
            embedding = {v: tuple(order) for v, order in embedding.items()}
            self._check_embedding_cover(embedding)
        object.__setattr__(self, "embedding", embedding)

    def _check_vertex(self, v: int):
        if not 0 <= v < self.vertex_count:
            raise GraphInputError(
                f"vertex {v} out of range 0..{self.vertex_count - 1}")

    def _check_embedding_cover(self, embedding: dict[int, tuple[int, ...]]):
        if set(embedding) != set(range(self.vertex_count)):
            raise GraphInputError("embedding must cover every vertex exactly once")
        for v, order in embedding.items():
            if sorted(order) != self._nbrs[v]:
                raise GraphInputError(
                    f"embedding at {v} does not list exactly its neighbors")

    def __setattr__(self, name, value):
        raise AttributeError("NMGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, NMGraph):
            return NotImplemented
        return (self.params == other.params
                and self.vertex_count == other.vertex_count
                and self.arcs == other.arcs
                and self.edges == other.edges
                and self.embedding == other.embedding)

    def __hash__(self):
        return hash((self.params, self.vertex_count, self.arcs, self.edges))

    def __repr__(self):
        return (f"NMGraph(n={self.params.n}, m={self.params.m}, "
                f"V={self.vertex_count}, |A|={len(self.arcs)}, "
                f"|E|={len(self.edges)})")

    def neighbors(self, x: int) -> list[int]:
        self._check_vertex(x)
        return list(self._nbrs[x])

    def degree(self, x: int) -> int:
        self._check_vertex(x)
        return len(self._nbrs[x])

    def adjacency_count(self) -> int:
        return len(self.arcs) + len(self.edges)

    def adjacent(self, x: int, y: int) -> bool:
        return (x, y) in self._label


def label_of(g: NMGraph, x: int, y: int) -> Optional[int]:
    """Label of y as seen from x, or None if non-adjacent."""
    g._check_vertex(x)
    g._check_vertex(y)
    if x == y:
        raise GraphInputError("label_of requires distinct vertices")
    return g._label.get((x, y))


def neighbors_with_label(g: NMGraph, x: int, alpha: int) -> list[int]:
    """Sorted list of alpha-neighbors of x."""
    g._check_vertex(x)
    if not 1 <= alpha <= g.params.p:
        raise GraphInputError(f"label {alpha} out of range 1..{g.params.p}")
    return [y for y in g._nbrs[x] if g._label[(x, y)] == alpha]


def adjacency_for_label(params: NMParams, x: int, y: int,
                        alpha: int) -> tuple[str, int, int, int]:
    """The unique adjacency making y an alpha-neighbor of x.

    Returns ('arc', u, v, t) or ('edge', u, v, t).  Label 2i means arc of
    type i from x to y; label 2i-1 means arc of type i from y to x; label
    2n+j means edge of type j.
    """
    if not 1 <= alpha <= params.p:
        raise GraphInputError(f"label {alpha} out of range 1..{params.p}")
    if alpha <= 2 * params.n:
        t = (alpha + 1) // 2
        if alpha % 2 == 0:
            return ("arc", x, y, t)
        return ("arc", y, x, t)
    return ("edge", x, y, alpha - 2 * params.n)


def dual_label(params: NMParams, alpha: int) -> int:
    """Label of x seen from y, given that y has label alpha seen from x."""
    if alpha > 2 * params.n:
        return alpha
    return alpha - 1 if alpha % 2 == 0 else alpha + 1


def induced_subgraph(g: NMGraph, vertices: Iterable[int]) -> NMGraph:
    """Induced subgraph, reindexed to 0..k-1 in ascending vertex order."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(vs)}
    arcs = [(index[u], index[v], t) for (u, v, t) in g.arcs
            if u in index and v in index]
    edges = [(index[u], index[v], t) for (u, v, t) in g.edges
             if u in index and v in index]
    return NMGraph(g.params, len(vs), arcs, edges)


def relabel(g: NMGraph, arc_perm: Optional[dict[int, int]] = None,
            edge_perm: Optional[dict[int, int]] = None,
            flip: Iterable[int] = ()) -> NMGraph:
    """Rename arc/edge types and optionally reverse all arcs of given types.

    arc_perm / edge_perm map old type -> new type and must be permutations
    of [1,n] / [1,m]; flip lists the (old) arc types whose arcs reverse.
    """
    n, m = g.params.n, g.params.m
    arc_perm = arc_perm or {t: t for t in range(1, n + 1)}
    edge_perm = edge_perm or {t: t for t in range(1, m + 1)}
    if sorted(arc_perm) != list(range(1, n + 1)) or \
            sorted(arc_perm.values()) != list(range(1, n + 1)):
        raise GraphInputError(f"arc_perm is not a permutation of 1..{n}")
    if sorted(edge_perm) != list(range(1, m + 1)) or \
            sorted(edge_perm.values()) != list(range(1, m + 1)):
        raise GraphInputError(f"edge_perm is not a permutation of 1..{m}")
    flip = set(flip)
    if not flip <= set(range(1, n + 1)):
        raise GraphInputError(f"flip types must lie in 1..{n}")
    arcs = []
    for (u, v, t) in g.arcs:
        if t in flip:
            u, v = v, u
        arcs.append((u, v, arc_perm[t]))
    edges = [(u, v, edge_perm[t]) for (u, v, t) in g.edges]
    return NMGraph(g.params, g.vertex_count, arcs, edges, g.embedding)


def permute_vertices(g: NMGraph, perm: dict[int, int]) -> NMGraph:
    """Relabel vertices by a permutation old -> new."""
    if sorted(perm) != list(range(g.vertex_count)) or \
            sorted(perm.values()) != list(range(g.vertex_count)):
        raise GraphInputError("not a vertex permutation")
    arcs = [(perm[u], perm[v], t) for (u, v, t) in g.arcs]
    edges = [(perm[u], perm[v], t) for (u, v, t) in g.edges]
    emb = None
    if g.embedding is not None:
        emb = {perm[v]: tuple(perm[w] for w in order)
               for v, order in g.embedding.items()}
    return NMGraph(g.params, g.vertex_count, arcs, edges, emb)


def serialize(g: NMGraph) -> str:
    """Canonical .nmg text: arcs sorted by (u,v,t), then edges, then embed."""
    lines = [f"nm {g.params.n} {g.params.m}", f"vertices {g.vertex_count}"]
    for (u, v, t) in sorted(g.arcs):
        lines.append(f"arc {u} {v} {t}")
    for (u, v, t) in sorted(g.edges):
        lines.append(f"edge {u} {v} {t}")
    if g.embedding is not None:
        for v in range(g.vertex_count):
            order = " ".join(str(w) for w in g.embedding[v])
            lines.append(f"embed {v} {order}".rstrip())
    return "\n".join(lines) + "\n"


def parse(text: str) -> NMGraph:
    """Parse the .nmg format; raises ParseError naming the offending line."""
    params = None
    vertex_count = None
    arcs: list[tuple[int, int, int]] = []
    edges: list[tuple[int, int, int]] = []
    embedding: dict[int, tuple[int, ...]] = {}
    seen_pairs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        try:
            values = [int(a) for a in args]
        except ValueError:
            raise ParseError(f"non-integer argument in {kind!r} line", lineno)
        if kind == "nm":
            if params is not None:
                raise ParseError("duplicate nm line", lineno)
            if len(values) != 2:
                raise ParseError("nm line needs exactly n and m", lineno)
            try:
                params = NMParams(*values)
            except GraphInputError as exc:
                raise ParseError(str(exc), lineno) from exc
        elif kind == "vertices":
            if params is None:
                raise ParseError("vertices line before nm line", lineno)
            if vertex_count is not None:
                raise ParseError("duplicate vertices line", lineno)
            if len(values) != 1 or values[0] < 0:
                raise ParseError("vertices line needs one non-negative count",
                                 lineno)
            vertex_count = values[0]
        elif kind in ("arc", "edge"):
            if vertex_count is None:
                raise ParseError(f"{kind} line before vertices line", lineno)
            if len(values) != 3:
                raise ParseError(f"{kind} line needs u, v, and type", lineno)
            u, v, t = values
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ParseError(f"vertex out of range in {kind} line", lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            tmax = params.n if kind == "arc" else params.m
            if not 1 <= t <= tmax:
                raise ParseError(f"{kind} type {t} out of range 1..{tmax}",
                                 lineno)
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                raise ParseError(
                    f"multiple adjacencies between {u} and {v}", lineno)
            seen_pairs.add(pair)
            (arcs if kind == "arc" else edges).append((u, v, t))
        elif kind == "embed":
            if vertex_count is None:
                raise ParseError("embed line before vertices line", lineno)
            if not values:
                raise ParseError("embed line needs a vertex", lineno)
            v = values[0]
            if v in embedding:
                raise ParseError(f"duplicate embed line for vertex {v}", lineno)
            embedding[v] = tuple(values[1:])
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if params is None or vertex_count is None:
        raise ParseError("missing nm or vertices line", 1)
    try:
        return NMGraph(params, vertex_count, arcs, edges,
                       embedding if embedding else None)
    except GraphInputError as exc:
        raise ParseError(str(exc), 1) from exc
