"""Brute-force reference implementations and exhaustive small-graph
enumeration, used to property-test the fast solvers.

Each unordered pair of a k-vertex (n,m)-graph takes one of 2n+m+1 states
(absent, n arc types in either direction, m edge types), so there are
(2n+m+1)^C(k,2) labeled graphs.  The brute oracles quantify directly over
subsets / complete targets and stay independent of the solver code paths.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator

from .core import NMGraph, NMParams, induced_subgraph, serialize
from .seeing import sees

BRUTE_RELATIVE_CAP = 20
BRUTE_CHROMATIC_CAP = 5
BRUTE_ABSOLUTE_CAP = 8


class OracleCapExceeded(ValueError):
    """Instance too large for the brute-force oracle; hard refusal."""


def _pair_states(params: NMParams) -> list:
    """Possible states of one unordered pair (u < v)."""
    states: list = [None]
    for t in range(1, params.n + 1):
        states.append(("arc", False, t))   # u -> v
        states.append(("arc", True, t))    # v -> u
    for t in range(1, params.m + 1):
        states.append(("edge", t))
    return states


def _graph_from_states(params: NMParams, k: int, pairs, states) -> NMGraph:
    arcs, edges = [], []
    for (u, v), s in zip(pairs, states):
        if s is None:
            continue
        if s[0] == "arc":
            _, rev, t = s
            arcs.append((v, u, t) if rev else (u, v, t))
        else:
            edges.append((u, v, s[1]))
    return NMGraph(params, k, arcs, edges)


def canonical_form(g: NMGraph) -> str:
    """Minimum serialization over all vertex permutations."""
    from .core import permute_vertices
    best = None
    for perm in permutations(range(g.vertex_count)):
        mapping = {i: perm[i] for i in range(g.vertex_count)}
        s = serialize(permute_vertices(g, mapping))
        if best is None or s < best:
            best = s
    return best


def enumerate_nm_graphs(vertex_count: int, params: NMParams,
                        dedup: bool = False) -> Iterator[NMGraph]:
    """All labeled (n,m)-graphs on vertex_count vertices.

    With dedup, one representative per isomorphism class (canonical form
    under vertex permutation), emitted in canonical order.  Factorial-cost
    canonicalization; intended for vertex_count <= 6.
    """
    pairs = list(combinations(range(vertex_count), 2))
    states = _pair_states(params)
    if not dedup:
        for choice in product(states, repeat=len(pairs)):
            yield _graph_from_states(params, vertex_count, pairs, choice)
        return
    from .core import parse
    seen = set()
    for choice in product(states, repeat=len(pairs)):
        g = _graph_from_states(params, vertex_count, pairs, choice)
        canon = canonical_form(g)
        if canon not in seen:
            seen.add(canon)
    for canon in sorted(seen):
        yield parse(canon)


def _pairwise_sees(g: NMGraph, subset) -> bool:
    from .seeing import sees
    return all(sees(g, u, v) is not None for u, v in combinations(subset, 2))


def brute_relative_clique(g: NMGraph) -> int:
    """Max subset size with all pairs seeing, by subset enumeration."""
    if g.vertex_count > BRUTE_RELATIVE_CAP:
        raise OracleCapExceeded(
            f"brute_relative_clique capped at {BRUTE_RELATIVE_CAP} vertices")
    if g.vertex_count == 0:
        return 0
    best = 1

    def extend(subset: list[int], start: int):
        nonlocal best
        best = max(best, len(subset))
        for v in range(start, g.vertex_count):
            if all(sees(g, u, v) is not None for u in subset):
                subset.append(v)
                extend(subset, v + 1)
                subset.pop()

    extend([], 0)
    return best


def _brute_hom_exists(g: NMGraph, h: NMGraph) -> bool:
    """Plain exhaustive mapping check, independent of the CSP solver."""
    ng, nh = g.vertex_count, h.vertex_count
    adjacencies = ([("arc", u, v, t) for (u, v, t) in g.arcs]
                   + [("edge", u, v, t) for (u, v, t) in g.edges])

    def ok(mapping):
        for kind, u, v, t in adjacencies:
            a, b = mapping[u], mapping[v]
            if kind == "arc":
                if (a, b, t) not in h.arcs:
                    return False
            else:
                if (min(a, b), max(a, b), t) not in h.edges:
                    return False
        return True

    return any(ok(mapping) for mapping in product(range(nh), repeat=ng))


def _complete_targets(params: NMParams, k: int) -> Iterator[NMGraph]:
    """All complete labeled (n,m)-graphs on k vertices."""
    pairs = list(combinations(range(k), 2))
    states = _pair_states(params)[1:]   # every pair adjacent
    for choice in product(states, repeat=len(pairs)):
        yield _graph_from_states(params, k, pairs, choice)


def _brute_chromatic_uncapped(g: NMGraph) -> int:
    for k in range(1, g.vertex_count + 1):
        if any(_brute_hom_exists(g, h) for h in _complete_targets(g.params, k)):
            return k
    raise AssertionError("graph maps into itself; unreachable")


def brute_chromatic(g: NMGraph) -> int:
    """Least k with a homomorphism into some complete target on k vertices.

    Complete targets suffice: adding adjacencies never blocks a
    homomorphism.
    """
    if g.vertex_count > BRUTE_CHROMATIC_CAP:
        raise OracleCapExceeded(
            f"brute_chromatic capped at {BRUTE_CHROMATIC_CAP} vertices")
    if g.vertex_count == 0:
        raise OracleCapExceeded("chromatic number needs a nonempty graph")
    return _brute_chromatic_uncapped(g)


def brute_absolute_clique(g: NMGraph) -> int:
    """Max |A| with brute_chromatic(g[A]) == |A|: the definitional test."""
    if g.vertex_count > BRUTE_ABSOLUTE_CAP:
        raise OracleCapExceeded(
            f"brute_absolute_clique capped at {BRUTE_ABSOLUTE_CAP} vertices")
    if g.vertex_count == 0:
        return 0
    for size in range(g.vertex_count, 0, -1):
        for subset in combinations(range(g.vertex_count), size):
            sub = induced_subgraph(g, subset)
            if _brute_chromatic_uncapped(sub) == size:
                return size
    raise AssertionError("singletons always qualify; unreachable")
