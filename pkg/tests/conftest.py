import random

from nmgraph.core import NMGraph, NMParams


def random_graph(rng: random.Random, params: NMParams, nv: int,
                 density: float = 0.4) -> NMGraph:
    """Random labeled (n,m)-graph: each pair adjacent with prob `density`."""
    arcs, edges = [], []
    for u in range(nv):
        for v in range(u + 1, nv):
            if rng.random() >= density:
                continue
            choice = rng.randrange(2 * params.n + params.m)
            if choice < 2 * params.n:
                t = choice // 2 + 1
                if choice % 2:
                    arcs.append((v, u, t))
                else:
                    arcs.append((u, v, t))
            else:
                edges.append((u, v, choice - 2 * params.n + 1))
    return NMGraph(params, nv, arcs, edges)


def random_params(rng: random.Random) -> NMParams:
    while True:
        n = rng.randrange(0, 3)
        m = rng.randrange(0, 3)
        if 2 * n + m >= 2:
            return NMParams(n, m)
