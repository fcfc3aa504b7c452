"""Deterministic graph family generators.

Cycles, paths, seeded random trees, edge subdivisions, and the
subdivided-biclique tightness family that forces the distributed algorithm
into its worst-case approximation ratio.  All generators are pure functions
of their parameters: byte-identical output across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from .graphs import Graph, build_graph

# 64-bit linear congruential generator (Knuth's MMIX multiplier).  The top
# 31 bits of the state are used per draw; specified explicitly so seeded
# output is reproducible across languages and platforms.
_LCG_A = 6364136223846793005
_LCG_C = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


def _lcg(seed: int) -> Iterator[int]:
    state = seed & _LCG_MASK
    while True:
        state = (_LCG_A * state + _LCG_C) & _LCG_MASK
        yield state >> 33


def gen_cycle(n: int) -> Graph:
    """Cycle on vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {n}")
    return build_graph([(i, i + 1) for i in range(n - 1)], extra_vertices=[0])


def gen_random_tree(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex i attaches to a uniform parent in 0..i-1.

    Parents are drawn from the documented LCG sequence, so (n, seed) fully
    determines the edge list.
    """
    if n < 1:
        raise ValueError(f"a tree needs at least 1 vertex, got {n}")
    draws = _lcg(seed)
    edges = [(next(draws) % i, i) for i in range(1, n)]
    return build_graph(edges, extra_vertices=[0])


def gen_complete(n: int) -> Graph:
    """Complete graph K_n (subdivision base for planar test instances)."""
    if n < 1:
        raise ValueError(f"K_n needs at least 1 vertex, got {n}")
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)],
                       extra_vertices=[0])


def subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path with k internal fresh vertices.

    Fresh IDs start above the largest existing ID and are assigned in
    sorted edge order.  Multiplies the girth by k+1.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return build_graph(g.edges(), extra_vertices=g.vertices)
    nxt = max(g.vertices, default=-1) + 1
    edges = []
    for u, v in g.edges():
        chain = [u, *range(nxt, nxt + k), v]
        nxt += k
        edges.extend(zip(chain, chain[1:]))
    return build_graph(edges, extra_vertices=g.vertices)


@dataclass(frozen=True)
class TightnessParams:
    """Parameters of the tightness family: radius r >= 1 and density bound f >= 2."""

    r: int
    f: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.f < 2:
            raise ValueError(f"f must be >= 2, got {self.f}")


@dataclass(frozen=True)
class TightnessGraph:
    """Subdivided biclique with pendant blocks.

    Two sides X and Y of 2f vertices each; every (x, y) pair is joined by a
    path of 2r fresh vertices (so d(x, y) = 2r + 1), and carries a block of
    k = 2rf pendant degree-1 vertices, each attached by a single edge to the
    path vertex adjacent to x.  ID layout: X ascending, then Y, then path
    vertices in (x, y)-lexicographic order from the x side, then pendant
    blocks in the same order.
    """

    graph: Graph
    r: int
    f: int
    x_side: Tuple[int, ...]
    y_side: Tuple[int, ...]
    paths: Dict[Tuple[int, int], Tuple[int, ...]]
    pendants: Dict[Tuple[int, int], Tuple[int, ...]]


def gen_tightness(params: TightnessParams) -> TightnessGraph:
    """Construct the tightness graph for the given (r, f)."""
    r, f = params.r, params.f
    side = 2 * f
    x_side = tuple(range(side))
    y_side = tuple(range(side, 2 * side))
    nxt = 2 * side
    edges = []
    paths: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    for x in x_side:
        for y in y_side:
            pv = tuple(range(nxt, nxt + 2 * r))
            nxt += 2 * r
            paths[(x, y)] = pv
            chain = (x, *pv, y)
            edges.extend(zip(chain, chain[1:]))
    k = 2 * r * f
    pendants: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    for x in x_side:
        for y in y_side:
            block = tuple(range(nxt, nxt + k))
            nxt += k
            pendants[(x, y)] = block
            anchor = paths[(x, y)][0]
            edges.extend((anchor, b) for b in block)
    return TightnessGraph(build_graph(edges), r, f, x_side, y_side, paths, pendants)


def tightness_dominating_set(tg: TightnessGraph) -> frozenset:
    """A valid distance-r dominating set of the tightness graph.

    X union Y suffices for r >= 2.  For r = 1 the pendant vertices sit at
    distance 2 from X, so the x-adjacent path vertex of every path is added
    as well.
    """
    members = set(tg.x_side) | set(tg.y_side)
    if tg.r == 1:
        members.update(pv[0] for pv in tg.paths.values())
    return frozenset(members)
