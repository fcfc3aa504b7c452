"""Immutable simple undirected graphs plus exact sequential primitives.

These routines (BFS distances, truncated-BFS neighborhood counts, girth,
connected components) serve as ground truth for everything the distributed
algorithms compute.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

#: Girth of an acyclic graph.
INFINITE = math.inf


class GraphError(ValueError):
    """Malformed graph input: self-loop, duplicate edge, or unknown vertex."""


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Instances are immutable after construction and safe to share across
    threads.  Vertex IDs are arbitrary non-negative integers; they need not
    be contiguous.
    """

    __slots__ = ("_adj", "_vertices")

    def __init__(self, adjacency: Dict[int, Tuple[int, ...]]):
        self._adj = adjacency
        self._vertices = tuple(sorted(adjacency))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> Tuple[int, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in self._vertices for v in self._adj[u] if u < v]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._adj.items())))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def build_graph(edges: Iterable[Sequence[int]],
                extra_vertices: Iterable[int] = ()) -> Graph:
    """Build a graph from an edge list.

    Self-loops and duplicate edges (in either orientation) are hard errors:
    generators are expected to produce clean instances, and silent repair
    would mask their bugs.  ``extra_vertices`` adds isolated vertices.
    """
    adj: Dict[int, List[int]] = {}
    seen = set()
    for edge in edges:
        u, v = edge
        for w in (u, v):
            if not isinstance(w, int) or w < 0:
                raise GraphError(f"vertex IDs must be non-negative integers, got {w!r}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for w in extra_vertices:
        if not isinstance(w, int) or w < 0:
            raise GraphError(f"vertex IDs must be non-negative integers, got {w!r}")
        adj.setdefault(w, [])
    return Graph({v: tuple(sorted(ns)) for v, ns in adj.items()})


def bfs_distances(g: Graph, source: int) -> Dict[int, int]:
    """Exact hop distances from ``source``; unreachable vertices are absent."""
    if source not in g:
        raise GraphError(f"unknown source vertex {source}")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def ball(g: Graph, v: int, r: int) -> FrozenSet[int]:
    """Closed distance-r neighborhood of ``v`` (includes ``v`` itself)."""
    if v not in g:
        raise GraphError(f"unknown vertex {v}")
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return frozenset(dist)


def neighborhood_size_oracle(g: Graph, v: int, r: int) -> int:
    """Exact count of vertices at distance 1..r from ``v`` (truncated BFS).

    Makes no girth assumption; this is the reference the message-passing
    count is checked against.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return len(ball(g, v, r)) - 1


def girth(g: Graph):
    """Length of the shortest cycle, or INFINITE for acyclic graphs.

    BFS from every vertex; for each non-tree edge {u, w} seen from root s
    the closed walk through s has length dist(u) + dist(w) + 1, which never
    undercuts the girth and achieves it for a root on a shortest cycle.
    """
    best = INFINITE
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    candidate = dist[u] + dist[w] + 1
                    if candidate < best:
                        best = candidate
    return best


def connected_components(g: Graph) -> List[Tuple[int, ...]]:
    """Partition of V into maximal connected sets.

    Each component is sorted ascending; the list is sorted by smallest
    member.
    """
    seen = set()
    components = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = sorted(bfs_distances(g, s))
        seen.update(comp)
        components.append(tuple(comp))
    return components


def write_graph(g: Graph, path) -> None:
    """Write the interchange text format: ``n m`` then one ``u v`` per edge.

    Requires contiguous vertex IDs 0..n-1 (all generators produce these).
    """
    n = g.vertex_count
    if g.vertices != tuple(range(n)):
        raise GraphError("text format requires contiguous vertex IDs 0..n-1")
    edges = g.edges()
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")


def read_graph(path) -> Graph:
    """Read the interchange text format written by :func:`write_graph`."""
    with open(path, "r", encoding="ascii") as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise GraphError("graph file truncated: missing header")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise GraphError(f"graph file expects {m} edges, found {(len(tokens) - 2) // 2}")
    edges = []
    for i in range(m):
        u, v = int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        edges.append((u, v))
    return build_graph(edges, extra_vertices=range(n))
