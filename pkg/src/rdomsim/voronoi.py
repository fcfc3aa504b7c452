"""Voronoi-cell machinery behind the approximation bound.

Decomposes the graph around a dominating set, checks the structural facts
the bound rests on (cells induce trees, at most one edge between any two
cells, few quotient edges), builds the boundary forests, splits the
algorithm's selections into in-cell and cross-cell parts, and aggregates
everything into a per-instance report.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .graphs import Graph, GraphError, bfs_distances, girth
from .oracles import OptimumUnknown, exact_min_rds, is_r_dominating
from .programs import RmdsOutput, SelectionMap
from .simulator import SimulationReport

CellPair = Tuple[int, int]
InterCellEdge = Tuple[Tuple[int, int], CellPair]


class NotDominatingError(ValueError):
    """The supplied center set does not distance-r dominate the graph."""


@dataclass(frozen=True)
class VoronoiDecomposition:
    """Partition of V into cells around centers.

    ``assignment[v]`` is the nearest center (ties by distance, then smaller
    center ID).  ``intercell_edges`` lists each edge whose endpoints lie in
    different cells, together with its sorted cell pair;
    ``quotient_edge_count`` deduplicates cell pairs.
    """

    centers: FrozenSet[int]
    radius: int
    assignment: Dict[int, int]
    cells: Dict[int, FrozenSet[int]]
    intercell_edges: Tuple[InterCellEdge, ...]
    quotient_edge_count: int


@dataclass(frozen=True)
class LemmaFlags:
    """Outcome of the structural checks (flags, not exceptions)."""

    cells_are_trees: bool
    single_edge_per_pair: bool
    quotient_bound: bool


@dataclass(frozen=True)
class BoundaryForest:
    """Per-cell union of in-cell paths from boundary vertices to the center."""

    trees: Dict[int, FrozenSet[int]]
    total: FrozenSet[int]


@dataclass(frozen=True)
class SelectionSplit:
    """Selected vertices split by where their selectors live (may overlap)."""

    inside: FrozenSet[int]
    outside: FrozenSet[int]


def voronoi_decompose(g: Graph, centers: Iterable[int], r: int, *,
                      require_domination: bool = True) -> VoronoiDecomposition:
    """Assign every vertex to its nearest center.

    With ``require_domination`` (the default) a vertex farther than r from
    every center is an error.  Disabling it supports negative controls on
    low-girth instances; vertices unreachable from all centers remain an
    error either way.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    center_set = frozenset(centers)
    if not center_set:
        raise NotDominatingError("center set is empty")
    for m in center_set:
        if m not in g:
            raise GraphError(f"unknown center {m}")
    label: Dict[int, Tuple[int, int]] = {}
    for m in sorted(center_set):
        for v, d in bfs_distances(g, m).items():
            key = (d, m)
            if v not in label or key < label[v]:
                label[v] = key
    missing = [v for v in g.vertices if v not in label]
    if missing:
        raise NotDominatingError(
            f"{len(missing)} vertex(es) unreachable from every center")
    if require_domination:
        far = [v for v, (d, _) in label.items() if d > r]
        if far:
            raise NotDominatingError(
                f"{len(far)} vertex(es) farther than r={r} from every center")
    assignment = {v: m for v, (_, m) in label.items()}
    cells = {m: frozenset(v for v, c in assignment.items() if c == m)
             for m in sorted(center_set)}
    intercell: List[InterCellEdge] = []
    pairs = set()
    for u, v in g.edges():
        cu, cv = assignment[u], assignment[v]
        if cu != cv:
            pair = (cu, cv) if cu < cv else (cv, cu)
            intercell.append(((u, v), pair))
            pairs.add(pair)
    return VoronoiDecomposition(centers=center_set, radius=r,
                                assignment=assignment, cells=cells,
                                intercell_edges=tuple(intercell),
                                quotient_edge_count=len(pairs))


def _cell_is_tree(g: Graph, cell: FrozenSet[int], root: int) -> bool:
    edge_count = sum(1 for u in cell for w in g.neighbors(u)
                     if w in cell and u < w)
    reached = _cell_parents(g, cell, root)
    return len(reached) == len(cell) and edge_count == len(cell) - 1


def _cell_parents(g: Graph, cell: FrozenSet[int], root: int) -> Dict[int, Optional[int]]:
    parents: Dict[int, Optional[int]] = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in cell and w not in parents:
                parents[w] = u
                queue.append(w)
    return parents


def check_structural_lemmas(g: Graph, dec: VoronoiDecomposition,
                            f_r: int) -> LemmaFlags:
    """Check the three structural facts; the flags are the product."""
    cells_are_trees = all(_cell_is_tree(g, cell, m)
                          for m, cell in dec.cells.items())
    pair_counts: Dict[CellPair, int] = {}
    for _, pair in dec.intercell_edges:
        pair_counts[pair] = pair_counts.get(pair, 0) + 1
    single_edge = all(c <= 1 for c in pair_counts.values())
    quotient_bound = dec.quotient_edge_count <= f_r * len(dec.centers)
    return LemmaFlags(cells_are_trees, single_edge, quotient_bound)


def boundary_forest(g: Graph, dec: VoronoiDecomposition) -> BoundaryForest:
    """Union, per cell, of the unique in-cell paths from boundary vertices
    to the center.  Requires every cell to induce a tree."""
    boundary: Dict[int, set] = {m: set() for m in dec.cells}
    for (u, v), _ in dec.intercell_edges:
        boundary[dec.assignment[u]].add(u)
        boundary[dec.assignment[v]].add(v)
    trees: Dict[int, FrozenSet[int]] = {}
    for m, cell in dec.cells.items():
        if not _cell_is_tree(g, cell, m):
            raise ValueError(f"cell of center {m} does not induce a tree")
        parents = _cell_parents(g, cell, m)
        members = {m}
        for u in boundary[m]:
            while u is not None:
                members.add(u)
                u = parents[u]
        trees[m] = frozenset(members)
    total = frozenset().union(*trees.values()) if trees else frozenset()
    return BoundaryForest(trees=trees, total=total)


def split_selection(dec: VoronoiDecomposition,
                    selection: SelectionMap) -> SelectionSplit:
    """Split the selected set by whether some selector shares the cell."""
    inside, outside = set(), set()
    for v, d in selection.sel.items():
        if dec.assignment[v] == dec.assignment[d]:
            inside.add(d)
        else:
            outside.add(d)
    return SelectionSplit(inside=frozenset(inside), outside=frozenset(outside))


@dataclass(frozen=True)
class ApproxReport:
    """Per-instance summary of the algorithm-versus-optimum analysis.

    ``checks`` maps check names to True/False, or None when not evaluable
    (e.g. no optimum available).  ``opt_source`` records whether the
    comparison set came from the exact solver or was supplied.
    """

    n: int
    r: int
    f_r: int
    girth_value: float
    alg_size: int
    opt_size: Optional[int]
    opt_source: str
    ratio: Optional[float]
    bound: int
    delta_prime: float
    quotient_edges: Optional[int]
    boundary_size: Optional[int]
    di_size: Optional[int]
    do_size: Optional[int]
    rounds_executed: int
    max_message_bits: int
    checks: Dict[str, Optional[bool]] = field(default_factory=dict)

    @property
    def girth_ok(self) -> bool:
        return self.girth_value >= 4 * self.r + 3

    def evaluated_checks(self) -> Dict[str, bool]:
        return {k: v for k, v in self.checks.items() if v is not None}

    def to_dict(self) -> dict:
        d = {
            "n": self.n, "r": self.r, "f_r": self.f_r,
            "girth": "inf" if math.isinf(self.girth_value) else int(self.girth_value),
            "alg_size": self.alg_size, "opt_size": self.opt_size,
            "opt_source": self.opt_source, "ratio": self.ratio,
            "bound": self.bound, "delta_prime": self.delta_prime,
            "quotient_edges": self.quotient_edges,
            "boundary_size": self.boundary_size,
            "di_size": self.di_size, "do_size": self.do_size,
            "rounds_executed": self.rounds_executed,
            "max_message_bits": self.max_message_bits,
            "checks": dict(self.checks),
        }
        return d


def approx_report(g: Graph, r: int, f_r: int, sim: SimulationReport,
                  opt: Optional[Iterable[int]] = None) -> ApproxReport:
    """Analyze one dominating-set run against an optimum (or supplied set).

    The bounds are monotone in the comparison set's size, so any valid
    dominating set yields a conservative check; the report records which
    was used.  When neither is available the ratio fields stay unknown.
    """
    outputs: Dict[int, RmdsOutput] = sim.outputs
    selected = frozenset(v for v, out in outputs.items() if out.member)
    selection = SelectionMap(sel={v: out.selected for v, out in outputs.items()},
                             members=selected)
    girth_value = girth(g)
    checks: Dict[str, Optional[bool]] = {
        "dominating": is_r_dominating(g, selected, r)}
    opt_set: Optional[FrozenSet[int]] = None
    opt_source = "unknown"
    if opt is not None:
        opt_set = frozenset(opt)
        opt_source = "supplied"
    else:
        try:
            opt_set = exact_min_rds(g, r)
            opt_source = "exact"
        except OptimumUnknown:
            pass

    bound = 1 + 4 * r * f_r
    ratio = None
    quotient_edges = boundary_size = di_size = do_size = None
    for name in ("opt_dominating", "cells_tree", "single_edge",
                 "quotient_bound", "t_bound", "di_in_T", "di_bound",
                 "do_bound", "ratio_bound"):
        checks[name] = None
    if opt_set is not None:
        opt_size = len(opt_set)
        ratio = len(selected) / opt_size
        checks["ratio_bound"] = len(selected) <= bound * opt_size
        checks["opt_dominating"] = is_r_dominating(g, opt_set, r)
        dec = voronoi_decompose(g, opt_set, r, require_domination=False)
        flags = check_structural_lemmas(g, dec, f_r)
        checks["cells_tree"] = flags.cells_are_trees
        checks["single_edge"] = flags.single_edge_per_pair
        checks["quotient_bound"] = flags.quotient_bound
        quotient_edges = dec.quotient_edge_count
        split = split_selection(dec, selection)
        di_size, do_size = len(split.inside), len(split.outside)
        checks["di_bound"] = di_size <= (1 + 2 * r * f_r) * opt_size
        checks["do_bound"] = do_size <= 2 * r * f_r * opt_size
        if flags.cells_are_trees:
            forest = boundary_forest(g, dec)
            boundary_size = len(forest.total)
            checks["t_bound"] = boundary_size <= (1 + 2 * r * f_r) * opt_size
            checks["di_in_T"] = split.inside <= forest.total
    else:
        opt_size = None

    return ApproxReport(n=g.vertex_count, r=r, f_r=f_r,
                        girth_value=girth_value, alg_size=len(selected),
                        opt_size=opt_size, opt_source=opt_source, ratio=ratio,
                        bound=bound, delta_prime=1.0 / (2 * r + 1),
                        quotient_edges=quotient_edges,
                        boundary_size=boundary_size,
                        di_size=di_size, do_size=do_size,
                        rounds_executed=sim.rounds_executed,
                        max_message_bits=sim.max_message_bits,
                        checks=checks)
