"""The three distributed node programs plus the centralized selection oracle.

* neighborhood counting: r-1 rounds of subtree-size exchange, exact whenever
  the girth is at least 4r+3 (the r-1 ball then looks like a tree);
* distance-r dominating set: counting, then r rounds of lexicographic-max
  candidate flooding, then r rounds of bitset back-propagation;
* independent set on a cycle: given a dominating set, flood hop counters
  from its members and take odd distances to each gap's lower-ID endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from .graphs import Graph, ball, neighborhood_size_oracle
from .simulator import (BackBitsetMsg, CandidateMsg, CountMsg, FloodMsg,
                        Message, NodeProgram, ProgramFault, StepResult)


class RmdsOutput(NamedTuple):
    """Per-vertex result: membership in D and the vertex it selected."""

    member: bool
    selected: int


@dataclass(frozen=True)
class SelectionMap:
    """Final selection of every vertex and the resulting dominating set.

    The members are exactly the range of ``sel``.
    """

    sel: Dict[int, int]
    members: FrozenSet[int]


class _CountState:
    __slots__ = ("counts",)

    def __init__(self, ports: int):
        self.counts = [1] * ports


def _absorb_counts(state, inbox) -> None:
    for p, msg in enumerate(inbox):
        state.counts[p] = msg.value


def _count_outbox(state) -> List[CountMsg]:
    # Send each neighbor the size of our subtree excluding its own branch.
    total = sum(state.counts)
    return [CountMsg(1 + total - c) for c in state.counts]


class CountNeighborhoodProgram(NodeProgram):
    """Computes |N^r(v)| at every vertex in r-1 communication rounds."""

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be >= 1")
        self.r = r

    def init(self, own_id, num_ports, params):
        return _CountState(num_ports)

    def step(self, state, round_index, inbox):
        ports = len(inbox)
        if round_index <= self.r - 1:
            if round_index >= 2:
                _absorb_counts(state, inbox)
            return StepResult(_count_outbox(state), state, False)
        if self.r >= 2:
            _absorb_counts(state, inbox)
        return StepResult([None] * ports, state, True, sum(state.counts))


def count_neighborhood_program(r: int) -> NodeProgram:
    return CountNeighborhoodProgram(r)


class _RmdsState:
    __slots__ = ("own", "counts", "best", "sent", "recv", "chosen")

    def __init__(self, own: int, ports: int, r: int):
        self.own = own
        self.counts = [1] * ports
        self.best: Optional[Tuple[int, int]] = None
        self.sent: List[Tuple[int, int]] = []
        self.recv: List[List[Optional[Tuple[int, int]]]] = [
            [None] * r for _ in range(ports)]
        self.chosen: Optional[set] = None


class RmdsProgram(NodeProgram):
    """Distributed distance-r dominating set in exactly 3r-1 rounds.

    Back-propagation runs r rounds so that a selector at distance exactly r
    can still inform its selectee.
    """

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be >= 1")
        self.r = r

    def init(self, own_id, num_ports, params):
        return _RmdsState(own_id, num_ports, self.r)

    def _absorb_candidates(self, state, round_index, inbox) -> None:
        j = round_index - self.r  # selection round whose messages just arrived
        for p, msg in enumerate(inbox):
            tup = (msg.prio, msg.id)
            state.recv[p][j - 1] = tup
            if tup > state.best:
                state.best = tup

    def _send_candidate(self, state, ports) -> StepResult:
        state.sent.append(state.best)
        out = [CandidateMsg(*state.best)] * ports
        return StepResult(out, state, False)

    def _send_bitsets(self, state, ports) -> StepResult:
        out = []
        for p in range(ports):
            bits = tuple(state.recv[p][i][1] in state.chosen
                         for i in range(self.r))
            out.append(BackBitsetMsg(bits))
        return StepResult(out, state, False)

    def _absorb_bitsets(self, state, inbox) -> None:
        for msg in inbox:
            for i, bit in enumerate(msg.bits):
                if bit:
                    state.chosen.add(state.sent[i][1])

    def step(self, state, round_index, inbox):
        r, t, ports = self.r, round_index, len(inbox)
        if t <= r - 1:  # counting phase
            if t >= 2:
                _absorb_counts(state, inbox)
            return StepResult(_count_outbox(state), state, False)
        if t == r:  # counting done; first selection send
            if r >= 2:
                _absorb_counts(state, inbox)
            state.best = (sum(state.counts), state.own)
            return self._send_candidate(state, ports)
        if t <= 2 * r - 1:  # selection sends 2..r
            self._absorb_candidates(state, t, inbox)
            return self._send_candidate(state, ports)
        if t == 2 * r:  # selection done; first back-propagation send
            self._absorb_candidates(state, t, inbox)
            state.chosen = {state.best[1]}
            return self._send_bitsets(state, ports)
        if t <= 3 * r - 1:  # back-propagation sends 2..r
            self._absorb_bitsets(state, inbox)
            return self._send_bitsets(state, ports)
        # t == 3r: final absorb and output
        self._absorb_bitsets(state, inbox)
        output = RmdsOutput(state.own in state.chosen, state.best[1])
        return StepResult([None] * ports, state, True, output)


def rmds_program(r: int) -> NodeProgram:
    return RmdsProgram(r)


def rmds_round_budget(r: int) -> int:
    """Exact number of communication rounds the program uses."""
    return 3 * r - 1


class _CycleIsState:
    __slots__ = ("own", "is_d", "got")

    def __init__(self, own: int, is_d: bool):
        self.own = own
        self.is_d = is_d
        self.got: List[Optional[Tuple[int, int]]] = [None, None]


class CycleIsProgram(NodeProgram):
    """Independent set on a cycle from a given distance-r dominating set.

    ``params['d_member']`` is the dominating set (each vertex reads only its
    own membership).  Dominating vertices flood (hops, id) in both
    directions and output False; every gap vertex learns the two adjacent
    dominating vertices, takes the lower-ID one as representor, and joins
    the independent set iff its distance to the representor is odd.
    """

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be >= 1")
        self.r = r

    def init(self, own_id, num_ports, params):
        if num_ports != 2:
            raise ProgramFault("cycle_is_program requires a cycle (degree 2)")
        return _CycleIsState(own_id, own_id in params["d_member"])

    def step(self, state, round_index, inbox):
        if state.is_d:
            out = [FloodMsg(1, state.own, True), FloodMsg(1, state.own, True)]
            return StepResult(out, state, True, False)
        out: List[Optional[Message]] = [None, None]
        for p, msg in enumerate(inbox):
            if msg is not None:
                if state.got[p] is None:
                    state.got[p] = (msg.id, msg.hops)
                out[1 - p] = FloodMsg(msg.hops + 1, msg.id, msg.flag)
        if state.got[0] is not None and state.got[1] is not None:
            representor = min(state.got[0][0], state.got[1][0])
            dist = min(h for i, h in state.got if i == representor)
            return StepResult(out, state, True, dist % 2 == 1)
        if round_index > 2 * self.r + 1:
            raise ProgramFault(
                "flood incomplete after 2r+1 rounds; the supplied set is not "
                "a valid distance-r dominating set")
        return StepResult(out, state, False)


def cycle_is_program(r: int) -> NodeProgram:
    return CycleIsProgram(r)


def selection_oracle(g: Graph, r: int) -> SelectionMap:
    """Centralized reference selection, valid without any girth assumption.

    sel(v) is the lexicographic argmax of (|N^r(u)|, u) over the closed
    r-ball of v.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    sizes = {v: neighborhood_size_oracle(g, v, r) for v in g.vertices}
    sel = {v: max(ball(g, v, r), key=lambda u: (sizes[u], u))
           for v in g.vertices}
    return SelectionMap(sel=sel, members=frozenset(sel.values()))
