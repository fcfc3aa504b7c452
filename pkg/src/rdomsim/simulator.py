"""Deterministic lockstep simulator for synchronous message passing.

Port-numbered model: a vertex addresses its incident edges by port index
(ports sorted by neighbor ID) and never sees neighbor IDs except through
message contents.  A message sent on port p of v in round t is delivered to
the matching port of the neighbor at the start of round t+1.  Per-message
bit accounting follows a fixed encoding schema so CONGEST budgets can be
asserted exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .graphs import Graph


class SimulationError(RuntimeError):
    """Base class for simulator failures."""


class BudgetExceeded(SimulationError):
    """Some node had not halted when the round budget ran out."""


class BitBudgetExceeded(SimulationError):
    """A message exceeded the configured per-message bit budget."""


class ProgramFault(SimulationError):
    """A node program signalled an internal contract violation."""


@dataclass(frozen=True)
class CountMsg:
    """Subtree size announcement (one integer field)."""

    value: int


@dataclass(frozen=True)
class CandidateMsg:
    """Selection candidate: (priority, vertex ID), compared lexicographically."""

    prio: int
    id: int


@dataclass(frozen=True)
class BackBitsetMsg:
    """Per-port back-propagation bitset; bit i refers to selection round i+1."""

    bits: Tuple[bool, ...]


@dataclass(frozen=True)
class FloodMsg:
    """Hop-counted flood: distance from the originator, its ID, and a flag."""

    hops: int
    id: int
    flag: bool


Message = Union[CountMsg, CandidateMsg, BackBitsetMsg, FloodMsg]


def id_bits(n: int) -> int:
    """Bits per integer field: ceil(log2(n + 1)) for an n-vertex instance."""
    return max(1, n.bit_length())


def message_bits(msg: Message, n: int) -> int:
    """Encoded length of a message under the fixed schema.

    Integer fields cost ceil(log2(n+1)) bits each, booleans 1 bit, and a
    bitset exactly its length.
    """
    width = id_bits(n)
    if isinstance(msg, CountMsg):
        return width
    if isinstance(msg, CandidateMsg):
        return 2 * width
    if isinstance(msg, BackBitsetMsg):
        return len(msg.bits)
    if isinstance(msg, FloodMsg):
        return 2 * width + 1
    raise ProgramFault(f"unknown message type {type(msg).__name__}")


class StepResult(NamedTuple):
    outbox: Sequence[Optional[Message]]
    state: Any
    halted: bool
    output: Any = None


class NodeProgram:
    """Behavioral contract for a per-vertex state machine.

    ``step`` must be a pure function of its arguments: no hidden global
    state, no randomness.  The simulator owns all per-node state.
    """

    def init(self, own_id: int, num_ports: int, params: Any):
        raise NotImplementedError

    def step(self, state: Any, round_index: int,
             inbox: Sequence[Optional[Message]]) -> StepResult:
        raise NotImplementedError


@dataclass(frozen=True)
class SimulationReport:
    """Outcome of one lockstep run.

    ``messages_per_round[t-1]`` counts messages sent in round t (each is
    delivered exactly once at the start of round t+1; a delivery to an
    already-halted vertex is discarded).  ``rounds_executed`` is the number
    of communication rounds, i.e. rounds after the first.
    """

    outputs: Dict[int, Any]
    rounds_executed: int
    max_message_bits: int
    messages_per_round: List[int] = field(default_factory=list)


def run_simulation(g: Graph, program: NodeProgram, params: Any = None,
                   round_budget: int = 0, bit_budget: Optional[int] = None,
                   trace=None) -> SimulationReport:
    """Execute ``program`` on every vertex of ``g`` in lockstep.

    Runs until all nodes halt; raises BudgetExceeded if some node is still
    live after ``round_budget`` communication rounds.  ``trace`` may be a
    writable text stream receiving one JSON line per round.
    """
    if round_budget < 0:
        raise ValueError("round_budget must be >= 0")
    n = g.vertex_count
    # peer[(v, p)] = (u, q): port p of v faces port q of u.
    peer = {}
    for v in g.vertices:
        for p, u in enumerate(g.neighbors(v)):
            peer[(v, p)] = (u, g.neighbors(u).index(v))

    states = {v: program.init(v, g.degree(v), params) for v in g.vertices}
    inboxes: Dict[int, List[Optional[Message]]] = {
        v: [None] * g.degree(v) for v in g.vertices}
    active = set(g.vertices)
    outputs: Dict[int, Any] = {}
    messages_per_round: List[int] = []
    max_bits = 0
    t = 0
    while active:
        t += 1
        if t > round_budget + 1:
            raise BudgetExceeded(
                f"{len(active)} node(s) not halted after {round_budget} "
                f"communication rounds")
        next_inboxes: Dict[int, List[Optional[Message]]] = {
            v: [None] * g.degree(v) for v in g.vertices}
        sent = 0
        sent_by: Dict[int, int] = {}
        for v in sorted(active):
            result = program.step(states[v], t, inboxes[v])
            if len(result.outbox) != g.degree(v):
                raise ProgramFault(
                    f"vertex {v} produced outbox of length {len(result.outbox)}, "
                    f"expected {g.degree(v)}")
            states[v] = result.state
            for p, msg in enumerate(result.outbox):
                if msg is None:
                    continue
                bits = message_bits(msg, n)
                if bit_budget is not None and bits > bit_budget:
                    raise BitBudgetExceeded(
                        f"message of {bits} bits exceeds budget {bit_budget}")
                max_bits = max(max_bits, bits)
                sent += 1
                sent_by[v] = sent_by.get(v, 0) + 1
                u, q = peer[(v, p)]
                next_inboxes[u][q] = msg
            if result.halted:
                outputs[v] = result.output
                active.discard(v)
        messages_per_round.append(sent)
        if trace is not None:
            received = {v: sum(m is not None for m in inboxes[v])
                        for v in g.vertices if any(m is not None for m in inboxes[v])}
            trace.write(json.dumps({"round": t, "sent": sent_by,
                                    "received": received,
                                    "max_bits": max_bits},
                                   sort_keys=True) + "\n")
        inboxes = next_inboxes
    return SimulationReport(outputs=outputs,
                            rounds_executed=max(t - 1, 0),
                            max_message_bits=max_bits,
                            messages_per_round=messages_per_round)
