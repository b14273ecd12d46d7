"""Monitors, aggregation schemes, and the automaton-monitor product.

A monitor condenses a nonempty finite run piece into one memory value: the
piece's first transition initializes the memory from the fresh marker, and
every further transition folds into it.  An aggregation scheme couples a
monitor with a priority automaton over memory values; the scheme is *strong*
when acceptance of a run only depends on the aggregated memory sequence of
any decomposition into bounded-length pieces (the parity scheme below is
strong, which is what licenses the whole reduction).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from .automata import LassoWord, OmegaAutomaton, ParityAcceptance
from .errors import InputError


class _Fresh:
    """Marker for 'no transition folded yet'; never a monitor memory value."""

    __slots__ = ()

    def __repr__(self):
        return "FRESH"


FRESH = _Fresh()


@dataclass(frozen=True)
class Monitor:
    """Memory values, the fresh marker, and the fold function.

    `update(memory_or_FRESH, transition) -> memory`; FRESH is never returned.
    `source` is the automaton the monitor was built for; products check it.
    """

    memory: tuple[Any, ...]
    update: Callable[[Any, tuple], Any]
    source: OmegaAutomaton = field(compare=False)

    def aggregate_piece(self, piece) -> Any:
        """Memory value of one nonempty run piece."""
        if not piece:
            raise InputError("monitor pieces must be nonempty")
        m = FRESH
        for t in piece:
            m = self.update(m, t)
        return m


@dataclass(frozen=True)
class PriorityAutomaton:
    """Deterministic complete automaton over memory values with transition
    priorities; accepts a memory stream iff the limsup of the priorities
    along the run is even."""

    states: tuple[Any, ...]
    initial: Any
    table: Mapping[tuple[Any, Any], tuple[Any, int]]  # (state, m) -> (state', priority)

    def step(self, p, m):
        try:
            return self.table[(p, m)]
        except KeyError:
            raise InputError("priority automaton undefined on (%r, %r)" % (p, m)) from None

    def accepts_lasso(self, prefix, period) -> bool:
        if not period:
            raise InputError("lasso period must be nonempty")
        p = self.initial
        for m in prefix:
            p, _ = self.step(p, m)
        seen = {}
        trail = []
        pos = 0
        while (p, pos) not in seen:
            seen[(p, pos)] = len(trail)
            p2, pri = self.step(p, period[pos])
            trail.append(pri)
            p = p2
            pos = (pos + 1) % len(period)
        start = seen[(p, pos)]
        return max(trail[start:]) % 2 == 0


@dataclass(frozen=True)
class AggregationScheme:
    monitor: Monitor
    acceptance: PriorityAutomaton
    strength: str  # "strong" or "weak"

    def __post_init__(self):
        if self.strength not in ("strong", "weak"):
            raise InputError("strength must be 'strong' or 'weak'")


def parity_scheme(automaton: OmegaAutomaton) -> AggregationScheme:
    """The strong aggregation scheme for a parity automaton.

    Memory is the set of colors in use; a piece aggregates to the maximum
    color of its transitions (source-state colors).  The priority automaton
    has a single state and gives each memory value itself as priority, so it
    accepts a memory stream iff the limsup of the values is even, which is
    the parity condition applied piecewise.
    """
    if not isinstance(automaton.acceptance, ParityAcceptance):
        raise InputError("parity_scheme expects a parity automaton")
    colors = automaton.acceptance.colors

    def update(m, transition):
        c = colors[transition[0]]
        if m is FRESH:
            return c
        return m if m >= c else c

    memory = tuple(sorted(set(colors.values())))
    monitor = Monitor(memory=memory, update=update, source=automaton)
    table = {("p", m): ("p", m) for m in memory}
    acceptance = PriorityAutomaton(states=("p",), initial="p", table=table)
    return AggregationScheme(monitor=monitor, acceptance=acceptance, strength="strong")


def muller_monitor(automaton: OmegaAutomaton) -> Monitor:
    """Monitor collecting the set of source states of a piece.

    Memory values are canonical sorted tuples of states.  This is the natural
    aggregation for Muller conditions; the solving pipeline nevertheless goes
    through the parity conversion, so no scheme is built here.
    """
    order = {q: i for i, q in enumerate(automaton.states)}

    def canon(states) -> tuple:
        return tuple(sorted(states, key=order.__getitem__))

    def update(m, transition):
        q = transition[0]
        if m is FRESH:
            return (q,)
        if q in m:
            return m
        return canon(set(m) | {q})

    import itertools

    memory = []
    for size in range(1, len(automaton.states) + 1):
        for combo in itertools.combinations(automaton.states, size):
            memory.append(canon(combo))
    return Monitor(memory=tuple(memory), update=update, source=automaton)


@dataclass(frozen=True)
class ProductAutomaton:
    """The automaton extended with monitor memory, no acceptance attached.

    States are (q, m) with m either FRESH (initially) or a memory value; each
    step folds the transition just taken into the memory.  The state space is
    Q x (memory + FRESH); it is stepped on demand rather than materialized.
    """

    automaton: OmegaAutomaton
    monitor: Monitor

    def __post_init__(self):
        if self.monitor.source is not self.automaton and self.monitor.source != self.automaton:
            raise InputError("monitor was built for a different automaton")

    @property
    def initial(self):
        return (self.automaton.initial, FRESH)

    def step(self, state, letter):
        q, m = state
        q2 = self.automaton.step(q, letter)
        return (q2, self.monitor.update(m, (q, letter, q2)))

    def run(self, state, word):
        for lt in word:
            state = self.step(state, lt)
        return state


def product_with_monitor(automaton: OmegaAutomaton, monitor: Monitor) -> ProductAutomaton:
    return ProductAutomaton(automaton=automaton, monitor=monitor)


def aggregate(monitor: Monitor, pieces) -> list:
    """Aggregate consecutive run pieces to their memory values.

    The pieces must concatenate to a legal finite run of the monitor's
    automaton: each transition must agree with the transition function and
    consecutive pieces must chain (end state = next start state).
    """
    automaton = monitor.source
    pieces = [tuple(p) for p in pieces]
    if any(not p for p in pieces):
        raise InputError("monitor pieces must be nonempty")
    flat = [t for p in pieces for t in p]
    for i, (q, lt, q2) in enumerate(flat):
        if automaton.step(q, lt) != q2:
            raise InputError("piece transition %r is not a transition of the automaton" % ((q, lt, q2),))
        if i + 1 < len(flat) and flat[i + 1][0] != q2:
            raise InputError("pieces do not chain at position %d" % i)
    return [monitor.aggregate_piece(p) for p in pieces]
