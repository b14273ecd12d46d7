"""Deterministic omega-automata over paired input/output alphabets.

An automaton reads letters (a, b) with a drawn from the input symbols and b
from the output symbols; it is the winning condition of a two-player game in
which Player I supplies the a-stream and Player O the b-stream.  Automata are
complete and deterministic.  Acceptance is either parity (max-even over the
colors of the states visited infinitely often, with the color of a transition
defined as the color of its source state) or Muller (the set of states
visited infinitely often belongs to a declared family).

Acceptance is only ever evaluated on ultimately periodic words, given as
`LassoWord(prefix, period)`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from .errors import InputError

State = Any
Letter = Any  # always an (input symbol, output symbol) pair


@dataclass(frozen=True)
class ParityAcceptance:
    """Max-parity acceptance; `colors` maps every state to a natural number."""

    colors: Mapping[State, int]

    kind = "parity"


@dataclass(frozen=True)
class MullerAcceptance:
    """Muller acceptance; `family` holds the accepting sets of states."""

    family: frozenset[frozenset[State]]

    kind = "muller"


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word prefix . period^omega."""

    prefix: tuple[Letter, ...]
    period: tuple[Letter, ...]

    def __post_init__(self):
        if len(self.period) == 0:
            raise InputError("lasso period must be nonempty")

    def letter(self, i: int) -> Letter:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]


@dataclass(frozen=True)
class DelayFunction:
    """A constant delay function: f(0) = lookahead >= 1 and f(i) = 1 after.

    Player I is `lookahead` letters ahead of Player O from round 0 on; the
    lookahead never grows or shrinks.
    """

    lookahead: int

    def __post_init__(self):
        if self.lookahead < 1:
            raise InputError("lookahead must be >= 1")

    def __call__(self, i: int) -> int:
        return self.lookahead if i == 0 else 1


@dataclass(frozen=True, eq=True)
class OmegaAutomaton:
    states: tuple[State, ...]
    input_symbols: tuple[Any, ...]
    output_symbols: tuple[Any, ...]
    initial: State
    delta: Mapping[tuple[State, Letter], State]
    acceptance: ParityAcceptance | MullerAcceptance

    def __post_init__(self):
        if len(set(self.states)) != len(self.states):
            raise InputError("duplicate states")
        if not self.states:
            raise InputError("automaton needs at least one state")
        if not self.input_symbols or not self.output_symbols:
            raise InputError("alphabets must be nonempty")
        if len(set(self.input_symbols)) != len(self.input_symbols):
            raise InputError("duplicate input symbols")
        if len(set(self.output_symbols)) != len(self.output_symbols):
            raise InputError("duplicate output symbols")
        if self.initial not in set(self.states):
            raise InputError("initial state %r not among states" % (self.initial,))
        stateset = set(self.states)
        expected = set(
            (q, lt) for q in self.states for lt in self.alphabet
        )
        got = set(self.delta.keys())
        if got != expected:
            missing = expected - got
            extra = got - expected
            if missing:
                q, (a, b) = sorted(missing, key=repr)[0]
                raise InputError(
                    "transition function incomplete: no transition for "
                    "(%r, %r/%r)" % (q, a, b)
                )
            q, lt = sorted(extra, key=repr)[0]
            raise InputError("transition from unknown state or letter (%r, %r)" % (q, lt))
        for (q, lt), q2 in self.delta.items():
            if q2 not in stateset:
                raise InputError("transition target %r not a state" % (q2,))
        if isinstance(self.acceptance, ParityAcceptance):
            colors = self.acceptance.colors
            if set(colors.keys()) != stateset:
                raise InputError("parity colors must cover exactly the states")
            for q, c in colors.items():
                if not isinstance(c, int) or c < 0:
                    raise InputError("color of %r must be a natural number" % (q,))
        elif isinstance(self.acceptance, MullerAcceptance):
            for s in self.acceptance.family:
                if not s <= stateset:
                    raise InputError("acceptance set %r mentions unknown states" % (set(s),))
        else:
            raise InputError("unknown acceptance kind")

    @property
    def alphabet(self) -> tuple[Letter, ...]:
        return tuple(itertools.product(self.input_symbols, self.output_symbols))

    @property
    def kind(self) -> str:
        return self.acceptance.kind

    def step(self, q: State, letter: Letter) -> State:
        try:
            return self.delta[(q, letter)]
        except KeyError:
            raise InputError("no transition for (%r, %r)" % (q, letter)) from None

    def color(self, q: State) -> int:
        # edge color convention: the color of a transition is the color of
        # its source state, so per-state colors are all we need
        if not isinstance(self.acceptance, ParityAcceptance):
            raise InputError("colors are only defined for parity automata")
        return self.acceptance.colors[q]

    def transitions(self):
        """All transitions as (q, letter, q') triples in canonical order."""
        for q in self.states:
            for lt in self.alphabet:
                yield (q, lt, self.delta[(q, lt)])


def run_finite(automaton: OmegaAutomaton, q: State, word) -> tuple[tuple, State]:
    """Run from q over a finite word; return (transition triples, end state)."""
    if q not in set(automaton.states):
        raise InputError("unknown start state %r" % (q,))
    trace = []
    cur = q
    for lt in word:
        nxt = automaton.step(cur, lt)
        trace.append((cur, lt, nxt))
        cur = nxt
    return tuple(trace), cur


def accepts_lasso(automaton: OmegaAutomaton, lasso: LassoWord) -> bool:
    """Decide whether the automaton accepts prefix . period^omega.

    The run is simulated until the pair (state, position inside the period)
    repeats; the states strictly between the two occurrences are exactly the
    states visited infinitely often.
    """
    _, q = run_finite(automaton, automaton.initial, lasso.prefix)
    period = lasso.period
    seen = {}
    trail = []  # states at successive period positions
    pos = 0
    while (q, pos) not in seen:
        seen[(q, pos)] = len(trail)
        trail.append(q)
        q = automaton.step(q, period[pos])
        pos = (pos + 1) % len(period)
    start = seen[(q, pos)]
    cycle_states = trail[start:]
    if isinstance(automaton.acceptance, ParityAcceptance):
        top = max(automaton.color(s) for s in cycle_states)
        return top % 2 == 0
    return frozenset(cycle_states) in automaton.acceptance.family


def _lar_color(record: tuple, hit: int, family) -> int:
    """Color of a record/hit pair: even iff the record prefix up to and
    including the hit position forms an accepting set."""
    prefix_set = frozenset(record[: hit + 1])
    if prefix_set in family:
        return 2 * (hit + 1)
    return 2 * (hit + 1) - 1


def lar_convert(automaton: OmegaAutomaton) -> OmegaAutomaton:
    """Convert a Muller automaton to an equivalent parity automaton.

    States are latest-appearance records: a permutation of the original
    states (most recent first) plus the hit position of the previous move.
    Only records reachable from the initial one are built, so the result has
    at most |Q| * |Q|! states.  A state is colored even exactly when the
    record prefix up to the hit position is an accepting set; on the states
    visited infinitely often the deepest recurring hit isolates exactly the
    infinity set of the original run, so lasso acceptance is preserved.
    """
    if not isinstance(automaton.acceptance, MullerAcceptance):
        raise InputError("lar_convert expects a Muller automaton")
    family = automaton.acceptance.family
    rest = tuple(q for q in automaton.states if q != automaton.initial)
    init = ((automaton.initial,) + rest, 0)

    def step(state, letter):
        record, _ = state
        q2 = automaton.step(record[0], letter)
        j = record.index(q2)
        new_record = (q2,) + record[:j] + record[j + 1 :]
        return (new_record, j)

    order = [init]
    index = {init: 0}
    delta = {}
    alphabet = automaton.alphabet
    head = 0
    while head < len(order):
        st = order[head]
        head += 1
        for lt in alphabet:
            nxt = step(st, lt)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            delta[(st, lt)] = nxt
    colors = {st: _lar_color(st[0], st[1], family) for st in order}
    return OmegaAutomaton(
        states=tuple(order),
        input_symbols=automaton.input_symbols,
        output_symbols=automaton.output_symbols,
        initial=init,
        delta=delta,
        acceptance=ParityAcceptance(colors),
    )


def rename_states(automaton: OmegaAutomaton, prefix: str = "q") -> tuple[OmegaAutomaton, dict]:
    """Rename states to prefix0..prefixN (in state order); returns the mapping.

    Needed to serialize automata whose states are structured values (for
    example latest-appearance records).
    """
    mapping = {q: "%s%d" % (prefix, i) for i, q in enumerate(automaton.states)}
    delta = {(mapping[q], lt): mapping[q2] for (q, lt), q2 in automaton.delta.items()}
    if isinstance(automaton.acceptance, ParityAcceptance):
        acc = ParityAcceptance({mapping[q]: c for q, c in automaton.acceptance.colors.items()})
    else:
        acc = MullerAcceptance(
            frozenset(frozenset(mapping[q] for q in s) for s in automaton.acceptance.family)
        )
    renamed = OmegaAutomaton(
        states=tuple(mapping[q] for q in automaton.states),
        input_symbols=automaton.input_symbols,
        output_symbols=automaton.output_symbols,
        initial=mapping[automaton.initial],
        delta=delta,
        acceptance=acc,
    )
    return renamed, mapping
