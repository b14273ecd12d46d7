"""Playing strategies against adversaries, and brute-force oracles.

Everything here is independent of the reduction: plays are simulated letter
by letter, winners are decided by solving the explicit lookahead arena, and
small winning transducers are found by enumerating all candidates.  The
acceptance tests use these as oracles against the aggregation pipeline.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Optional

from .automata import LassoWord, OmegaAutomaton, ParityAcceptance, accepts_lasso
from .errors import BudgetError, InputError
from .gamesolve import (
    PLAYER_I,
    PLAYER_O,
    build_delay_oblivious_arena,
    solve,
)
from .strategies import (
    DelayExecutor,
    DelayObliviousTransducer,
    _executor_step,
)


@dataclass
class Budget:
    vertices: int = 10**6
    candidates: int = 4 * 10**6


class LassoAdversary:
    """Plays prefix, then period forever."""

    def __init__(self, prefix, period):
        self.prefix = tuple(prefix)
        self.period = tuple(period)
        if not self.period:
            raise InputError("adversary period must be nonempty")

    def letter(self, k: int):
        if k < len(self.prefix):
            return self.prefix[k]
        return self.period[(k - len(self.prefix)) % len(self.period)]

    def phase(self, k: int):
        """Canonical position for cycle detection."""
        if k < len(self.prefix):
            return k
        return len(self.prefix) + (k - len(self.prefix)) % len(self.period)

    periodic = True


class RandomAdversary:
    """Uniform letters from a seeded generator; reproducible."""

    def __init__(self, symbols, seed: int):
        self.symbols = tuple(symbols)
        if not self.symbols:
            raise InputError("adversary needs a nonempty symbol set")
        self.seed = seed
        self._rng = random.Random(seed)
        self._cache: list = []

    def letter(self, k: int):
        while len(self._cache) <= k:
            self._cache.append(self._rng.choice(self.symbols))
        return self._cache[k]

    periodic = False


def random_lasso(rng, symbols, max_prefix: int = 3, max_period: int = 4) -> LassoAdversary:
    """Draw an ultimately periodic adversary from a seeded generator."""
    symbols = tuple(symbols)
    prefix = tuple(rng.choice(symbols) for _ in range(rng.randrange(0, max_prefix + 1)))
    period = tuple(rng.choice(symbols) for _ in range(rng.randrange(1, max_period + 1)))
    return LassoAdversary(prefix, period)


class _TransducerAdapter:
    """Letter-level view of a transducer with per-state tables."""

    def __init__(self, transducer, lookahead: int):
        self.transducer = transducer
        self.lookahead = lookahead

    def initial_state(self):
        return (self.transducer.initial, 0)

    def transition(self, st, letter):
        z, k = st
        z2, raw = self.transducer.advance(z, letter)
        due = k >= self.lookahead - 1
        k2 = k + 1 if k < self.lookahead - 1 else k
        return (z2, k2), (raw if due else None)


class _BlockAdapter:
    """Letter-level view of a block transducer (lookahead twice the block
    length), stepping executor snapshots purely."""

    def __init__(self, transducer):
        self.transducer = transducer
        self.lookahead = 2 * transducer.block_length

    def initial_state(self):
        return (self.transducer.initial, None, (), ())

    def transition(self, st, letter):
        return _executor_step(self.transducer, st, letter)


def as_letter_strategy(strategy):
    """Adapter with initial_state/transition/lookahead for any strategy kind."""
    if isinstance(strategy, DelayObliviousTransducer):
        return _TransducerAdapter(strategy, strategy.lookahead)
    if isinstance(strategy, DelayExecutor):
        return _BlockAdapter(strategy.transducer)
    if hasattr(strategy, "block_length"):
        return _BlockAdapter(strategy)
    raise InputError("unsupported strategy object %r" % type(strategy).__name__)


@dataclass
class PlayRecord:
    inputs: tuple
    outputs: tuple  # outputs[j] answers inputs[j]
    lookahead: int
    prefix: Optional[tuple] = None  # pair lasso, when one was detected
    period: Optional[tuple] = None
    accepted: Optional[bool] = None


def simulate(automaton: OmegaAutomaton, strategy, adversary, rounds: int) -> PlayRecord:
    """Drive the strategy for `rounds` input letters; no verdict is drawn."""
    adapter = as_letter_strategy(strategy)
    st = adapter.initial_state()
    inputs = []
    outputs = []
    for k in range(rounds):
        a = adversary.letter(k)
        inputs.append(a)
        st, out = adapter.transition(st, a)
        if k >= adapter.lookahead - 1:
            if out is None:
                raise InputError("strategy failed to answer input %d" % (k - adapter.lookahead + 1))
            outputs.append(out)
    return PlayRecord(
        inputs=tuple(inputs), outputs=tuple(outputs), lookahead=adapter.lookahead
    )


@dataclass
class VerifyResult:
    ok: bool
    lasso: LassoWord
    steps: int
    record: PlayRecord


def verify_strategy(automaton: OmegaAutomaton, strategy, adversary) -> VerifyResult:
    """Exact verdict of one play against an eventually periodic adversary.

    The pair (adversary phase, strategy state, automaton state) is finite
    and the play is deterministic, so it enters a cycle; the induced pair
    lasso is then checked against the acceptance condition.
    """
    if not getattr(adversary, "periodic", False):
        raise InputError("verification needs an eventually periodic adversary")
    adapter = as_letter_strategy(strategy)
    st = adapter.initial_state()
    q = automaton.initial
    inputs: list = []
    outputs: list = []
    pairs: list = []
    seen: dict = {}
    k = 0
    while True:
        config = (adversary.phase(k), st, q)
        if config in seen:
            c1 = seen[config]
            c2 = len(pairs)
            prefix = tuple(pairs[:c1])
            period = tuple(pairs[c1:c2])
            lasso = LassoWord(prefix=prefix, period=period)
            ok = accepts_lasso(automaton, lasso)
            record = PlayRecord(
                inputs=tuple(inputs),
                outputs=tuple(outputs),
                lookahead=adapter.lookahead,
                prefix=prefix,
                period=period,
                accepted=ok,
            )
            return VerifyResult(ok=ok, lasso=lasso, steps=k, record=record)
        seen[config] = len(pairs)
        a = adversary.letter(k)
        inputs.append(a)
        st, out = adapter.transition(st, a)
        if k >= adapter.lookahead - 1:
            if out is None:
                raise InputError("strategy failed to answer input %d" % (k - adapter.lookahead + 1))
            j = k - adapter.lookahead + 1
            outputs.append(out)
            pair = (inputs[j], out)
            pairs.append(pair)
            q = automaton.step(q, pair)
        k += 1


def brute_force_winner(
    automaton: OmegaAutomaton, lookahead: int, budget_vertices: int = 10**6
) -> int:
    """Winner of the lookahead game, decided on the explicit arena."""
    game = build_delay_oblivious_arena(automaton, lookahead, budget_vertices)
    result = solve(game.arena)
    return result.winner_of(game.arena.initial)


def _candidate_wins(automaton, colors, lookahead, lam_tup, delta_flat):
    letters = automaton.input_symbols
    trans = automaton.delta
    s = len(letters)
    d = lookahead
    if d >= 2:
        init = ("f", 0, ())
    else:
        init = ("s", 0, automaton.initial, ())
    ids = {init: 0}
    order = [init]
    edges = []  # (source id, target id, priority or -1)
    head = 0
    while head < len(order):
        node = order[head]
        src = head
        head += 1
        for ai, a in enumerate(letters):
            if node[0] == "f":
                _, c, w = node
                c2 = delta_flat[c * s + ai]
                w2 = w + (a,)
                if len(w2) <= d - 2:
                    nxt = ("f", c2, w2)
                else:
                    nxt = ("s", c2, automaton.initial, w2)
                pri = -1
            else:
                _, c, q, w = node
                c2 = delta_flat[c * s + ai]
                b = lam_tup[c2]
                if d >= 2:
                    q2 = trans[(q, (w[0], b))]
                    w2 = w[1:] + (a,)
                else:
                    q2 = trans[(q, (a, b))]
                    w2 = ()
                nxt = ("s", c2, q2, w2)
                pri = colors[q]
            t = ids.get(nxt)
            if t is None:
                t = len(order)
                ids[nxt] = t
                order.append(nxt)
            edges.append((src, t, pri))
    odd_ps = sorted({c for c in colors.values() if c % 2 == 1})
    for p in odd_ps:
        if _odd_cycle_at(len(order), edges, p):
            return False
    return True


def _odd_cycle_at(n, edges, p):
    """True when a cycle using only priorities <= p contains priority p."""
    adj = [[] for _ in range(n)]
    for (u, v, pri) in edges:
        if pri <= p:
            adj[u].append(v)
    comp = _tarjan(n, adj)
    for (u, v, pri) in edges:
        if pri == p and comp[u] == comp[v]:
            return True
    return False


def _tarjan(n, adj):
    index_of = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = bytearray(n)
    stack = []
    counter = [0]
    ncomp = [0]
    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        index_of[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack[root] = 1
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index_of[w] == -1:
                    index_of[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack[w] = 1
                    work.append((w, 0))
                elif on_stack[w]:
                    if index_of[w] < low[v]:
                        low[v] = index_of[w]
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index_of[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = 0
                        comp[w] = ncomp[0]
                        if w == v:
                            break
                    ncomp[0] += 1
    return comp


def exhaustive_transducer_search(
    automaton: OmegaAutomaton,
    state_count: int,
    lookahead: int,
    candidate_budget: int = 4 * 10**6,
):
    """Smallest-first scan over all transducers with exactly `state_count`
    states and the given lookahead; returns (winner or None, candidates
    examined).  The winner is checked against every input the adversary can
    ever produce, by cycle analysis of the one-player product graph.
    """
    if not isinstance(automaton.acceptance, ParityAcceptance):
        raise InputError("the search needs a parity automaton")
    if state_count < 1 or lookahead < 1:
        raise InputError("state count and lookahead must be at least 1")
    colors = automaton.acceptance.colors
    letters = automaton.input_symbols
    s = len(letters)
    k = state_count
    tried = 0
    for lam_tup in itertools.product(automaton.output_symbols, repeat=k):
        for delta_flat in itertools.product(range(k), repeat=k * s):
            tried += 1
            if tried > candidate_budget:
                raise BudgetError(
                    "candidate budget %d exhausted after %d candidates"
                    % (candidate_budget, tried - 1)
                )
            if _candidate_wins(automaton, colors, lookahead, lam_tup, delta_flat):
                delta = [
                    {a: delta_flat[z * s + ai] for ai, a in enumerate(letters)}
                    for z in range(k)
                ]
                lam = list(lam_tup)
                found = DelayObliviousTransducer(
                    input_symbols=letters,
                    output_symbols=automaton.output_symbols,
                    lookahead=lookahead,
                    state_count=k,
                    initial=0,
                    delta=delta,
                    lam=lam,
                )
                return found, tried
    return None, tried
