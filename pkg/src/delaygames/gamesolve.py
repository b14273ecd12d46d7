"""Parity game arenas, the solver wrapper, and the concrete game encodings.

Arenas here carry priorities on edges.  The solver reduces edge priorities
to the classic vertex-priority setting by splitting every edge through an
auxiliary vertex; original vertices receive the globally minimal priority,
which never changes the limit superior along an infinite play.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Optional

from .automata import OmegaAutomaton, ParityAcceptance
from .backend import BACKEND, solve_game
from .errors import BudgetError, InputError
from .monitors import FRESH

PLAYER_O = 0  # wins when the highest priority seen infinitely often is even
PLAYER_I = 1


@dataclass
class ParityGameArena:
    """Finite game graph; succ[v] lists (target, priority, label) edges."""

    owners: list
    succ: list
    payloads: Optional[list]
    initial: int

    def vertex_count(self) -> int:
        return len(self.owners)

    def edge_count(self) -> int:
        return sum(len(es) for es in self.succ)

    def payload(self, v):
        return self.payloads[v] if self.payloads is not None else None


class ArenaBuilder:
    def __init__(self):
        self.owners = []
        self.succ = []
        self.payloads = []

    def add_vertex(self, owner: int, payload=None) -> int:
        if owner not in (PLAYER_O, PLAYER_I):
            raise InputError("owner must be %d or %d" % (PLAYER_O, PLAYER_I))
        self.owners.append(owner)
        self.succ.append([])
        self.payloads.append(payload)
        return len(self.owners) - 1

    def add_edge(self, u: int, v: int, priority: int, label=None):
        if not (0 <= u < len(self.owners) and 0 <= v < len(self.owners)):
            raise InputError("edge endpoints out of range")
        if not isinstance(priority, int) or priority < 0:
            raise InputError("edge priority must be a natural number")
        self.succ[u].append((v, priority, label))

    def build(self, initial: int = 0) -> ParityGameArena:
        if not self.owners:
            raise InputError("arena has no vertices")
        if not (0 <= initial < len(self.owners)):
            raise InputError("initial vertex out of range")
        return ParityGameArena(
            owners=self.owners, succ=self.succ, payloads=self.payloads, initial=initial
        )


@dataclass
class SolveResult:
    arena: ParityGameArena
    winner: list  # player per vertex
    strategy: dict  # vertex -> chosen edge slot, for vertices owned by their winner
    backend: str

    def winner_of(self, v: int) -> int:
        return self.winner[v]

    def strategy_slot(self, v: int):
        return self.strategy.get(v)

    def strategy_edge(self, v: int):
        slot = self.strategy.get(v)
        if slot is None:
            raise InputError("no strategy stored at vertex %d" % v)
        return self.arena.succ[v][slot]


def solve(arena: ParityGameArena) -> SolveResult:
    """Decide the arena for both players and extract positional strategies."""
    n = arena.vertex_count()
    for v in range(n):
        if not arena.succ[v]:
            raise InputError("vertex %d has no successors; arenas must be total" % v)

    first_edge = [0] * (n + 1)
    for v in range(n):
        first_edge[v + 1] = first_edge[v] + len(arena.succ[v])
    m = first_edge[n]
    neutral = min(pri for es in arena.succ for (_, pri, _) in es)

    total = n + m
    owner_k = [0] * total
    pri_k = [neutral] * total
    succ_start = [0] * (total + 1)
    succ_to = [0] * m * 2
    # originals point at their edge vertices, each edge vertex at its target
    pos = 0
    for v in range(n):
        owner_k[v] = arena.owners[v]
        succ_start[v] = pos
        base = n + first_edge[v]
        for slot in range(len(arena.succ[v])):
            succ_to[pos] = base + slot
            pos += 1
    for v in range(n):
        for slot, (t, pri, _) in enumerate(arena.succ[v]):
            e = n + first_edge[v] + slot
            pri_k[e] = pri
            succ_start[e] = pos
            succ_to[pos] = t
            pos += 1
    succ_start[total] = pos

    winner_k, strat_k = solve_game(owner_k, pri_k, succ_start, succ_to)

    winner = list(winner_k[:n])
    strategy = {}
    for v in range(n):
        if winner[v] == arena.owners[v]:
            aux = strat_k[v]
            strategy[v] = aux - n - first_edge[v]
    return SolveResult(arena=arena, winner=winner, strategy=strategy, backend=BACKEND)


def _require_parity(automaton: OmegaAutomaton, what: str):
    if not isinstance(automaton.acceptance, ParityAcceptance):
        raise InputError("%s needs a parity automaton; convert the condition first" % what)


@dataclass
class GaleStewartGame:
    """Arena of the game without lookahead (one letter back and forth)."""

    arena: ParityGameArena
    stub: int
    choice_ids: dict  # (state, input letter) -> vertex, output player to move
    transition_ids: dict  # (state, (a, b), state') -> vertex, input player to move


def build_gs_arena(automaton: OmegaAutomaton) -> GaleStewartGame:
    _require_parity(automaton, "the letter game")
    colors = automaton.acceptance.colors
    neutral = min(colors.values())

    builder = ArenaBuilder()
    stub = builder.add_vertex(PLAYER_I, ("stub",))
    choice_ids = {}
    for q in automaton.states:
        for a in automaton.input_symbols:
            choice_ids[(q, a)] = builder.add_vertex(PLAYER_O, ("choice", q, a))
    transition_ids = {}
    for t in automaton.transitions():
        transition_ids[t] = builder.add_vertex(PLAYER_I, ("step",) + t)

    for a in automaton.input_symbols:
        builder.add_edge(stub, choice_ids[(automaton.initial, a)], neutral, a)
    for (q, a), v in choice_ids.items():
        for b in automaton.output_symbols:
            q2 = automaton.step(q, (a, b))
            builder.add_edge(v, transition_ids[(q, (a, b), q2)], colors[q], b)
    for (q, lt, q2), v in transition_ids.items():
        for a in automaton.input_symbols:
            builder.add_edge(v, choice_ids[(q2, a)], neutral, a)

    return GaleStewartGame(
        arena=builder.build(initial=stub),
        stub=stub,
        choice_ids=choice_ids,
        transition_ids=transition_ids,
    )


def delay_oblivious_vertex_count(automaton: OmegaAutomaton, lookahead: int) -> int:
    """Size of the lookahead arena, computed before materializing it."""
    if lookahead < 1:
        raise InputError("lookahead must be at least 1")
    s = len(automaton.input_symbols)
    q = len(automaton.states)
    fills = sum(s**k for k in range(0, lookahead - 1))
    return fills + q * s ** (lookahead - 1) + q * s**lookahead


@dataclass
class DelayObliviousGame:
    """Arena where the input player stays `lookahead` letters ahead."""

    arena: ParityGameArena
    lookahead: int
    fill_ids: dict  # input prefix (len < lookahead-1) -> vertex
    wait_ids: dict  # (state, window of len lookahead-1) -> vertex, input player moves
    choice_ids: dict  # (state, window of len lookahead) -> vertex, output player moves


def build_delay_oblivious_arena(
    automaton: OmegaAutomaton, lookahead: int, budget_vertices: int = 10**6
) -> DelayObliviousGame:
    _require_parity(automaton, "the lookahead game")
    total = delay_oblivious_vertex_count(automaton, lookahead)
    if total > budget_vertices:
        raise BudgetError(
            "lookahead arena needs %d vertices, budget is %d" % (total, budget_vertices)
        )
    colors = automaton.acceptance.colors
    neutral = min(colors.values())
    d = lookahead
    letters = automaton.input_symbols

    builder = ArenaBuilder()
    fill_ids = {}
    wait_ids = {}
    choice_ids = {}
    for k in range(0, d - 1):
        for p in itertools.product(letters, repeat=k):
            fill_ids[p] = builder.add_vertex(PLAYER_I, ("fill", p))
    for q in automaton.states:
        for w in itertools.product(letters, repeat=d - 1):
            wait_ids[(q, w)] = builder.add_vertex(PLAYER_I, ("wait", q, w))
    for q in automaton.states:
        for w in itertools.product(letters, repeat=d):
            choice_ids[(q, w)] = builder.add_vertex(PLAYER_O, ("choice", q, w))

    for p, v in fill_ids.items():
        for a in letters:
            ext = p + (a,)
            if len(ext) < d - 1:
                builder.add_edge(v, fill_ids[ext], neutral, a)
            else:
                builder.add_edge(v, wait_ids[(automaton.initial, ext)], neutral, a)
    for (q, w), v in wait_ids.items():
        for a in letters:
            builder.add_edge(v, choice_ids[(q, w + (a,))], neutral, a)
    for (q, w), v in choice_ids.items():
        for b in automaton.output_symbols:
            q2 = automaton.step(q, (w[0], b))
            builder.add_edge(v, wait_ids[(q2, w[1:])], colors[q], b)

    initial = fill_ids[()] if d >= 2 else wait_ids[(automaton.initial, ())]
    return DelayObliviousGame(
        arena=builder.build(initial=initial),
        lookahead=d,
        fill_ids=fill_ids,
        wait_ids=wait_ids,
        choice_ids=choice_ids,
    )


@dataclass
class GSTransducer:
    """Moore machine over announcement classes: reading a class moves the
    state, and lam of the state reached is the pick it answers with.  The
    pick answers the previous class; the first one is forced to the initial
    (state, FRESH) pair."""

    input_symbols: tuple  # class ids
    output_symbols: tuple  # (automaton state, memory) picks
    state_count: int
    initial: int
    delta: list  # per state, {class id: state}
    lam: list  # per state, None (initial only) or a pick
    meta: Optional[list] = None

    def run(self, word):
        z = self.initial
        out = []
        for cid in word:
            z = self.delta[z][cid]
            out.append(self.lam[z])
        return out


def extract_gs_transducer(reduced, result: SolveResult) -> GSTransducer:
    """Winning strategy of the reduced game, as a transducer over classes.

    States are (announcement vertex, last pick) pairs reachable under the
    output player's positional strategy; the input alphabet is the set of
    infinite class ids.
    """
    arena = reduced.arena
    if result.arena is not arena:
        raise InputError("solve result belongs to a different arena")
    if result.winner_of(reduced.pre_vertex) != PLAYER_O:
        raise InputError("the output player does not win the reduced game")
    table = reduced.table
    forced = (table.product.automaton.initial, FRESH)
    nodes = [(reduced.pre_vertex, None)]
    ids = {nodes[0]: 0}
    delta = [dict()]
    lam = [None]
    head = 0
    while head < len(nodes):
        vertex, _ = nodes[head]
        z = head
        head += 1
        moves = {label: tgt for (tgt, _, label) in arena.succ[vertex]}
        for cid in table.infinite_ids:
            tgt = moves[cid]
            if vertex == reduced.pre_vertex:
                node = (tgt, forced)
            else:
                ivert, _, pick = result.strategy_edge(tgt)
                node = (ivert, pick)
            if node not in ids:
                ids[node] = len(nodes)
                nodes.append(node)
                delta.append(dict())
                lam.append(node[1])
            delta[z][cid] = ids[node]
    picks = sorted({p for p in lam if p is not None}, key=lambda t: (str(t[0]), str(t[1])))
    return GSTransducer(
        input_symbols=tuple(table.infinite_ids),
        output_symbols=tuple(picks),
        state_count=len(nodes),
        initial=0,
        delta=delta,
        lam=lam,
        meta=nodes,
    )
