"""Transition summaries, the class table, and the reduced delay-free game.

A nonempty finite input word w induces a transition summary: for every state
q, the set of (state, memory) pairs the output player can reach from q by
choosing output letters along w.  Words with equal summaries are
interchangeable, and there are finitely many summaries, so blocks of the
delay game can be abstracted to summary classes.  The reduced game is played
directly on classes: the input player keeps exactly one class of lookahead
ahead of the output player, who resolves the pending class to one
(state, memory) pair; a priority automaton turns the memory stream into a
parity condition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Optional

from .automata import OmegaAutomaton
from .errors import DegenerateGameError, InputError
from .monitors import FRESH, AggregationScheme, ProductAutomaton
from .gamesolve import ArenaBuilder, PLAYER_I, PLAYER_O


def powerset_step(product: ProductAutomaton, pairs, letter):
    """All (state, memory) pairs reachable from `pairs` on one input letter,
    over every output letter the output player might choose."""
    out = set()
    for s in pairs:
        for b in product.automaton.output_symbols:
            out.add(product.step(s, (letter, b)))
    return out


def _pair_key(product: ProductAutomaton):
    state_idx = {q: i for i, q in enumerate(product.automaton.states)}
    mem_idx = {m: i for i, m in enumerate(product.monitor.memory)}

    def key(pair):
        q, m = pair
        return (state_idx[q], mem_idx[m])

    return key


def summary_of_word(product: ProductAutomaton, word) -> tuple:
    """Canonical transition summary of a nonempty input word.

    Returned as a tuple aligned with the automaton's state order; component i
    is the sorted tuple of (state, memory) pairs reachable from state i.
    """
    word = tuple(word)
    if not word:
        raise InputError("transition summaries are defined for nonempty words only")
    key = _pair_key(product)
    rows = []
    for q in product.automaton.states:
        pairs = {(q, FRESH)}
        for a in word:
            pairs = powerset_step(product, pairs, a)
        rows.append(tuple(sorted(pairs, key=key)))
    return tuple(rows)


def remark_check(product: ProductAutomaton, word) -> bool:
    """Independent check of the summary construction.

    Compares the powerset iteration against brute force: for every start
    state, enumerate all output words of matching length, run the automaton
    on the paired word, and aggregate the run with the monitor.
    """
    word = tuple(word)
    if not word:
        raise InputError("transition summaries are defined for nonempty words only")
    automaton = product.automaton
    monitor = product.monitor
    iterated = summary_of_word(product, word)
    for i, q in enumerate(automaton.states):
        brute = set()
        for outs in itertools.product(automaton.output_symbols, repeat=len(word)):
            cur = q
            piece = []
            for a, b in zip(word, outs):
                nxt = automaton.step(cur, (a, b))
                piece.append((cur, (a, b), nxt))
                cur = nxt
            brute.add((cur, monitor.aggregate_piece(piece)))
        if brute != set(iterated[i]):
            return False
    return True


@dataclass(frozen=True)
class SummaryClass:
    """One equivalence class of nonempty input words."""

    class_id: int
    key: tuple  # canonical summary, aligned with state order
    representative: tuple  # shortest witness word, breadth-first discovery order
    successors: dict = field(compare=False)  # input letter -> class id of word+letter
    infinite: bool

    def image_of(self, state_index: int):
        return self.key[state_index]


@dataclass
class ClassTable:
    """All transition summaries of an automaton-monitor product.

    `index` is the number of classes; it never exceeds `index_bound`.
    `d_min` is a sufficient block length: every word of length >= d_min lies
    in an infinite class, because a longer word's discovery path must revisit
    a summary and can be pumped.  `d_theory` is the coarse a priori bound on
    sufficient lookahead derived from the same counting.
    """

    product: ProductAutomaton
    classes: list
    key_to_id: dict
    roots: dict  # input letter -> class id of the one-letter word
    index: int
    index_bound: int
    d_min: int
    d_theory: int
    infinite_ids: tuple

    def class_of_word(self, word) -> int:
        word = tuple(word)
        if not word:
            raise InputError("transition summaries are defined for nonempty words only")
        for a in word:
            if a not in self.roots:
                raise InputError("unknown input symbol %r" % (a,))
        cid = self.roots[word[0]]
        for a in word[1:]:
            cid = self.classes[cid].successors[a]
        return cid

    def summary(self, cid: int) -> SummaryClass:
        return self.classes[cid]


def build_class_table(product: ProductAutomaton) -> ClassTable:
    automaton = product.automaton
    n = len(automaton.states)
    mem = len(product.monitor.memory)

    key_to_id: dict = {}
    id_to_key: list = []
    reps: list = []
    roots: dict = {}
    pair_key = _pair_key(product)

    def intern(key, rep):
        cid = key_to_id.get(key)
        if cid is None:
            cid = len(id_to_key)
            key_to_id[key] = cid
            id_to_key.append(key)
            reps.append(rep)
        return cid

    for a in automaton.input_symbols:
        roots[a] = intern(summary_of_word(product, (a,)), (a,))

    # breadth-first closure; successor summaries extend componentwise
    succ_table: dict = {}
    head = 0
    while head < len(id_to_key):
        cid = head
        head += 1
        key = id_to_key[cid]
        succs = {}
        for a in automaton.input_symbols:
            new_key = tuple(
                tuple(sorted(powerset_step(product, set(row), a), key=pair_key))
                for row in key
            )
            succs[a] = intern(new_key, reps[cid] + (a,))
        succ_table[cid] = succs

    index = len(id_to_key)

    # cycle detection on the successor graph: a class is infinite exactly
    # when it is reachable from a vertex that lies on a cycle
    cyclic = _cyclic_vertices(index, succ_table, automaton.input_symbols)
    infinite = set()
    stack = sorted(cyclic)
    infinite.update(stack)
    while stack:
        v = stack.pop()
        for a in automaton.input_symbols:
            w = succ_table[v][a]
            if w not in infinite:
                infinite.add(w)
                stack.append(w)

    classes = [
        SummaryClass(
            class_id=cid,
            key=id_to_key[cid],
            representative=reps[cid],
            successors=succ_table[cid],
            infinite=cid in infinite,
        )
        for cid in range(index)
    ]

    return ClassTable(
        product=product,
        classes=classes,
        key_to_id=key_to_id,
        roots=roots,
        index=index,
        index_bound=2 ** (n * n * mem),
        d_min=index + 1,
        d_theory=2 ** (n * n * (mem + 1)),
        infinite_ids=tuple(sorted(infinite)),
    )


def _cyclic_vertices(count, succ_table, letters):
    """Vertices on some cycle of the successor graph (Tarjan components of
    size above one, plus self-loops)."""
    index_of = {}
    low = {}
    on_stack = set()
    stack = []
    counter = [0]
    cyclic = set()

    for root in range(count):
        if root in index_of:
            continue
        work = [(root, iter([succ_table[root][a] for a in letters]))]
        index_of[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index_of:
                    index_of[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter([succ_table[w][a] for a in letters])))
                    advanced = True
                    break
                elif w in on_stack:
                    if index_of[w] < low[v]:
                        low[v] = index_of[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                if len(comp) > 1:
                    cyclic.update(comp)
                else:
                    u = comp[0]
                    if any(succ_table[u][a] == u for a in letters):
                        cyclic.add(u)
    return cyclic


@dataclass
class ReducedGame:
    """The delay-free parity game built from a class table."""

    arena: Any
    table: ClassTable
    scheme: AggregationScheme
    pre_vertex: int
    ivert_ids: dict  # (state, p-state, pending class id) -> vertex
    overt_ids: dict  # (state, p-state, pending, announced) -> vertex


def build_reduced_arena(table: ClassTable, scheme: AggregationScheme) -> ReducedGame:
    """Arena of the reduced game, restricted to the reachable part.

    The input player owns the pre-vertex (announcing the first pending class)
    and every (q, p, S) vertex, where S is the pending class; a move
    announces the next class S'.  The output player owns (q, p, S, S') and
    resolves the pending class to one (q', m') pair from the summary; the
    edge carries the priority automaton's transition priority on m'.
    """
    if scheme.monitor is not table.product.monitor:
        raise InputError("scheme and table use different monitors")
    automaton = table.product.automaton
    state_idx = {q: i for i, q in enumerate(automaton.states)}
    pa = scheme.acceptance
    live = [cid for cid in table.infinite_ids]
    if not live:
        raise DegenerateGameError("no infinite summary classes; the block game has no plays")
    neutral = min(pri for (_, pri) in pa.table.values())
    key = _pair_key(table.product)

    builder = ArenaBuilder()
    pre = builder.add_vertex(PLAYER_I, ("pre",))
    ivert_ids: dict = {}
    overt_ids: dict = {}
    iqueue = []

    def ivert(q, p, cid):
        node = (q, p, cid)
        if node not in ivert_ids:
            ivert_ids[node] = builder.add_vertex(PLAYER_I, ("i", q, p, cid))
            iqueue.append(node)
        return ivert_ids[node]

    for cid in live:
        builder.add_edge(pre, ivert(automaton.initial, pa.initial, cid), neutral, cid)

    head = 0
    while head < len(iqueue):
        q, p, cid = iqueue[head]
        head += 1
        src = ivert_ids[(q, p, cid)]
        image = table.classes[cid].image_of(state_idx[q])
        for nxt in live:
            onode = (q, p, cid, nxt)
            ov = overt_ids.get(onode)
            if ov is None:
                ov = builder.add_vertex(PLAYER_O, ("o",) + onode)
                overt_ids[onode] = ov
                for q2, m2 in sorted(image, key=key):
                    p2, pri = pa.step(p, m2)
                    builder.add_edge(ov, ivert(q2, p2, nxt), pri, (q2, m2))
            builder.add_edge(src, ov, neutral, nxt)

    arena = builder.build(initial=pre)
    return ReducedGame(
        arena=arena,
        table=table,
        scheme=scheme,
        pre_vertex=pre,
        ivert_ids=ivert_ids,
        overt_ids=overt_ids,
    )
