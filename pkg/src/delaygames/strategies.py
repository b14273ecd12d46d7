"""Winning strategies: block transducers, bundles, and delay conversions.

A block transducer consumes input blocks of a fixed length d and produces
output blocks with a one-block lag: after blocks x0..xi it has emitted
answers for x0..x(i-1).  Formally the answer to x(i-1) is
output(state_after(x0..x(i-2)), x(i-1), xi), so the machine folds blocks
into its state two behind the newest one.  BlockRunner drives any such
transducer; block_to_delay turns one into a letter-by-letter strategy with
lookahead 2d, and delay_to_block goes the other way without changing the
state count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .errors import BudgetError, InputError
from .gamesolve import GSTransducer
from .monitors import FRESH, ProductAutomaton
from .reduction import ClassTable, powerset_step


def witness_block(product: ProductAutomaton, state, block, target) -> tuple:
    """Concrete output block realizing `target` = (state', memory) from
    `state` along the input block, smallest output letters first."""
    block = tuple(block)
    if not block:
        raise InputError("witness blocks must be nonempty")
    automaton = product.automaton

    layers = [{(state, FRESH)}]
    for a in block:
        layers.append(powerset_step(product, layers[-1], a))
    if target not in layers[-1]:
        raise InputError("target %r is not reachable over this block" % (target,))
    viable = [set() for _ in block] + [{target}]
    for j in range(len(block) - 1, -1, -1):
        a = block[j]
        for s in layers[j]:
            for b in automaton.output_symbols:
                if product.step(s, (a, b)) in viable[j + 1]:
                    viable[j].add(s)
                    break
    cur = (state, FRESH)
    if cur not in viable[0]:
        raise InputError("target %r is not reachable over this block" % (target,))
    out = []
    for j, a in enumerate(block):
        for b in automaton.output_symbols:
            nxt = product.step(cur, (a, b))
            if nxt in viable[j + 1]:
                out.append(b)
                cur = nxt
                break
        else:
            raise InputError("witness search wedged; viability sets are inconsistent")
    if cur != target:
        raise InputError("witness did not land on the requested target")
    return tuple(out)


class BlockRunner:
    """Feeds blocks to a block transducer and returns the lagged answers."""

    def __init__(self, transducer):
        self.transducer = transducer
        self.hist = transducer.initial
        self.prev: Optional[tuple] = None

    def snapshot(self):
        return (self.hist, self.prev)

    def feed(self, block):
        block = tuple(block)
        t = self.transducer
        if len(block) != t.block_length:
            raise InputError(
                "expected a block of length %d, got %d" % (t.block_length, len(block))
            )
        if self.prev is None:
            self.prev = block
            return None
        out = t.output(self.hist, self.prev, block)
        self.hist = t.step(self.hist, self.prev)
        self.prev = block
        return tuple(out)


@dataclass
class TableBlockTransducer:
    """Block transducer backed by the class table and a solved reduced game.

    States are pairs (arena vertex, choice): the vertex reached in the
    reduced game and the output player's last (state, memory) pick, None
    before the first pick.  Outputs are realized lazily: the pick entering
    the state two steps ahead names the target, and a concrete output block
    witnessing it over the pending input block is computed on demand.
    """

    table: ClassTable
    block_length: int
    state_count: int
    initial: int
    delta: list  # per state, {class id: state}
    lam: list  # per state, None or (automaton state, memory)
    meta: Optional[list] = field(default=None, compare=False)

    @property
    def input_symbols(self):
        return self.table.product.automaton.input_symbols

    @property
    def output_symbols(self):
        return self.table.product.automaton.output_symbols

    def _advance(self, z: int, cid: int) -> int:
        nxt = self.delta[z].get(cid)
        if nxt is None:
            raise InputError("block class %d is outside the strategy domain" % cid)
        return nxt

    def step(self, z: int, block) -> int:
        return self._advance(z, self.table.class_of_word(block))

    def output(self, z: int, prev_block, cur_block) -> tuple:
        prev_block = tuple(prev_block)
        z1 = self.step(z, prev_block)
        z2 = self.step(z1, cur_block)
        source = self.lam[z1]
        target = self.lam[z2]
        if source is None or target is None:
            raise InputError("no pick recorded; fed fewer than two blocks")
        return witness_block(self.table.product, source[0], prev_block, target)


def gs_to_block(
    transducer: GSTransducer, table: ClassTable, block_length: int
) -> TableBlockTransducer:
    """Strategy transfer from the reduced game to the block game.

    Wraps the class-level transducer unchanged: block moves become class
    lookups, and output blocks are realized on demand as witnesses between
    the picks two consecutive states carry.  The block length must be at
    least d_min so that every block's class is infinite.
    """
    if block_length < table.d_min:
        raise InputError(
            "block length %d is below the sufficient length %d"
            % (block_length, table.d_min)
        )
    if tuple(transducer.input_symbols) != tuple(table.infinite_ids):
        raise InputError("transducer and class table disagree on the class alphabet")
    return TableBlockTransducer(
        table=table,
        block_length=block_length,
        state_count=transducer.state_count,
        initial=transducer.initial,
        delta=transducer.delta,
        lam=transducer.lam,
        meta=transducer.meta,
    )


@dataclass
class FunctionBlockTransducer:
    """Block transducer given by explicit callables; used for hand-built
    strategies and as the common shape for converted ones."""

    input_symbols: tuple
    output_symbols: tuple
    block_length: int
    state_count: int
    initial: Any
    step_fn: Callable[[Any, tuple], Any]
    output_fn: Callable[[Any, tuple, tuple], tuple]

    def step(self, z, block):
        return self.step_fn(z, tuple(block))

    def output(self, z, prev_block, cur_block):
        return tuple(self.output_fn(z, tuple(prev_block), tuple(cur_block)))


@dataclass
class DelayObliviousTransducer:
    """Letter-by-letter strategy with constant lookahead.

    Moore style: lam names the letter a state emits on arrival.  Reading
    input number k (from 0) moves delta; for k >= lookahead-1 the letter
    emitted by the state reached answers input number k - lookahead + 1.
    States visited only while the first answer is not yet due may carry
    None.
    """

    input_symbols: tuple
    output_symbols: tuple
    lookahead: int
    state_count: int
    initial: int
    delta: list  # per state, {input letter: state}
    lam: list  # per state, output letter or None
    meta: Optional[list] = field(default=None, compare=False)

    def advance(self, z: int, letter):
        """One transition; returns (next state, its emitted letter)."""
        try:
            z2 = self.delta[z][letter]
        except KeyError:
            raise InputError("unknown input letter %r" % (letter,)) from None
        return z2, self.lam[z2]

    def run(self, word) -> list:
        """Outputs aligned to inputs: entry j answers input j, None while
        the answer is not due yet."""
        z = self.initial
        emitted = []
        for k, a in enumerate(word):
            z, b = self.advance(z, a)
            if k >= self.lookahead - 1:
                emitted.append(b)
        return emitted


def delay_to_block(transducer: DelayObliviousTransducer, block_length: int):
    """Block transducer over blocks of the transducer's lookahead length.

    State count is preserved.  The answer block for the previous input block
    is emitted while reading its last letter and the first letters of the
    current block, which is exactly the lag the block semantics prescribes.
    """
    if block_length != transducer.lookahead:
        raise InputError(
            "block length %d must equal the transducer lookahead %d"
            % (block_length, transducer.lookahead)
        )
    d = block_length

    def step_fn(z, block):
        for a in block:
            z, _ = transducer.advance(z, a)
        return z

    def output_fn(z, prev, cur):
        out = []
        for a in prev[:-1]:
            z, _ = transducer.advance(z, a)
        z, b = transducer.advance(z, prev[-1])
        if b is None:
            raise InputError("transducer emitted nothing on a steady step")
        out.append(b)
        for a in cur[: d - 1]:
            z, b = transducer.advance(z, a)
            if b is None:
                raise InputError("transducer emitted nothing on a steady step")
            out.append(b)
        return tuple(out)

    return FunctionBlockTransducer(
        input_symbols=transducer.input_symbols,
        output_symbols=transducer.output_symbols,
        block_length=d,
        state_count=transducer.state_count,
        initial=transducer.initial,
        step_fn=step_fn,
        output_fn=output_fn,
    )


class DelayExecutor:
    """Letter-level driver of a block transducer, lookahead twice the block
    length: buffers inputs into blocks and drains answers one letter per
    step."""

    def __init__(self, transducer):
        self.transducer = transducer
        self.lookahead = 2 * transducer.block_length
        self.state = (transducer.initial, None, (), ())

    def snapshot(self):
        return self.state

    def step(self, letter):
        self.state, out = _executor_step(self.transducer, self.state, letter)
        return out


def block_to_delay(transducer) -> DelayExecutor:
    """Delay-oblivious view of a block transducer (lookahead 2d)."""
    return DelayExecutor(transducer)


def materialize_delay_transducer(
    transducer, budget_states: int = 10**6
) -> DelayObliviousTransducer:
    """Explicit finite-state form of block_to_delay, found by exploration.

    States are the reachable executor snapshots merged up to output
    equivalence; a snapshot emits the head of its output queue, so lam is a
    plain per-state value.  Snapshots that split the same pending answers
    differently between buffer and queue collapse, keeping the state count
    within the buffer-tree bound on the worked examples.  Raises
    BudgetError when the reachable space exceeds the budget; callers can
    fall back to the executor.
    """
    d = transducer.block_length
    letters = tuple(transducer.input_symbols)
    init = (transducer.initial, None, (), ())
    ids = {init: 0}
    order = [init]
    delta = [dict()]
    head = 0
    while head < len(order):
        st = order[head]
        z = head
        head += 1
        for a in letters:
            nxt, _ = _executor_step(transducer, st, a)
            if nxt not in ids:
                if len(order) >= budget_states:
                    raise BudgetError(
                        "materialized transducer exceeds %d states" % budget_states
                    )
                ids[nxt] = len(order)
                order.append(nxt)
                delta.append(dict())
            delta[z][a] = ids[nxt]
    lam = [st[3][0] if st[3] else None for st in order]

    seed = {}
    block = [seed.setdefault(v, len(seed)) for v in lam]
    classes = len(seed)
    while True:
        relabel = {}
        nxt = []
        for z in range(len(order)):
            sig = (block[z],) + tuple(block[delta[z][a]] for a in letters)
            nxt.append(relabel.setdefault(sig, len(relabel)))
        if len(relabel) == classes:
            break
        block, classes = nxt, len(relabel)

    rep = {}
    number = {}
    queue = [0]
    number[block[0]] = 0
    rep[0] = 0
    while queue:
        c = queue.pop(0)
        z = rep[c]
        for a in letters:
            c2 = block[delta[z][a]]
            if c2 not in number:
                number[c2] = len(number)
                rep[number[c2]] = delta[z][a]
                queue.append(number[c2])

    qdelta = []
    qlam = []
    qmeta = []
    for c in range(len(number)):
        z = rep[c]
        qdelta.append({a: number[block[delta[z][a]]] for a in letters})
        qlam.append(lam[z])
        qmeta.append(order[z])
    return DelayObliviousTransducer(
        input_symbols=letters,
        output_symbols=tuple(transducer.output_symbols),
        lookahead=2 * d,
        state_count=len(number),
        initial=0,
        delta=qdelta,
        lam=qlam,
        meta=qmeta,
    )


def _executor_step(transducer, st, letter):
    # Snapshots hold the queue before draining: the head is the letter the
    # snapshot itself emits, so it leaves the queue on the next step.
    hist, prev, buf, outq = st
    if outq:
        outq = outq[1:]
    buf = buf + (letter,)
    if len(buf) == transducer.block_length:
        if prev is None:
            hist2, prev2 = hist, buf
        else:
            out = transducer.output(hist, prev, buf)
            outq = outq + tuple(out)
            hist2, prev2 = transducer.step(hist, prev), buf
        buf = ()
    else:
        hist2, prev2 = hist, prev
    nxt = (hist2, prev2, buf, outq)
    return nxt, (outq[0] if outq else None)


def steady_state_count(transducer: DelayObliviousTransducer) -> int:
    """Number of equivalence classes of steady states.

    Steady states are the emitting ones; they must be closed under
    transitions.  Classes are refined in the usual way: same emitted
    letter, and letter by letter equivalent successors.
    """
    n = transducer.state_count
    letters = transducer.input_symbols
    steady = [z for z in range(n) if transducer.lam[z] is not None]
    steady_set = set(steady)
    for z in steady:
        for a in letters:
            if transducer.delta[z][a] not in steady_set:
                raise InputError("steady states are not transition-closed")
    block = {z: transducer.lam[z] for z in steady}
    while True:
        refined = {}
        for z in steady:
            refined[z] = (block[z], tuple(block[transducer.delta[z][a]] for a in letters))
        names = {}
        for z in steady:
            names.setdefault(refined[z], len(names))
        new_block = {z: names[refined[z]] for z in steady}
        if len(set(new_block.values())) == len(set(block.values())):
            return len(set(new_block.values()))
        block = new_block
