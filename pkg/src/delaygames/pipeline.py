"""End-to-end orchestration: condition to parity, table, reduced game.

Shared by the command line and the tests so both go through exactly the
same steps: convert the acceptance condition to parity if needed, build the
aggregation scheme and the class table, then decide the reduced game and
optionally pull a block strategy out of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .automata import OmegaAutomaton, lar_convert, rename_states
from .errors import InputError
from .gamesolve import PLAYER_O, SolveResult, extract_gs_transducer, solve
from .monitors import AggregationScheme, ProductAutomaton, parity_scheme, product_with_monitor
from .reduction import ClassTable, ReducedGame, build_class_table, build_reduced_arena
from .strategies import TableBlockTransducer, gs_to_block


@dataclass
class PreparedGame:
    source: OmegaAutomaton
    automaton: OmegaAutomaton  # parity form everything downstream uses
    lar_state_count: Optional[int]
    scheme: AggregationScheme
    product: ProductAutomaton
    table: ClassTable

    @property
    def sufficient_lookahead(self) -> int:
        """Block length twice d_min is enough lookahead for either player."""
        return 2 * self.table.d_min

    @property
    def theory_lookahead(self) -> int:
        """The a priori counting bound, usually far larger."""
        return 2 * self.table.d_theory


def prepare(automaton: OmegaAutomaton) -> PreparedGame:
    if automaton.kind == "muller":
        converted = lar_convert(automaton)
        parity, _ = rename_states(converted, prefix="l")
        lar_state_count = len(parity.states)
    else:
        parity = automaton
        lar_state_count = None
    scheme = parity_scheme(parity)
    product = product_with_monitor(parity, scheme.monitor)
    table = build_class_table(product)
    return PreparedGame(
        source=automaton,
        automaton=parity,
        lar_state_count=lar_state_count,
        scheme=scheme,
        product=product,
        table=table,
    )


@dataclass
class Decision:
    prepared: PreparedGame
    reduced: ReducedGame
    result: SolveResult
    winner: int


def decide(prepared: PreparedGame) -> Decision:
    reduced = build_reduced_arena(prepared.table, prepared.scheme)
    result = solve(reduced.arena)
    return Decision(
        prepared=prepared,
        reduced=reduced,
        result=result,
        winner=result.winner_of(reduced.pre_vertex),
    )


def synthesize_block(
    decision: Decision, block_length: Optional[int] = None
) -> TableBlockTransducer:
    if decision.winner != PLAYER_O:
        raise InputError("the output player loses; there is no winning strategy")
    if block_length is None:
        block_length = decision.prepared.table.d_min
    transducer = extract_gs_transducer(decision.reduced, decision.result)
    return gs_to_block(transducer, decision.prepared.table, block_length)
