"""Delay games with omega-automaton winning conditions.

Decide the winner under constant lookahead, compute how much lookahead is
sufficient, and synthesize finite-state winning strategies, via a reduction
that abstracts input blocks to transition summary classes.
"""

from .automata import (
    DelayFunction,
    LassoWord,
    MullerAcceptance,
    OmegaAutomaton,
    ParityAcceptance,
    accepts_lasso,
    lar_convert,
    rename_states,
    run_finite,
)
from .backend import BACKEND
from .bundleio import bundle_to_json, json_to_bundle, load_bundle, save_bundle
from .errors import (
    BudgetError,
    DegenerateGameError,
    DelayGameError,
    FormatError,
    InputError,
)
from .gamesolve import (
    ArenaBuilder,
    GSTransducer,
    GaleStewartGame,
    PLAYER_I,
    PLAYER_O,
    ParityGameArena,
    SolveResult,
    build_delay_oblivious_arena,
    build_gs_arena,
    delay_oblivious_vertex_count,
    extract_gs_transducer,
    solve,
)
from .monitors import (
    AggregationScheme,
    FRESH,
    Monitor,
    PriorityAutomaton,
    ProductAutomaton,
    aggregate,
    muller_monitor,
    parity_scheme,
    product_with_monitor,
)
from .pipeline import Decision, PreparedGame, decide, prepare, synthesize_block
from .playengine import (
    Budget,
    LassoAdversary,
    PlayRecord,
    RandomAdversary,
    VerifyResult,
    brute_force_winner,
    exhaustive_transducer_search,
    random_lasso,
    simulate,
    verify_strategy,
)
from .reduction import (
    ClassTable,
    ReducedGame,
    SummaryClass,
    build_class_table,
    build_reduced_arena,
    powerset_step,
    remark_check,
    summary_of_word,
)
from .strategies import (
    BlockRunner,
    DelayExecutor,
    DelayObliviousTransducer,
    FunctionBlockTransducer,
    TableBlockTransducer,
    block_to_delay,
    delay_to_block,
    gs_to_block,
    materialize_delay_transducer,
    steady_state_count,
    witness_block,
)
from .textformat import (
    load_automaton,
    parse_automaton,
    save_automaton,
    serialize_automaton,
)

__version__ = "0.1.0"
