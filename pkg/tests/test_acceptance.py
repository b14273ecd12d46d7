"""Acceptance gate, one test per criterion.

1 winner agreement between the reduction pipeline and the explicit oracle
2 summary index within the counting bound, exact on the copy game
3 copy game end to end: solve, verify, minimal transducer size
4 prediction game: lookahead ladder, reduction winner, verified bundle
5 summary construction against brute-force completion enumeration
6 strategy transfer soundness for every synthesized winning bundle
7 record-based conversion preserves Muller acceptance on lassos
8 solver certificates (regions + strategy-restricted cycles) on all arenas
plus the size separation between block bundles and expanded transducers.
"""

import random

import pytest

from delaygames import (
    PLAYER_I,
    PLAYER_O,
    decide,
    prepare,
    synthesize_block,
)
from delaygames.automata import accepts_lasso, lar_convert, rename_states
from delaygames.cli import main
from delaygames.gamesolve import (
    build_delay_oblivious_arena,
    build_gs_arena,
    delay_oblivious_vertex_count,
    solve,
)
from delaygames.playengine import (
    brute_force_winner,
    exhaustive_transducer_search,
    random_lasso,
    verify_strategy,
)
from delaygames.reduction import remark_check
from delaygames.strategies import (
    BlockRunner,
    block_to_delay,
    delay_to_block,
    materialize_delay_transducer,
    steady_state_count,
)

from conftest import data_path, make_muller, make_parity, random_pair_lasso

CORPUS_SEED = 20260819
CORPUS_SIZE = 100
ORACLE_VERTEX_CAP = 10**6
# materialization is skipped when the snapshot bound exceeds this; the
# executor path is verified either way
RAW_STATE_GUARD = 300000


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(CORPUS_SEED)
    instances = []
    while len(instances) < CORPUS_SIZE:
        aut = make_parity(rng, max_states=3, max_colors=3)
        prep = prepare(aut)
        if delay_oblivious_vertex_count(aut, 2 * prep.table.d_min) <= ORACLE_VERTEX_CAP:
            instances.append((aut, prep, decide(prep)))
    return instances


@pytest.fixture(scope="module")
def winners(corpus):
    return [
        (aut, prep, decision, synthesize_block(decision))
        for (aut, prep, decision) in corpus
        if decision.winner == PLAYER_O
    ]


def test_criterion_1_oracle_agreement(corpus):
    for i, (aut, prep, decision) in enumerate(corpus):
        oracle = brute_force_winner(aut, 2 * prep.table.d_min, ORACLE_VERTEX_CAP)
        assert oracle == decision.winner, i
    assert len(corpus) == CORPUS_SIZE


def test_criterion_2_index_bound(corpus, copy_aut):
    for i, (aut, prep, _) in enumerate(corpus):
        states = len(aut.states)
        memory = len(prep.scheme.monitor.memory)
        assert prep.table.index <= 2 ** (states * states * memory), i
    prep = prepare(copy_aut)
    assert prep.table.index == 2
    assert prep.table.d_theory == 4096


def test_criterion_3_copy_game(capsys, copy_aut):
    code = main(["solve", data_path("copy.aut")])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("winner: O\n")

    decision = decide(prepare(copy_aut))
    bundle = synthesize_block(decision)
    rng = random.Random(31)
    for _ in range(100):
        outcome = verify_strategy(copy_aut, bundle, random_lasso(rng, ("0", "1")))
        assert outcome.ok

    found, tried = exhaustive_transducer_search(copy_aut, 3, 2)
    assert found is None
    assert tried == 5832  # every 3-state machine at lookahead 2 fails
    found, _ = exhaustive_transducer_search(copy_aut, 4, 2)
    assert found is not None
    assert found.state_count == 4


def test_criterion_4_prediction_game(predict_aut):
    ladder = [brute_force_winner(predict_aut, d) for d in (1, 2, 3, 4)]
    assert ladder == [PLAYER_I, PLAYER_I, PLAYER_O, PLAYER_O]

    decision = decide(prepare(predict_aut))
    assert decision.winner == PLAYER_O
    bundle = synthesize_block(decision)
    rng = random.Random(37)
    for _ in range(100):
        outcome = verify_strategy(predict_aut, bundle, random_lasso(rng, ("0", "1")))
        assert outcome.ok


def test_criterion_5_summary_characterization(rng):
    import itertools

    for _ in range(50):
        aut = make_parity(rng, max_states=3, max_colors=3)
        product = prepare(aut).product
        for length in range(1, 5):
            for word in itertools.product(aut.input_symbols, repeat=length):
                assert remark_check(product, word)


def test_criterion_6_strategy_transfer(winners):
    assert winners  # the corpus is expected to contain output-player wins
    materialized = 0
    for i, (aut, prep, decision, bundle) in enumerate(winners):
        d = bundle.block_length
        sigma = len(aut.input_symbols)

        vrng = random.Random(1000 + i)
        for _ in range(50):
            outcome = verify_strategy(aut, bundle, random_lasso(vrng, aut.input_symbols))
            assert outcome.ok, i

        raw_bound = bundle.state_count * (sigma ** (2 * d + 1) - 1) // (sigma - 1)
        if raw_bound > RAW_STATE_GUARD:
            continue
        mat = materialize_delay_transducer(bundle)
        assert mat.state_count <= raw_bound, i
        assert steady_state_count(mat) <= bundle.state_count * sigma ** (2 * d), i

        # expanding and re-blocking answers exactly like the lazy executor
        rebuilt = delay_to_block(mat, 2 * d)
        runner = BlockRunner(rebuilt)
        executor = block_to_delay(bundle)
        prng = random.Random(2000 + i)
        got = []
        want = []
        for _ in range(20):
            block = tuple(prng.choice(aut.input_symbols) for _ in range(2 * d))
            res = runner.feed(block)
            if res is not None:
                got.extend(res)
            for a in block:
                out = executor.step(a)
                if out is not None:
                    want.append(out)
        assert got == want[: len(got)], i
        assert len(got) >= 18 * 2 * d, i
        materialized += 1
    assert materialized >= len(winners) // 2


def test_criterion_7_lar_lasso_agreement(rng):
    for _ in range(20):
        muller = make_muller(rng)
        converted, _ = rename_states(lar_convert(muller), prefix="l")
        for _ in range(1000):
            lasso = random_pair_lasso(rng, muller)
            assert accepts_lasso(muller, lasso) == accepts_lasso(converted, lasso)


def _sccs(count, adj):
    index = [0] * count
    low = [0] * count
    on_stack = [False] * count
    comp = [-1] * count
    stack = []
    next_index = 1
    next_comp = 0
    for root in range(count):
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, at = work[-1]
            if at == 0:
                index[v] = low[v] = next_index
                next_index += 1
                stack.append(v)
                on_stack[v] = True
            pushed = False
            for j in range(at, len(adj[v])):
                w = adj[v][j]
                if not index[w]:
                    work[-1] = (v, j + 1)
                    work.append((w, 0))
                    pushed = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = next_comp
                    if w == v:
                        break
                next_comp += 1
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return comp


def _certify(arena, result):
    n = arena.vertex_count()
    assert all(w in (PLAYER_O, PLAYER_I) for w in result.winner)
    for sigma in (PLAYER_O, PLAYER_I):
        edges = []
        for v in range(n):
            if result.winner[v] != sigma:
                continue
            if arena.owners[v] == sigma:
                edge = result.strategy_edge(v)
                assert edge is not None, (sigma, v)
                target, pri, _ = edge
                assert result.winner[target] == sigma, (sigma, v)
                edges.append((v, target, pri))
            else:
                for (target, pri, _) in arena.succ[v]:
                    assert result.winner[target] == sigma, (sigma, v, target)
                    edges.append((v, target, pri))
        # a cycle is lost for sigma when its maximal priority has the
        # opponent's parity; scan those priorities from below
        losing = (lambda p: p % 2 == 1) if sigma == PLAYER_O else (lambda p: p % 2 == 0)
        for p in sorted({pri for (_, _, pri) in edges if losing(pri)}):
            sub = [(v, t, pri) for (v, t, pri) in edges if pri <= p]
            adj = {}
            for (v, t, _) in sub:
                adj.setdefault(v, []).append(t)
                adj.setdefault(t, [])
            nodes = sorted(adj)
            renum = {v: i for i, v in enumerate(nodes)}
            comp = _sccs(len(nodes), [[renum[t] for t in adj[v]] for v in nodes])
            for (v, t, pri) in sub:
                if pri == p:
                    assert comp[renum[v]] != comp[renum[t]], (sigma, p, v, t)


def test_criterion_8_solver_certificates(corpus, copy_aut, predict_aut):
    arenas = []
    for aut, prep, decision in corpus:
        arenas.append(decision.reduced.arena)
        if delay_oblivious_vertex_count(aut, 2 * prep.table.d_min) <= 10**4:
            arenas.append(build_delay_oblivious_arena(aut, 2 * prep.table.d_min).arena)
    arenas.append(build_gs_arena(copy_aut).arena)
    arenas.append(build_gs_arena(predict_aut).arena)
    assert all(a.vertex_count() <= 10**4 for a in arenas)
    for arena in arenas:
        _certify(arena, solve(arena))


def test_figure_1_size_separation(copy_aut):
    decision = decide(prepare(copy_aut))
    bundle = synthesize_block(decision, block_length=4)
    expanded = materialize_delay_transducer(bundle)
    assert bundle.state_count == 3
    assert expanded.state_count == 511
    assert bundle.state_count < expanded.state_count
