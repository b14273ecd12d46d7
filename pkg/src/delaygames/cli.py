"""Command line interface.

Reports are key: value lines, winner first where a winner is decided.
Exit codes: 0 success (output player wins, or verification passed),
1 the input player wins (or verification failed, or nothing found),
2 usage or input problems, 3 malformed files, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys

from .bundleio import load_bundle, save_bundle
from .errors import BudgetError, DegenerateGameError, FormatError, InputError
from .gamesolve import PLAYER_O
from .pipeline import decide, prepare, synthesize_block
from .playengine import (
    Budget,
    LassoAdversary,
    RandomAdversary,
    brute_force_winner,
    exhaustive_transducer_search,
    random_lasso,
    simulate,
    verify_strategy,
)
from .strategies import TableBlockTransducer, materialize_delay_transducer
from .textformat import load_automaton, save_automaton

_PLAYER_NAME = {0: "O", 1: "I"}


def _parse_word(text: str, symbols, what: str):
    if text == "":
        return ()
    if "," in text:
        parts = text.split(",")
    elif all(len(str(s)) == 1 for s in symbols):
        parts = list(text)
    elif text in symbols:
        parts = [text]
    else:
        raise InputError(
            "cannot split %s %r; separate letters with commas" % (what, text)
        )
    for p in parts:
        if p not in symbols:
            raise InputError("unknown input symbol %r in %s" % (p, what))
    return tuple(parts)


def _parse_adversary(spec: str, automaton, seed: int):
    if spec.startswith("lasso:"):
        body = spec[len("lasso:") :]
        parts = body.split(":")
        if len(parts) != 2:
            raise InputError("lasso adversary is lasso:<prefix>:<period>")
        prefix = _parse_word(parts[0], automaton.input_symbols, "lasso prefix")
        period = _parse_word(parts[1], automaton.input_symbols, "lasso period")
        return LassoAdversary(prefix, period)
    if spec == "random":
        return RandomAdversary(automaton.input_symbols, seed)
    if spec.startswith("random:"):
        tail = spec[len("random:") :]
        try:
            return RandomAdversary(automaton.input_symbols, int(tail))
        except ValueError:
            raise InputError("random adversary seed %r is not an integer" % tail) from None
    raise InputError("adversary must be lasso:<prefix>:<period> or random[:<seed>]")


def _letters(seq) -> str:
    seq = list(seq)
    return ",".join(str(x) for x in seq) if seq else "-"


def _pairs(seq) -> str:
    seq = list(seq)
    return ",".join("%s/%s" % (a, b) for (a, b) in seq) if seq else "-"


def _cmd_solve(args) -> int:
    automaton = load_automaton(args.automaton)
    prep = prepare(automaton)
    decision = decide(prep)
    print("winner: %s" % _PLAYER_NAME[decision.winner])
    print("backend: %s" % decision.result.backend)
    if prep.lar_state_count is not None:
        print("lar_states: %d" % prep.lar_state_count)
    t = prep.table
    print("index: %d" % t.index)
    print("index_bound: %d" % t.index_bound)
    print("d_min: %d" % t.d_min)
    print("d_theory: %d" % t.d_theory)
    print("sufficient_lookahead: %d" % prep.sufficient_lookahead)
    print("theory_lookahead: %d" % prep.theory_lookahead)
    print("reduced_vertices: %d" % decision.reduced.arena.vertex_count())
    print("reduced_edges: %d" % decision.reduced.arena.edge_count())
    return 0 if decision.winner == PLAYER_O else 1


def _cmd_classes(args) -> int:
    automaton = load_automaton(args.automaton)
    prep = prepare(automaton)
    t = prep.table
    print("index: %d" % t.index)
    print("index_bound: %d" % t.index_bound)
    print("d_min: %d" % t.d_min)
    print("d_theory: %d" % t.d_theory)
    print("infinite_classes: %d" % len(t.infinite_ids))
    for c in t.classes:
        print(
            "class %d: representative %s infinite %s"
            % (c.class_id, _letters(c.representative), "yes" if c.infinite else "no")
        )
    return 0


def _cmd_synthesize(args) -> int:
    automaton = load_automaton(args.automaton)
    prep = prepare(automaton)
    if args.block_length is not None and args.block_length < prep.table.d_min:
        raise InputError(
            "block length %d is below the sufficient length %d"
            % (args.block_length, prep.table.d_min)
        )
    decision = decide(prep)
    print("winner: %s" % _PLAYER_NAME[decision.winner])
    if decision.winner != PLAYER_O:
        return 1
    bundle = synthesize_block(decision, args.block_length)
    save_bundle(bundle, prep.automaton, args.out)
    print("block_length: %d" % bundle.block_length)
    print("bundle_states: %d" % bundle.state_count)
    print("out: %s" % args.out)
    return 0


def _cmd_oracle(args) -> int:
    automaton = load_automaton(args.automaton)
    prep = prepare(automaton)
    winner = brute_force_winner(prep.automaton, args.lookahead, args.budget)
    print("winner: %s" % _PLAYER_NAME[winner])
    print("lookahead: %d" % args.lookahead)
    return 0 if winner == PLAYER_O else 1


def _cmd_convert(args) -> int:
    automaton = load_automaton(args.automaton)
    if automaton.kind != "muller":
        raise InputError("convert expects a Muller automaton; %r is already parity" % args.automaton)
    prep = prepare(automaton)
    save_automaton(prep.automaton, args.out)
    print("kind: parity")
    print("lar_states: %d" % prep.lar_state_count)
    print("out: %s" % args.out)
    return 0


def _cmd_materialize(args) -> int:
    transducer, automaton = load_bundle(args.strategy)
    if not isinstance(transducer, TableBlockTransducer):
        raise InputError("materialize expects a block-bundle")
    mat = materialize_delay_transducer(transducer, args.budget)
    save_bundle(mat, automaton, args.out)
    print("kind: delay-transducer")
    print("states: %d" % mat.state_count)
    print("lookahead: %d" % mat.lookahead)
    print("out: %s" % args.out)
    return 0


def _cmd_simulate(args) -> int:
    transducer, automaton = load_bundle(args.strategy)
    adversary = _parse_adversary(args.adversary, automaton, args.seed)
    record = simulate(automaton, transducer, adversary, args.rounds)
    print("adversary: %s" % args.adversary)
    print("rounds: %d" % args.rounds)
    print("lookahead: %d" % record.lookahead)
    print("inputs: %s" % _letters(record.inputs))
    print("outputs: %s" % _letters(record.outputs))
    return 0


def _cmd_verify(args) -> int:
    transducer, automaton = load_bundle(args.strategy)
    if args.adversary is not None:
        adversaries = [_parse_adversary(args.adversary, automaton, args.seed)]
    else:
        rng = random.Random(args.seed)
        adversaries = [random_lasso(rng, automaton.input_symbols) for _ in range(args.samples)]
    failures = 0
    steps = 0
    bad = None
    for adv in adversaries:
        outcome = verify_strategy(automaton, transducer, adv)
        steps += outcome.steps
        if not outcome.ok:
            failures += 1
            if bad is None:
                bad = outcome
    print("samples: %d" % len(adversaries))
    print("accepted: %d" % (len(adversaries) - failures))
    print("failures: %d" % failures)
    print("steps: %d" % steps)
    if bad is not None:
        print("counterexample_prefix: %s" % _pairs(bad.lasso.prefix))
        print("counterexample_period: %s" % _pairs(bad.lasso.period))
    return 0 if failures == 0 else 1


def _cmd_search(args) -> int:
    automaton = load_automaton(args.automaton)
    prep = prepare(automaton)
    found, tried = exhaustive_transducer_search(
        prep.automaton, args.states, args.lookahead, args.candidate_budget
    )
    print("found: %s" % ("yes" if found is not None else "no"))
    print("candidates: %d" % tried)
    if found is None:
        return 1
    print("states: %d" % found.state_count)
    print("lookahead: %d" % found.lookahead)
    if args.out:
        save_bundle(found, prep.automaton, args.out)
        print("out: %s" % args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    budget = Budget()
    parser = argparse.ArgumentParser(
        prog="delaygames",
        description="Decide and solve delay games with automaton winning conditions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide the winner via the reduced game")
    p.add_argument("automaton")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("classes", help="print the transition summary classes")
    p.add_argument("automaton")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("synthesize", help="extract a block strategy bundle")
    p.add_argument("automaton")
    p.add_argument("--out", required=True)
    p.add_argument("--block-length", type=int, default=None)
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("oracle", help="brute-force winner on the explicit arena")
    p.add_argument("automaton")
    p.add_argument("--lookahead", type=int, required=True)
    p.add_argument("--budget", type=int, default=budget.vertices)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("convert", help="convert a Muller automaton to a parity automaton")
    p.add_argument("automaton")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("materialize", help="expand a block bundle into a delay transducer")
    p.add_argument("--strategy", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--budget", type=int, default=budget.vertices)
    p.set_defaults(func=_cmd_materialize)

    p = sub.add_parser("simulate", help="play a strategy against an adversary")
    p.add_argument("--strategy", required=True)
    p.add_argument("--adversary", required=True)
    p.add_argument("--rounds", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="exact verdicts against periodic adversaries")
    p.add_argument("--strategy", required=True)
    p.add_argument("--adversary", default=None)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive scan for small winning transducers")
    p.add_argument("automaton")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--lookahead", type=int, required=True)
    p.add_argument("--candidate-budget", type=int, default=budget.candidates)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except BudgetError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except (InputError, DegenerateGameError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
