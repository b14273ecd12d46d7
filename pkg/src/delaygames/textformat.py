"""Line-based text format for automata.

    # comment
    automaton parity          (or: automaton muller)
    input 0 1
    output 0 1
    states s r
    initial s
    color s 0                 (parity: one line per state)
    color r 1
    accset a b                (muller: one line per accepting set, zero or more)
    trans s 0/0 s             (one line per (state, input/output) pair)

Tokens are whitespace-separated; `#` starts a comment anywhere.  The
transition relation must be complete and deterministic; this is checked at
load time.  `parse(serialize(a)) == a` holds for any automaton whose states
and symbols are plain tokens.
"""

from __future__ import annotations

from .automata import MullerAcceptance, OmegaAutomaton, ParityAcceptance
from .errors import FormatError


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line.split()


def _check_token(tok: str, what: str, lineno: int) -> str:
    if "/" in tok and what == "symbol":
        raise FormatError("%s %r must not contain '/'" % (what, tok), lineno)
    return tok


def parse_automaton(text: str) -> OmegaAutomaton:
    kind = None
    inputs = None
    outputs = None
    states = None
    initial = None
    colors = {}
    color_lines = {}
    accsets = []
    trans = {}
    for lineno, toks in _tokenize(text):
        key = toks[0]
        args = toks[1:]
        if key == "automaton":
            if kind is not None:
                raise FormatError("duplicate 'automaton' line", lineno)
            if len(args) != 1 or args[0] not in ("parity", "muller"):
                raise FormatError("expected 'automaton parity' or 'automaton muller'", lineno)
            kind = args[0]
        elif key == "input":
            if inputs is not None:
                raise FormatError("duplicate 'input' line", lineno)
            if not args:
                raise FormatError("'input' needs at least one symbol", lineno)
            inputs = tuple(_check_token(t, "symbol", lineno) for t in args)
        elif key == "output":
            if outputs is not None:
                raise FormatError("duplicate 'output' line", lineno)
            if not args:
                raise FormatError("'output' needs at least one symbol", lineno)
            outputs = tuple(_check_token(t, "symbol", lineno) for t in args)
        elif key == "states":
            if states is not None:
                raise FormatError("duplicate 'states' line", lineno)
            if not args:
                raise FormatError("'states' needs at least one state", lineno)
            states = tuple(args)
        elif key == "initial":
            if initial is not None:
                raise FormatError("duplicate 'initial' line", lineno)
            if len(args) != 1:
                raise FormatError("'initial' takes exactly one state", lineno)
            initial = args[0]
        elif key == "color":
            if len(args) != 2:
                raise FormatError("'color' takes a state and a natural number", lineno)
            q, c = args
            if q in colors:
                raise FormatError("duplicate color for state %r" % q, lineno)
            if not c.isdigit():
                raise FormatError("color %r is not a natural number" % c, lineno)
            colors[q] = int(c)
            color_lines[q] = lineno
        elif key == "accset":
            accsets.append((lineno, frozenset(args)))
        elif key == "trans":
            if len(args) != 3 or "/" not in args[1]:
                raise FormatError("expected 'trans <state> <in>/<out> <state>'", lineno)
            src, pair, dst = args
            a, _, b = pair.partition("/")
            if not a or not b:
                raise FormatError("expected '<in>/<out>', got %r" % pair, lineno)
            if (src, (a, b)) in trans:
                raise FormatError(
                    "duplicate transition for (%s, %s/%s)" % (src, a, b), lineno
                )
            trans[(src, (a, b))] = (dst, lineno)
        else:
            raise FormatError("unknown directive %r" % key, lineno)

    if kind is None:
        raise FormatError("missing 'automaton' line")
    for name, val in (("input", inputs), ("output", outputs), ("states", states),
                      ("initial", initial)):
        if val is None:
            raise FormatError("missing '%s' line" % name)
    stateset = set(states)
    if len(stateset) != len(states):
        raise FormatError("duplicate state names")
    if initial not in stateset:
        raise FormatError("initial state %r not declared" % initial)

    if kind == "parity":
        if accsets:
            raise FormatError("'accset' is only valid for muller automata", accsets[0][0])
        missing = [q for q in states if q not in colors]
        if missing:
            raise FormatError("missing color for state %r" % missing[0])
        extra = [q for q in colors if q not in stateset]
        if extra:
            raise FormatError("color for unknown state %r" % extra[0], color_lines[extra[0]])
        acceptance = ParityAcceptance(dict(colors))
    else:
        if colors:
            some = next(iter(color_lines.values()))
            raise FormatError("'color' is only valid for parity automata", some)
        for lineno, s in accsets:
            bad = s - stateset
            if bad:
                raise FormatError("accset mentions unknown state %r" % sorted(bad)[0], lineno)
        acceptance = MullerAcceptance(frozenset(s for _, s in accsets))

    delta = {}
    for (src, (a, b)), (dst, lineno) in trans.items():
        if src not in stateset:
            raise FormatError("transition from unknown state %r" % src, lineno)
        if dst not in stateset:
            raise FormatError("transition to unknown state %r" % dst, lineno)
        if a not in inputs:
            raise FormatError("unknown input symbol %r" % a, lineno)
        if b not in outputs:
            raise FormatError("unknown output symbol %r" % b, lineno)
        delta[(src, (a, b))] = dst
    for q in states:
        for a in inputs:
            for b in outputs:
                if (q, (a, b)) not in delta:
                    raise FormatError(
                        "incomplete transition function: missing (%s, %s/%s)" % (q, a, b)
                    )
    return OmegaAutomaton(
        states=states,
        input_symbols=inputs,
        output_symbols=outputs,
        initial=initial,
        delta=delta,
        acceptance=acceptance,
    )


def _token(value, what: str) -> str:
    s = str(value)
    if not isinstance(value, str):
        raise FormatError("%s %r is not a plain token; rename first" % (what, value))
    if not s or any(ch.isspace() for ch in s) or "#" in s:
        raise FormatError("%s %r is not serializable as a token" % (what, s))
    return s


def serialize_automaton(automaton: OmegaAutomaton) -> str:
    """Canonical text form; deterministic for a given automaton."""
    lines = ["automaton %s" % automaton.kind]
    lines.append("input " + " ".join(_token(a, "input symbol") for a in automaton.input_symbols))
    lines.append("output " + " ".join(_token(b, "output symbol") for b in automaton.output_symbols))
    lines.append("states " + " ".join(_token(q, "state") for q in automaton.states))
    lines.append("initial " + _token(automaton.initial, "state"))
    if isinstance(automaton.acceptance, ParityAcceptance):
        for q in automaton.states:
            lines.append("color %s %d" % (_token(q, "state"), automaton.acceptance.colors[q]))
    else:
        order = {q: i for i, q in enumerate(automaton.states)}
        sets = sorted(
            (sorted(s, key=order.__getitem__) for s in automaton.acceptance.family),
            key=lambda members: (len(members), [order[q] for q in members]),
        )
        for members in sets:
            lines.append("accset" + "".join(" " + q for q in members))
    for q, (a, b), q2 in automaton.transitions():
        lines.append("trans %s %s/%s %s" % (q, a, b, q2))
    return "\n".join(lines) + "\n"


def load_automaton(path) -> OmegaAutomaton:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_automaton(fh.read())


def save_automaton(automaton: OmegaAutomaton, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_automaton(automaton))
