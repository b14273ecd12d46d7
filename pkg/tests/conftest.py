import os
import random

import pytest

from delaygames import (
    LassoWord,
    MullerAcceptance,
    OmegaAutomaton,
    ParityAcceptance,
    load_automaton,
)

DATA = os.path.join(os.path.dirname(__file__), "data")

LETTERS = ("0", "1")


def data_path(name):
    return os.path.join(DATA, name)


@pytest.fixture(scope="session")
def copy_aut():
    return load_automaton(data_path("copy.aut"))


@pytest.fixture(scope="session")
def predict_aut():
    return load_automaton(data_path("predict.aut"))


@pytest.fixture(scope="session")
def toggle_aut():
    return load_automaton(data_path("toggle.aut"))


def make_parity(rng, max_states: int = 3, max_colors: int = 3) -> OmegaAutomaton:
    """Random complete parity automaton over the binary in/out alphabets."""
    n = rng.randint(1, max_states)
    states = tuple("q%d" % i for i in range(n))
    delta = {}
    for q in states:
        for a in LETTERS:
            for b in LETTERS:
                delta[(q, (a, b))] = states[rng.randrange(n)]
    colors = {q: rng.randrange(max_colors) for q in states}
    return OmegaAutomaton(
        states=states,
        input_symbols=LETTERS,
        output_symbols=LETTERS,
        initial=states[0],
        delta=delta,
        acceptance=ParityAcceptance(colors),
    )


def make_muller(rng, max_states: int = 3) -> OmegaAutomaton:
    n = rng.randint(1, max_states)
    states = tuple("q%d" % i for i in range(n))
    delta = {}
    for q in states:
        for a in LETTERS:
            for b in LETTERS:
                delta[(q, (a, b))] = states[rng.randrange(n)]
    sets = set()
    for _ in range(rng.randint(1, 4)):
        chosen = frozenset(q for q in states if rng.random() < 0.6)
        if chosen:
            sets.add(chosen)
    if not sets:
        sets.add(frozenset([states[0]]))
    return OmegaAutomaton(
        states=states,
        input_symbols=LETTERS,
        output_symbols=LETTERS,
        initial=states[0],
        delta=delta,
        acceptance=MullerAcceptance(frozenset(sets)),
    )


def random_pair_lasso(rng, automaton, max_prefix: int = 3, max_period: int = 4):
    """Ultimately periodic word over the product alphabet (both players)."""
    pick = lambda: (
        rng.choice(automaton.input_symbols),
        rng.choice(automaton.output_symbols),
    )
    prefix = tuple(pick() for _ in range(rng.randrange(0, max_prefix + 1)))
    period = tuple(pick() for _ in range(rng.randrange(1, max_period + 1)))
    return LassoWord(prefix, period)


@pytest.fixture
def rng():
    return random.Random(20250819)
