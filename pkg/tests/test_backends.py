import random

from delaygames._zielonka import solve_game as solve_compiled
from delaygames._zielonka_py import solve_game as solve_python
from delaygames.backend import BACKEND


def random_csr(rng, max_vertices=40, max_priority=6):
    n = rng.randint(1, max_vertices)
    owner = [rng.randrange(2) for _ in range(n)]
    priority = [rng.randrange(max_priority) for _ in range(n)]
    succ_start = [0]
    succ_to = []
    for v in range(n):
        for _ in range(rng.randint(1, 4)):
            succ_to.append(rng.randrange(n))
        succ_start.append(len(succ_to))
    return owner, priority, succ_start, succ_to


def test_extension_active_in_this_build():
    assert BACKEND == "compiled"


def test_kernels_agree_exactly():
    rng = random.Random(424242)
    for trial in range(200):
        owner, priority, succ_start, succ_to = random_csr(rng)
        wc, sc = solve_compiled(owner, priority, succ_start, succ_to)
        wp, sp = solve_python(owner, priority, succ_start, succ_to)
        assert list(wc) == list(wp), trial
        assert list(sc) == list(sp), trial


def test_kernels_agree_on_larger_games():
    rng = random.Random(99)
    for trial in range(10):
        owner, priority, succ_start, succ_to = random_csr(
            rng, max_vertices=400, max_priority=8
        )
        wc, sc = solve_compiled(owner, priority, succ_start, succ_to)
        wp, sp = solve_python(owner, priority, succ_start, succ_to)
        assert list(wc) == list(wp), trial
        assert list(sc) == list(sp), trial
