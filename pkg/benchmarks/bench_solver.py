"""Compare the compiled solver kernel against the pure-Python twin.

Generates seeded random arenas in the packed CSR form both kernels take,
checks that the answers match exactly, and reports wall-clock timings.

    python3 benchmarks/bench_solver.py [--sizes 200,2000,20000] [--repeats 3]
"""

import argparse
import random
import time

from delaygames._zielonka import solve_game as solve_compiled
from delaygames._zielonka_py import solve_game as solve_python
from delaygames.backend import BACKEND


def random_csr(rng, vertices, max_priority=8, max_degree=4):
    owner = [rng.randrange(2) for _ in range(vertices)]
    priority = [rng.randrange(max_priority) for _ in range(vertices)]
    succ_start = [0]
    succ_to = []
    for _ in range(vertices):
        for _ in range(rng.randint(1, max_degree)):
            succ_to.append(rng.randrange(vertices))
        succ_start.append(len(succ_to))
    return owner, priority, succ_start, succ_to


def time_kernel(kernel, args, repeats):
    best = None
    answer = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        answer = kernel(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, answer


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="200,2000,20000")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    opts = parser.parse_args()
    sizes = [int(s) for s in opts.sizes.split(",")]

    print("active backend: %s" % BACKEND)
    print("%10s %12s %12s %9s" % ("vertices", "python [s]", "compiled [s]", "speedup"))
    rng = random.Random(opts.seed)
    for n in sizes:
        args = random_csr(rng, n)
        t_py, ans_py = time_kernel(solve_python, args, opts.repeats)
        t_c, ans_c = time_kernel(solve_compiled, args, opts.repeats)
        if list(ans_py[0]) != list(ans_c[0]) or list(ans_py[1]) != list(ans_c[1]):
            raise SystemExit("kernel mismatch on %d vertices" % n)
        print("%10d %12.4f %12.4f %8.1fx" % (n, t_py, t_c, t_py / t_c))


if __name__ == "__main__":
    main()
