"""Kernel selection: compiled extension when available, pure Python otherwise.

Set DELAYGAMES_SOLVER=python to force the fallback.
"""

import os

_forced = os.environ.get("DELAYGAMES_SOLVER", "").strip().lower()

if _forced in ("python", "py", "pure"):
    from ._zielonka_py import solve_game

    BACKEND = "python"
elif _forced in ("compiled", "ext", "c"):
    from ._zielonka import solve_game  # type: ignore[import-not-found]

    BACKEND = "compiled"
else:
    try:
        from ._zielonka import solve_game  # type: ignore[import-not-found]

        BACKEND = "compiled"
    except ImportError:
        from ._zielonka_py import solve_game

        BACKEND = "python"

__all__ = ["solve_game", "BACKEND"]
