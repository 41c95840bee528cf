"""Search-kernel selection: compiled extension with pure-Python fallback.

The compiled kernel (_speedups, Cython) is used when importable; set
EQCOLOR_KERNEL=python or EQCOLOR_KERNEL=cython to force a backend.  Both
explore identical search trees, so everything above this module is
backend-agnostic.
"""

from __future__ import annotations

import os
from array import array

from . import _search_py
from .graphs import Graph

FEASIBLE = _search_py.FEASIBLE
INFEASIBLE = _search_py.INFEASIBLE
BUDGET_EXCEEDED = _search_py.BUDGET_EXCEEDED

try:
    from . import _speedups
except ImportError:  # pragma: no cover - depends on build environment
    _speedups = None

_FORCED = os.environ.get("EQCOLOR_KERNEL", "").strip().lower()
if _FORCED == "cython" and _speedups is None:  # pragma: no cover
    raise ImportError("EQCOLOR_KERNEL=cython but the compiled kernel is unavailable")
if _FORCED == "python":
    DEFAULT_BACKEND = "python"
elif _speedups is not None:
    DEFAULT_BACKEND = "cython"
else:  # pragma: no cover - depends on build environment
    DEFAULT_BACKEND = "python"


def available_backends() -> tuple[str, ...]:
    return ("python",) if _speedups is None else ("python", "cython")


def equitable_capacities(n: int, k: int) -> list[int]:
    """Class capacities for an equitable k-coloring of n vertices:
    n mod k classes of ceil(n/k), the rest of floor(n/k), largest first."""
    big = n % k
    return [n // k + 1] * big + [n // k] * (k - big)


def degree_order(g: Graph) -> list[int]:
    """Vertices by descending degree, ties by index: the search order."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def search_equitable(
    g: Graph,
    k: int,
    budget: int | None = None,
    backend: str | None = None,
) -> tuple[int, list[int] | None, int]:
    """Decide equitable k-colorability of g by exhaustive backtracking.

    Returns (status, colors, nodes): status is FEASIBLE / INFEASIBLE /
    BUDGET_EXCEEDED, colors is a 1-based color per vertex when feasible.
    Requires 1 <= k <= g.n (larger k is trivial and handled by callers).
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"kernel requires 1 <= k <= {g.n}, got {k}")
    backend = backend or DEFAULT_BACKEND
    caps = equitable_capacities(g.n, k)
    order = degree_order(g)
    limit = 0 if budget is None else budget
    if backend == "python":
        status, classes, nodes = _search_py.search(g.n, g.adj, k, caps, order, limit)
    elif backend == "cython":
        if _speedups is None:
            raise ValueError("compiled kernel not available")
        status, classes, nodes = _speedups.search(
            g.n,
            g.adjacency_bytes(),
            k,
            array("i", caps),
            array("i", order),
            limit,
        )
    else:
        raise ValueError(f"unknown backend {backend!r}")
    colors = None if classes is None else [c + 1 for c in classes]
    return status, colors, nodes
