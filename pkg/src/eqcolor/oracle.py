"""Brute-force ground truth for equitable colorability.

Decides equitable k-colorability of explicit graphs by exhaustive
backtracking and derives the exact chromatic number and threshold from
those decisions.  Deliberately independent of the closed-form evaluators
and the constructive colorer: this module is what they are checked
against, so it must not consult them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _search
from .errors import SearchBudgetExceeded
from .graphs import Coloring, Graph, verify_coloring

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class OracleResult:
    k: int
    feasible: bool
    witness: Coloring | None
    nodes_explored: int


def k_colorable(
    g: Graph,
    k: int,
    budget: int | None = DEFAULT_BUDGET,
    backend: str | None = None,
) -> OracleResult:
    """Exact equitable k-colorability decision.

    For k above the vertex count the singleton coloring plus empty
    classes is already equitable, so no search runs.  Raises
    SearchBudgetExceeded when the node budget runs out; that outcome is
    never folded into 'infeasible'.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > g.n:
        witness = Coloring(assignment=tuple(range(1, g.n + 1)), k=k)
        return OracleResult(k=k, feasible=True, witness=witness, nodes_explored=0)
    status, colors, nodes = _search.search_equitable(g, k, budget=budget, backend=backend)
    if status == _search.BUDGET_EXCEEDED:
        raise SearchBudgetExceeded(nodes, budget)
    if status == _search.INFEASIBLE:
        return OracleResult(k=k, feasible=False, witness=None, nodes_explored=nodes)
    witness = Coloring(assignment=tuple(colors), k=k)
    check = verify_coloring(g, witness)
    if not check.ok:  # pragma: no cover - guards against kernel bugs
        raise AssertionError(f"search produced an invalid witness: {check}")
    return OracleResult(k=k, feasible=True, witness=witness, nodes_explored=nodes)


def chi_eq_exact(
    g: Graph, budget: int | None = DEFAULT_BUDGET, backend: str | None = None
) -> int:
    """Least k such that g is equitably k-colorable (k = |V| always is)."""
    for k in range(1, g.n + 1):
        if k_colorable(g, k, budget=budget, backend=backend).feasible:
            return k
    raise AssertionError("unreachable: singletons are always feasible")


def chi_eq_star_exact(
    g: Graph, budget: int | None = DEFAULT_BUDGET, backend: str | None = None
) -> int:
    """Least t such that g is equitably k-colorable for every k >= t.

    Colorability is trivial beyond |V| (empty classes), so the scan walks
    down from |V| to the largest infeasible k.
    """
    for k in range(g.n, 0, -1):
        if not k_colorable(g, k, budget=budget, backend=backend).feasible:
            return k + 1
    return 1
