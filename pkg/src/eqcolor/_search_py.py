"""Pure-Python backtracking kernel for equitable k-colorability.

Reference implementation of the search contract shared with the compiled
kernel in _speedups.pyx; both must explore identical trees so results and
node counts agree exactly:

* class capacities are fixed up front (largest first) and every class
  must be filled to its capacity;
* vertices are assigned in the caller-supplied order;
* candidate classes are scanned in index order, skipping full classes;
* among empty classes, only the first one of each distinct capacity is
  tried (equal-capacity classes are interchangeable);
* a class is admissible when it contains no neighbor of the vertex.

Statuses: 1 feasible, 0 infeasible, 2 budget exhausted.
"""

from __future__ import annotations

import sys

FEASIBLE = 1
INFEASIBLE = 0
BUDGET_EXCEEDED = 2


class _OutOfBudget(Exception):
    pass


def search(
    n: int,
    adj: tuple[int, ...],
    k: int,
    caps: list[int],
    order: list[int],
    budget: int,
) -> tuple[int, list[int] | None, int]:
    """Run the search; budget <= 0 means unlimited.

    Returns (status, class index per vertex or None, nodes explored).
    """
    # recursion runs one frame per vertex
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 100))
    class_mask = [0] * k
    used = [0] * k
    assignment = [-1] * n
    nodes = 0

    def dfs(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if 0 < budget < nodes:
            raise _OutOfBudget
        if pos == n:
            return True
        v = order[pos]
        av = adj[v]
        vbit = 1 << v
        last_empty_cap = -1
        for c in range(k):
            uc = used[c]
            if uc == caps[c]:
                continue
            if uc == 0:
                if caps[c] == last_empty_cap:
                    continue
                last_empty_cap = caps[c]
            if av & class_mask[c]:
                continue
            class_mask[c] |= vbit
            used[c] = uc + 1
            assignment[v] = c
            if dfs(pos + 1):
                return True
            class_mask[c] ^= vbit
            used[c] = uc
            assignment[v] = -1
        return False

    try:
        found = dfs(0)
    except _OutOfBudget:
        return BUDGET_EXCEEDED, None, nodes
    if found:
        return FEASIBLE, list(assignment), nodes
    return INFEASIBLE, None, nodes
