"""Witness construction for equitable colorings.

Multipartite graphs are colored directly from simultaneous q-partitions
of the part sizes.  Products K_{parts} x K_n are colored by a three-tier
strategy:

1. lift a coloring of the companion multipartite graph (every class sits
   inside one partite block, which is independent in the product);
2. mix column classes (vertices sharing the K_n coordinate) with
   block-resident classes, found by counting: choose how many classes of
   each size live in columns, balance them over the n columns, cover the
   per-block remainders exactly, and route column demand to blocks with a
   small max-flow;
3. exhaustive backtracking over class shapes.  Every independent set in
   the product is contained in one block or one column, so restricting
   classes to those shapes loses nothing; tier 3 is therefore a complete
   decision procedure and the only tier allowed to report infeasibility.

All construction is deterministic: fixed enumeration orders, vertices
filled in linear-index order, columns tried before block residues in
tier 2's class numbering.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ._search import equitable_capacities
from .errors import SearchBudgetExceeded
from .graphs import Coloring, Graph, build_product, verify_coloring
from .partitions import (
    QPartition,
    minimal_q_partition,
    rescale_pure,
    simultaneous_class_counts,
    split_step,
)

if TYPE_CHECKING:
    from .closedform import ProductSpec

DEFAULT_BUDGET = 10_000_000


class NoStepAvailable(RuntimeError):
    """The class-count increment has no applicable rewrite here."""


@dataclass(frozen=True)
class SimultaneousPartition:
    """One q-partition per part size, all at the same scale q."""

    q: int
    per_part: tuple[QPartition, ...]

    def __post_init__(self):
        object.__setattr__(self, "per_part", tuple(self.per_part))
        if not self.per_part:
            raise ValueError("needs at least one part")
        bad = [p for p in self.per_part if p.q != self.q]
        if bad:
            raise ValueError(f"parts not at scale q={self.q}: {bad}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(p.n for p in self.per_part)

    @property
    def total_count(self) -> int:
        return sum(p.count for p in self.per_part)


def simultaneous_partition(sizes, k: int) -> SimultaneousPartition | None:
    """Simultaneous q-partitions of the sizes totalling k classes.

    q is forced to floor(sum(sizes)/k); None means K_{sizes} has no
    equitable k-coloring.  Requires 1 <= k <= sum(sizes).
    """
    counts = simultaneous_class_counts(sizes, k)
    if counts is None:
        return None
    q = sum(sizes) // k
    per_part = []
    for s, cnt in zip(sizes, counts):
        b = s - cnt * q
        per_part.append(QPartition(n=s, q=q, a=cnt - b, b=b))
    return SimultaneousPartition(q=q, per_part=tuple(per_part))


def coloring_from_partition(sp: SimultaneousPartition) -> Coloring:
    """Lay the partition out as a coloring of K_{sizes}.

    Parts occupy contiguous vertex ranges in order; within a part the
    size-q classes come first, then the size-(q+1) classes.
    """
    assignment = []
    color = 0
    for p in sp.per_part:
        for size in [p.q] * p.a + [p.q + 1] * p.b:
            color += 1
            assignment.extend([color] * size)
    return Coloring(assignment=tuple(assignment), k=color)


def color_multipartite(sizes, k: int) -> Coloring | None:
    """Equitable k-coloring of K_{sizes}, or None when none exists.

    For k above the vertex count the trailing classes are empty.
    """
    sizes = list(sizes)
    total = sum(sizes)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > total:
        return Coloring(assignment=tuple(range(1, total + 1)), k=k)
    sp = simultaneous_partition(sizes, k)
    if sp is None:
        return None
    return coloring_from_partition(sp)


def increment_coloring(sp: SimultaneousPartition) -> SimultaneousPartition:
    """Rewrite sp into a simultaneous partition with one more class.

    Tries, in order:

    * some part still has q or more large addends: trade them for small
      ones at the same scale (first such part wins);
    * all parts maximal and exactly one part size is not divisible by q:
      swap that part to its minimal (q-1)-partition, which has one more
      addend, and reread the untouched pure parts at scale q-1;
    * all parts maximal and divisible: drop the first part with enough
      addends to scale q-1 directly, rereading the others.

    Raises NoStepAvailable when no rewrite applies (more than one
    non-divisible part, q = 1, or missing lower-scale partitions); the
    caller falls back to simultaneous_partition at k+1.
    """
    parts = list(sp.per_part)
    q = sp.q
    for idx, p in enumerate(parts):
        if p.b >= q:
            parts[idx] = split_step(p)
            return SimultaneousPartition(q=q, per_part=tuple(parts))
    # every part is maximal (b < q); scale must drop
    if q < 2:
        raise NoStepAvailable(f"all parts are singletons at q={q}")
    nondivisible = [idx for idx, p in enumerate(parts) if p.b != 0]
    if len(nondivisible) > 1:
        raise NoStepAvailable("more than one part size not divisible by q")
    if len(nondivisible) == 1:
        idx = nondivisible[0]
        replacement = minimal_q_partition(parts[idx].n, q - 1)
        if replacement is None:
            raise NoStepAvailable(f"{parts[idx].n} has no {q - 1}-partition")
        assert replacement.count == parts[idx].count + 1
        new_parts = [
            replacement if j == idx else rescale_pure(p) for j, p in enumerate(parts)
        ]
        return SimultaneousPartition(q=q - 1, per_part=tuple(new_parts))
    for idx, p in enumerate(parts):
        stepped = split_step(p)  # pure part: only the scale-drop rewrite can fire
        if stepped is not None:
            new_parts = [
                stepped if j == idx else rescale_pure(pp) for j, pp in enumerate(parts)
            ]
            return SimultaneousPartition(q=q - 1, per_part=tuple(new_parts))
    raise NoStepAvailable("no part has enough addends to drop a scale")


# ---------------------------------------------------------------------------
# product colorings


def color_product(spec: ProductSpec, k: int, budget: int | None = DEFAULT_BUDGET) -> Coloring | None:
    """Equitable k-coloring of K_{parts} x K_n, or None when impossible.

    None is only returned on tier 3's exhaustive proof; a budget that
    runs out raises SearchBudgetExceeded instead.  Any returned coloring
    has been verified against the explicit product graph.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    total = spec.m * spec.n
    graph = build_product(spec)
    if k > total:
        coloring = Coloring(assignment=tuple(range(1, total + 1)), k=k)
        return _checked(graph, coloring)

    lifted = color_multipartite(spec.blown_sizes, k)
    if lifted is not None:
        return _checked(graph, lifted)

    mixed = _mixed_coloring(spec, k)
    if mixed is not None:
        return _checked(graph, mixed)

    found, assignment, nodes = _shape_search(spec, k, budget)
    if found is None:
        raise SearchBudgetExceeded(nodes, budget)
    if not found:
        return None
    return _checked(graph, Coloring(assignment=tuple(assignment), k=k))


def _checked(graph: Graph, coloring: Coloring) -> Coloring:
    result = verify_coloring(graph, coloring)
    if not result.ok:  # pragma: no cover - construction bug guard
        raise AssertionError(f"constructed coloring failed verification: {result}")
    return coloring


def _transport(supplies: list[int], demands: list[int], caps: list[int]):
    """Route supplies (per block) to demands (per column), cell limit
    caps[i] for block i in every column.  Returns u[s][i] or None.

    Plain augmenting-path max flow; sizes here are a handful of nodes.
    """
    nb, nc = len(supplies), len(demands)
    # residual capacities: source->block, block->column cells, column->sink
    src_res = list(supplies)
    cell_res = [[caps[i] for i in range(nb)] for _ in range(nc)]
    cell_flow = [[0] * nb for _ in range(nc)]
    sink_res = list(demands)
    need = sum(demands)
    if sum(supplies) != need:
        return None
    pushed = 0
    while pushed < need:
        # BFS from source over residual edges; back edges column->block
        prev: dict[tuple[str, int], tuple] = {}
        frontier = [("b", i) for i in range(nb) if src_res[i] > 0]
        for node in frontier:
            prev[node] = ("src",)
        goal = None
        while frontier and goal is None:
            nxt = []
            for node in frontier:
                kind, idx = node
                if kind == "b":
                    for s in range(nc):
                        if cell_res[s][idx] > 0 and ("c", s) not in prev:
                            prev[("c", s)] = ("b", idx)
                            nxt.append(("c", s))
                else:
                    if sink_res[idx] > 0:
                        goal = ("c", idx)
                        break
                    for i in range(nb):
                        if cell_flow[idx][i] > 0 and ("b", i) not in prev:
                            prev[("b", i)] = ("c", idx)
                            nxt.append(("b", i))
            frontier = nxt
        if goal is None:
            return None
        # push the path bottleneck in one go
        path = [goal]
        while prev[path[-1]][0] != "src":
            path.append(prev[path[-1]])
        path.reverse()
        delta = sink_res[goal[1]]
        delta = min(delta, src_res[path[0][1]])
        for a, b in zip(path, path[1:]):
            if a[0] == "b" and b[0] == "c":
                delta = min(delta, cell_res[b[1]][a[1]])
            else:
                delta = min(delta, cell_flow[a[1]][b[1]])
        src_res[path[0][1]] -= delta
        sink_res[goal[1]] -= delta
        for a, b in zip(path, path[1:]):
            if a[0] == "b" and b[0] == "c":
                cell_res[b[1]][a[1]] -= delta
                cell_flow[b[1]][a[1]] += delta
            else:
                cell_res[a[1]][b[1]] += delta
                cell_flow[a[1]][b[1]] -= delta
        pushed += delta
    return cell_flow


def _balanced_groups(count_big: int, count_small: int, q: int, n: int):
    """Distribute count_big classes of size q+1 and count_small of size q
    over n columns, keeping column loads as even as possible.

    Returns (per-column (bigs, smalls), per-column loads)."""
    bigs = [count_big // n + (1 if s < count_big % n else 0) for s in range(n)]
    loads = [b * (q + 1) for b in bigs]
    smalls = [0] * n
    for _ in range(count_small):
        s = min(range(n), key=lambda t: (loads[t], t))
        smalls[s] += 1
        loads[s] += q
    return list(zip(bigs, smalls)), loads


def _block_compositions(y: int, x: int, q: int, block_caps: list[int]):
    """All ways to place y big and x small block-resident classes across
    the blocks without overfilling any block, lexicographic order."""
    r = len(block_caps)

    def rec(i: int, y_left: int, x_left: int, acc: list[tuple[int, int]]):
        if i == r - 1:
            if y_left * (q + 1) + x_left * q <= block_caps[i]:
                yield acc + [(y_left, x_left)]
            return
        for yi in range(min(y_left, block_caps[i] // (q + 1)) + 1):
            room = block_caps[i] - yi * (q + 1)
            for xi in range(min(x_left, room // q) + 1):
                yield from rec(i + 1, y_left - yi, x_left - xi, acc + [(yi, xi)])

    yield from rec(0, y, x, [])


def _mixed_coloring(spec: ProductSpec, k: int) -> Coloring | None:
    """Tier 2: column classes plus block-resident remainders.

    Searches shape counts only: Y big and X small classes go to columns
    (balanced over the n columns), the rest cover each block's leftover
    cells exactly.  Column demand is routed to blocks by max flow.  A
    None here is not an infeasibility proof; tier 3 decides.
    """
    parts, n = spec.parts, spec.n
    r = len(parts)
    total = sum(parts) * n
    m = sum(parts)
    q, rem = divmod(total, k)
    n_big, n_small = rem, k - rem
    block_caps = [p * n for p in parts]

    y_col_max = n_big if q + 1 <= m else 0
    x_col_max = n_small if q <= m else 0
    for y_col in range(y_col_max, -1, -1):
        for x_col in range(x_col_max, -1, -1):
            if y_col == 0 and x_col == 0:
                continue  # pure block layouts are tier 1's job
            groups, loads = _balanced_groups(y_col, x_col, q, n)
            if max(loads) > m:
                continue
            for comp in _block_compositions(n_big - y_col, n_small - x_col, q, block_caps):
                residues = [
                    block_caps[i] - comp[i][0] * (q + 1) - comp[i][1] * q
                    for i in range(r)
                ]
                flow = _transport(residues, loads, list(parts))
                if flow is None:
                    continue
                return _assemble_mixed(spec, k, q, groups, comp, flow)
    return None


def _assemble_mixed(spec, k, q, groups, comp, flow) -> Coloring:
    """Turn tier 2's counts into an explicit coloring.

    Column s gives its classes the cells (i, j, s) with j below the flow
    value for block i; blocks chop their leftover cells in linear order.
    Colors number column classes first (by column, bigs before smalls),
    then block classes (by block, bigs before smalls).
    """
    parts, n = spec.parts, spec.n
    offsets = [n * sum(parts[:i]) for i in range(len(parts))]
    assignment = [0] * (sum(parts) * n)
    color = 0
    for s, (bigs, smalls) in enumerate(groups):
        cells = []
        for i in range(len(parts)):
            for j in range(flow[s][i]):
                cells.append(offsets[i] + j * n + s)
        pos = 0
        for size in [q + 1] * bigs + [q] * smalls:
            color += 1
            for _ in range(size):
                assignment[cells[pos]] = color
                pos += 1
        assert pos == len(cells)
    for i in range(len(parts)):
        cells = [
            offsets[i] + j * n + s
            for j in range(parts[i])
            for s in range(n)
            if assignment[offsets[i] + j * n + s] == 0
        ]
        pos = 0
        for size in [q + 1] * comp[i][0] + [q] * comp[i][1]:
            color += 1
            for _ in range(size):
                assignment[cells[pos]] = color
                pos += 1
        assert pos == len(cells)
    assert color == k
    return Coloring(assignment=tuple(assignment), k=k)


class _OutOfBudget(Exception):
    pass


def _shape_search(spec: ProductSpec, k: int, budget: int | None):
    """Tier 3: exhaustive backtracking with classes confined to shapes.

    A class is extendable by vertex (i, ., s) while it stays block-uniform
    or column-uniform; since independent sets in the product are exactly
    the block and column subsets, this search is complete.  Vertices are
    filled in linear-index order; only the first empty class of each
    capacity is tried, and an assignment is skipped when the class can no
    longer be filled to capacity from the vertices its shape still admits
    (pruned subtrees contain no solutions, so witnesses are unchanged).

    Returns (found, assignment, nodes); found is None on budget
    exhaustion.
    """
    parts, n = spec.parts, spec.n
    r = len(parts)
    total = sum(parts) * n
    sys.setrecursionlimit(max(sys.getrecursionlimit(), total + 100))
    coords = [
        (i, s) for i in range(r) for _ in range(parts[i]) for s in range(n)
    ]
    # vertices at or past each position, per block and per column
    rem_block = [[0] * (total + 1) for _ in range(r)]
    rem_col = [[0] * (total + 1) for _ in range(n)]
    for pos in range(total - 1, -1, -1):
        bi, si = coords[pos]
        for b in range(r):
            rem_block[b][pos] = rem_block[b][pos + 1] + (b == bi)
        for s in range(n):
            rem_col[s][pos] = rem_col[s][pos + 1] + (s == si)
    caps = equitable_capacities(total, k)
    used = [0] * k
    block_ok = [False] * k
    block_val = [0] * k
    col_ok = [False] * k
    col_val = [0] * k
    assignment = [-1] * total
    nodes = 0
    limit = 0 if budget is None else budget

    def reachable(c: int, pos: int) -> int:
        """Largest size class c can still reach using vertices after pos."""
        best = 0
        if block_ok[c]:
            best = used[c] + rem_block[block_val[c]][pos]
        if col_ok[c]:
            best = max(best, used[c] + rem_col[col_val[c]][pos])
        return best

    def dfs(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if 0 < limit < nodes:
            raise _OutOfBudget
        if pos == total:
            return True
        bi, si = coords[pos]
        last_empty_cap = -1
        for c in range(k):
            uc = used[c]
            if uc == caps[c]:
                continue
            if uc == 0:
                if caps[c] == last_empty_cap:
                    continue
                last_empty_cap = caps[c]
                used[c] = 1
                block_ok[c] = col_ok[c] = True
                block_val[c], col_val[c] = bi, si
                assignment[pos] = c
                if reachable(c, pos + 1) >= caps[c] and dfs(pos + 1):
                    return True
                used[c] = 0
                assignment[pos] = -1
            else:
                same_block = block_ok[c] and block_val[c] == bi
                same_col = col_ok[c] and col_val[c] == si
                if not (same_block or same_col):
                    continue
                saved = (block_ok[c], col_ok[c])
                block_ok[c], col_ok[c] = same_block, same_col
                used[c] = uc + 1
                assignment[pos] = c
                if reachable(c, pos + 1) >= caps[c] and dfs(pos + 1):
                    return True
                block_ok[c], col_ok[c] = saved
                used[c] = uc
                assignment[pos] = -1
        return False

    try:
        found = dfs(0)
    except _OutOfBudget:
        return None, None, nodes
    if found:
        return True, [c + 1 for c in assignment], nodes
    return False, None, nodes
