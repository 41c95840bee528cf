"""Explicit graphs, colorings, the equitable verifier, and file formats.

Only two graph families are constructed here: complete multipartite
graphs and Kronecker products of a complete multipartite graph with a
complete graph.  The verifier and the DIMACS parser accept any graph.

Vertex indexing for the product K_{m_1,...,m_r} x K_n is fixed for file
interchange: vertex (i, j, s) with partite block i in [r], copy j in
[m_i], K_n coordinate s in [n] has 0-based linear index

    offset(i) + (j-1)*n + (s-1),   offset(i) = n * (m_1 + ... + m_{i-1}).

The companion multipartite graph K_{m_1*n,...,m_r*n} uses the same
layout, so a coloring of one applies verbatim to the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import FormatError

if TYPE_CHECKING:  # only for annotations; no runtime dependency
    from .closedform import ProductSpec


# ---------------------------------------------------------------------------
# graphs


class Graph:
    """Undirected simple graph over vertices 0..n-1.

    Adjacency is a dense symmetric bit relation: adj[u] is an int bitmask
    of the neighbors of u.  Immutable after construction.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[int]):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        for u, mask in enumerate(adj):
            if mask >> n:
                raise ValueError(f"adjacency of vertex {u} mentions vertices >= {n}")
            if mask & (1 << u):
                raise ValueError(f"loop at vertex {u}")
        self.n = n
        self.adj = tuple(adj)
        for u in range(n):
            for v in _bits(self.adj[u]):
                if not self.adj[v] & (1 << u):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs u < v, lexicographically sorted."""
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1), shift=u + 1):
                yield u, v

    def adjacency_bytes(self) -> bytes:
        """Flat n*n row-major 0/1 matrix, for the compiled search kernel."""
        out = bytearray(self.n * self.n)
        for u in range(self.n):
            row = u * self.n
            for v in _bits(self.adj[u]):
                out[row + v] = 1
        return bytes(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _bits(mask: int, shift: int = 0) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1 + shift
        mask ^= low


def build_multipartite(sizes: Iterable[int]) -> Graph:
    """K_{sizes}: u ~ v iff u and v lie in different parts."""
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part_mask = ((1 << s) - 1) << start
        others = full & ~part_mask
        adj.extend([others] * s)
        start += s
    return Graph(n, adj)


def build_product(spec: ProductSpec) -> Graph:
    """K_{parts} x K_n: (i,j,s) ~ (i',j',s') iff i != i' and s != s'.

    Built for any spec; the closed forms' m <= n hypothesis is not needed
    for the graph itself.
    """
    parts, n = spec.parts, spec.n
    total = sum(parts) * n
    adj = [0] * total
    coords = [
        (i, s)
        for i in range(len(parts))
        for _ in range(parts[i])
        for s in range(n)
    ]
    for u in range(total):
        iu, su = coords[u]
        mask = 0
        for v in range(total):
            iv, sv = coords[v]
            if iu != iv and su != sv:
                mask |= 1 << v
        adj[u] = mask
    return Graph(total, adj)


def product_index(spec: ProductSpec, i: int, j: int, s: int) -> int:
    """0-based linear index of product vertex (i, j, s), all 1-based."""
    parts, n = spec.parts, spec.n
    if not 1 <= i <= len(parts):
        raise ValueError(f"block index {i} out of range")
    if not 1 <= j <= parts[i - 1]:
        raise ValueError(f"copy index {j} out of range for block {i}")
    if not 1 <= s <= n:
        raise ValueError(f"column index {s} out of range")
    offset = n * sum(parts[: i - 1])
    return offset + (j - 1) * n + (s - 1)


def product_coords(spec: ProductSpec, index: int) -> tuple[int, int, int]:
    """Inverse of product_index: linear index -> (i, j, s), 1-based."""
    parts, n = spec.parts, spec.n
    if not 0 <= index < sum(parts) * n:
        raise ValueError(f"vertex index {index} out of range")
    for i, m_i in enumerate(parts, start=1):
        block = m_i * n
        if index < block:
            return i, index // n + 1, index % n + 1
        index -= block
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# colorings and the verifier


@dataclass(frozen=True)
class Coloring:
    """Total assignment of vertices to colors 1..k.

    The census maps every color in [1, k] to its class size, including
    empty classes: equitability compares all k classes.
    """

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if not self.assignment:
            raise ValueError("empty assignment")
        bad = [c for c in self.assignment if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colors out of range [1, {self.k}]: {sorted(set(bad))}")

    @property
    def census(self) -> dict[int, int]:
        counts = {c: 0 for c in range(1, self.k + 1)}
        for c in self.assignment:
            counts[c] += 1
        return counts

    def classes(self) -> list[list[int]]:
        """Vertex lists per color, index c-1 for color c."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out


@dataclass(frozen=True)
class VerifyResult:
    kind: str  # "ok" | "improper_edge" | "not_equitable"
    edge: tuple[int, int] | None = None
    census: dict[int, int] | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.kind == "ok"

    def __str__(self) -> str:
        if self.kind == "ok":
            return "ok"
        if self.kind == "improper_edge":
            u, v = self.edge
            return f"ImproperEdge({u + 1},{v + 1})"
        sizes = sorted(self.census.values())
        return f"NotEquitable(sizes={sizes})"


def verify_coloring(g: Graph, c: Coloring) -> VerifyResult:
    """ok iff no edge is monochromatic and class sizes differ by <= 1."""
    if len(c.assignment) != g.n:
        raise ValueError(
            f"assignment covers {len(c.assignment)} vertices, graph has {g.n}"
        )
    for u, v in g.edges():
        if c.assignment[u] == c.assignment[v]:
            return VerifyResult(kind="improper_edge", edge=(u, v))
    census = c.census
    if max(census.values()) - min(census.values()) > 1:
        return VerifyResult(kind="not_equitable", census=census)
    return VerifyResult(kind="ok")


# ---------------------------------------------------------------------------
# structural classifiers for product colorings


@dataclass(frozen=True)
class ClassShape:
    """Shape of an independent set in a product graph.

    kind "block": all vertices share partite block `index` (1-based).
    kind "column": all vertices share K_n coordinate `index` (1-based).
    kind "not_independent": the set contains an edge.

    Sets that are both (singletons, or one block at one column) report as
    "block"; that canonical tie-break keeps structure checks
    deterministic.
    """

    kind: str
    index: int | None = None


def classify_class(spec: ProductSpec, vertices: Iterable[int]) -> ClassShape:
    """Classify a set of product vertices (0-based linear indices)."""
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("cannot classify an empty class")
    coords = [product_coords(spec, v) for v in verts]
    blocks = {i for i, _, _ in coords}
    columns = {s for _, _, s in coords}
    if len(blocks) == 1:
        return ClassShape(kind="block", index=next(iter(blocks)))
    if len(columns) == 1:
        return ClassShape(kind="column", index=next(iter(columns)))
    return ClassShape(kind="not_independent")


def has_critical_class_sizes(spec: ProductSpec, c: Coloring) -> bool:
    """Whether every class size is m+1 or m+2, m = sum(parts).

    Applies to equitable colorings of the companion multipartite graph at
    the critical count k = floor(m*n/(m+1)); any other k is a usage error.
    """
    m, n = spec.m, spec.n
    critical = (m * n) // (m + 1)
    if c.k != critical:
        raise ValueError(f"expected k = {critical} classes, got {c.k}")
    return all(size in (m + 1, m + 2) for size in c.census.values())


# ---------------------------------------------------------------------------
# file formats


def graph_to_dimacs(g: Graph) -> str:
    """DIMACS edge format, 1-based vertices, edges sorted as u < v."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def graph_from_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format; raises FormatError with line numbers."""
    n = None
    declared_edges = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError(f"malformed problem line {line!r}", lineno)
            try:
                n, declared_edges = int(fields[2]), int(fields[3])
            except ValueError:
                raise FormatError(f"non-integer counts in {line!r}", lineno) from None
            if n < 1 or declared_edges < 0:
                raise FormatError(f"invalid counts in {line!r}", lineno)
        elif fields[0] == "e":
            if n is None:
                raise FormatError("edge before problem line", lineno)
            if len(fields) != 3:
                raise FormatError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(f"non-integer endpoints in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"edge ({u}, {v}) out of range", lineno)
            if u == v:
                raise FormatError(f"loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise FormatError("missing problem line")
    g = Graph.from_edges(n, edges)
    if g.edge_count != declared_edges:
        raise FormatError(
            f"problem line declares {declared_edges} edges, found {g.edge_count}"
        )
    return g


def coloring_to_json(c: Coloring) -> str:
    """Canonical JSON form: {"colors": [...], "k": k}, 1-based colors."""
    import json

    return json.dumps({"colors": list(c.assignment), "k": c.k}, sort_keys=True) + "\n"


def coloring_to_slines(c: Coloring) -> str:
    """One "s v c" line per vertex, ascending v, 1-based.

    The line format carries no explicit k; a reader infers k as the
    largest color, so colorings with trailing empty classes only round
    trip through JSON.
    """
    return "".join(f"s {v + 1} {c.assignment[v]}\n" for v in range(len(c.assignment)))


def coloring_from_text(text: str) -> Coloring:
    """Parse either the JSON object form or "s v c" lines."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _coloring_from_json(text)
    return _coloring_from_slines(text)


def _coloring_from_json(text: str) -> Coloring:
    import json

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or set(obj) != {"colors", "k"}:
        raise FormatError('coloring JSON must be {"colors": [...], "k": int}')
    colors, k = obj["colors"], obj["k"]
    if not isinstance(k, int) or not isinstance(colors, list) or not all(
        isinstance(c, int) for c in colors
    ):
        raise FormatError("coloring JSON fields have wrong types")
    try:
        return Coloring(assignment=tuple(colors), k=k)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _coloring_from_slines(text: str) -> Coloring:
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] != "s" or len(fields) != 3:
            raise FormatError(f"expected 's v c', got {line!r}", lineno)
        try:
            v, c = int(fields[1]), int(fields[2])
        except ValueError:
            raise FormatError(f"non-integer fields in {line!r}", lineno) from None
        if v < 1 or c < 1:
            raise FormatError(f"vertex and color must be >= 1 in {line!r}", lineno)
        if v in seen:
            raise FormatError(f"duplicate assignment for vertex {v}", lineno)
        seen[v] = c
    if not seen:
        raise FormatError("no assignment lines found")
    n = max(seen)
    if set(seen) != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - set(seen))
        raise FormatError(f"assignment not total, missing vertices {missing[:5]}")
    assignment = tuple(seen[v] for v in range(1, n + 1))
    return Coloring(assignment=assignment, k=max(assignment))
