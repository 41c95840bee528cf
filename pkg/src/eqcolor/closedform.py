"""Closed-form equitable-coloring quantities.

Everything here is exact integer arithmetic.  Comparisons of the shape
x/y >= ceil(x/z) are evaluated by cross-multiplication; no floats.

Two families of graphs are covered:

* complete multipartite graphs K_{s_1,...,s_t}, via the q-partition
  reduction (each color class lives inside one part);
* Kronecker products K_{m_1,...,m_r} x K_n with m = sum(m_i) <= n, whose
  equitable chromatic number and threshold have closed forms in terms of
  the "blown-up" companion sizes (m_1*n, ..., m_r*n).

A note on the two h-scans.  The number-side scan takes the largest class
size q such that every blown-up size splits into addends {q, q+1}; the
threshold-side scan walks t upward from m+2 looking for the first t at
which the simultaneous-partition intervals tear apart (some size has no
t-partition, or two sizes are both non-divisible by t).  The scanned
predicate sets are not assumed monotone; both scans are exhaustive over
their stated ranges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OutOfScopeError
from .partitions import ceil_div, simultaneous_exists


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class ProductSpec:
    """Parameters of K_{m_1,...,m_r} x K_n and its companion multipartite
    graph K_{m_1*n,...,m_r*n}."""

    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(m < 1 for m in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        return sum(self.parts)

    @property
    def vertex_count(self) -> int:
        return self.m * self.n

    @property
    def theorem_applicable(self) -> bool:
        """The closed forms are only claimed for sum(parts) <= n."""
        return self.m <= self.n

    @property
    def blown_sizes(self) -> tuple[int, ...]:
        """Part sizes of the companion multipartite graph."""
        return tuple(m * self.n for m in self.parts)


@dataclass(frozen=True)
class ThresholdReport:
    """All closed-form quantities for one product spec."""

    chi_eq: int
    chi_eq_star: int
    h: int
    h_star: int | None
    lin_chang_bound: int
    case: str  # "Case1" | "Case2"
    condition_trace: dict = field(default_factory=dict, compare=False)

    def to_json_dict(self, spec: ProductSpec) -> dict:
        """The stable report schema emitted by the CLI."""
        return {
            "parts": list(spec.parts),
            "n": spec.n,
            "chi_eq": self.chi_eq,
            "chi_eq_star": self.chi_eq_star,
            "h": self.h,
            "h_star": self.h_star,
            "case": self.case,
            "lin_chang_bound": self.lin_chang_bound,
        }


# ---------------------------------------------------------------------------
# complete multipartite graphs


def h_multipartite(sizes: list[int] | tuple[int, ...]) -> int:
    """Largest k in [2, min(sizes)+1] with s/(k-1) >= ceil(s/k) for all s.

    Equivalently: one more than the largest common class size q such that
    every part size has a q-partition.  k = 2 always qualifies.
    """
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"sizes must be positive, got {sizes}")
    best = 2
    for k in range(2, min(sizes) + 2):
        if all(s >= (k - 1) * ceil_div(s, k) for s in sizes):
            best = k
    return best


def equitable_number_multipartite(sizes: list[int] | tuple[int, ...]) -> int:
    """Equitable chromatic number of K_{sizes}: sum of ceil(s/h).

    This is the least feasible class count: h-1 is the largest class size
    q usable simultaneously by all parts, and the fewest classes at that
    scale is sum(ceil(s/(q+1))).
    """
    h = h_multipartite(sizes)
    return sum(ceil_div(s, h) for s in sizes)


def multipartite_colorable(sizes: list[int] | tuple[int, ...], k: int) -> bool:
    """Exact equitable k-colorability of K_{sizes}, k >= 1.

    For k above the vertex count, classes of size 0 and 1 still differ by
    at most 1, so the answer is True by convention.
    """
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"sizes must be positive, got {sizes}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k >= sum(sizes):
        return True
    return simultaneous_exists(sizes, k)


def equitable_threshold_multipartite(sizes: list[int] | tuple[int, ...]) -> int:
    """Equitable chromatic threshold of K_{sizes}.

    The least t such that K_{sizes} is equitably k-colorable for every
    k >= t.  Feasibility is not monotone in k (parts of size 3 split into
    two classes or three, never into classes of size exactly 2), so this
    walks down from the vertex count to the last infeasible k.

    Note this can exceed equitable_number_multipartite: K_{3,3} has
    number 2 but threshold 4, because 3 classes of size exactly 2 cannot
    tile two parts of size 3.
    """
    sizes = list(sizes)
    total = sum(sizes)
    for k in range(total, 0, -1):
        if not multipartite_colorable(sizes, k):
            return k + 1
    return 1


# ---------------------------------------------------------------------------
# Kronecker products with complete graphs


def lin_chang_bound(m: int, n: int) -> int:
    """ceil(m*n/(m+1)): upper bound on the product threshold for m <= n."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m > n:
        raise ValueError(f"bound requires m <= n, got m={m}, n={n}")
    return ceil_div(m * n, m + 1)


def _require_applicable(spec: ProductSpec) -> None:
    if not spec.theorem_applicable:
        raise OutOfScopeError(
            f"closed forms require sum(parts) <= n, got m={spec.m} > n={spec.n};"
            " use the oracle for explicit graphs"
        )


def equitable_number_product(spec: ProductSpec) -> tuple[int, int]:
    """(chi_eq, h) for K_{parts} x K_n with m <= n.

    chi_eq equals the equitable chromatic number of the companion
    multipartite graph on the blown-up sizes: sum of ceil(m_i*n/h).
    """
    _require_applicable(spec)
    h = h_multipartite(spec.blown_sizes)
    return sum(ceil_div(s, h) for s in spec.blown_sizes), h


def h_star_product(spec: ProductSpec) -> int:
    """Smallest t >= m+2 at which the simultaneous-partition chain breaks.

    Break at t means: some blown-up size has no t-partition
    (s/t < ceil(s/(t+1))), or at least two blown-up sizes are not
    divisible by t.  The scan terminates by t = max(blown sizes) + 1,
    where the first disjunct holds.

    With a single part the second disjunct can never fire, and the value
    returned here does not describe that (edgeless) product; see
    equitable_threshold_product.
    """
    _require_applicable(spec)
    sizes = spec.blown_sizes
    t = spec.m + 2
    while True:
        if any(s < t * ceil_div(s, t + 1) for s in sizes):
            return t
        if sum(1 for s in sizes if s % t != 0) >= 2:
            return t
        t += 1


def equitable_threshold_product(
    spec: ProductSpec, case1_reading: str = "floor"
) -> ThresholdReport:
    """Full closed-form report for K_{parts} x K_n, m <= n.

    chi_eq_star is ceil(mn/(m+1)) when the critical count floor(mn/(m+1))
    is unreachable (Case 1), else sum of ceil(m_i*n/h_star) (Case 2).

    Case 1 fires when (i) the per-part floors undershoot the whole,
    sum(floor(m_i*n/(m+1))) < floor(mn/(m+1)), or (ii) some blown-up size
    has no (m+1)-partition.  The stated form of (i) with ceilings is never
    true (ceilings are superadditive), so the floor form is the default;
    pass case1_reading="ceiling" to evaluate the vacuous variant instead.
    Both readings are recorded in condition_trace.

    A single part makes the product edgeless, every k >= 1 works and the
    threshold is 1; the case split above does not apply (its infeasibility
    argument needs two parts), so r == 1 short-circuits to Case2 with
    h_star = m_1*n + 1, the scale at which the formula value is 1.
    """
    if case1_reading not in ("floor", "ceiling"):
        raise ValueError(f"unknown case1_reading {case1_reading!r}")
    _require_applicable(spec)
    m, n = spec.m, spec.n
    sizes = spec.blown_sizes
    chi_eq, h = equitable_number_product(spec)
    bound = lin_chang_bound(m, n)

    sum_floor_lt = sum(s // (m + 1) for s in sizes) < (m * n) // (m + 1)
    sum_ceil_lt = sum(ceil_div(s, m + 1) for s in sizes) < ceil_div(m * n, m + 1)
    partition_gap = any(s < (m + 1) * ceil_div(s, m + 2) for s in sizes)
    trace = {
        "sum_floor_lt": sum_floor_lt,
        "sum_ceil_lt": sum_ceil_lt,
        "partition_gap": partition_gap,
        "case1_floor_reading": sum_floor_lt or partition_gap,
        "case1_ceiling_reading": sum_ceil_lt or partition_gap,
        "reading_used": case1_reading,
        "single_part": spec.r == 1,
    }

    if spec.r == 1:
        h_star = sizes[0] + 1
        return ThresholdReport(
            chi_eq=chi_eq,
            chi_eq_star=1,
            h=h,
            h_star=h_star,
            lin_chang_bound=bound,
            case="Case2",
            condition_trace=trace,
        )

    case1 = trace[f"case1_{case1_reading}_reading"]
    if case1:
        return ThresholdReport(
            chi_eq=chi_eq,
            chi_eq_star=bound,
            h=h,
            h_star=None,
            lin_chang_bound=bound,
            case="Case1",
            condition_trace=trace,
        )
    h_star = h_star_product(spec)
    return ThresholdReport(
        chi_eq=chi_eq,
        chi_eq_star=sum(ceil_div(s, h_star) for s in sizes),
        h=h,
        h_star=h_star,
        lin_chang_bound=bound,
        case="Case2",
        condition_trace=trace,
    )


def product_colorable(spec: ProductSpec, k: int) -> bool:
    """Exact equitable k-colorability of the product, m <= n, by formula.

    Below ceil(mn/(m+1)) every color class of the product lives inside
    one partite block, so colorability coincides with the companion
    multipartite graph's; at or above that count the product of complete
    graphs it spans is already colorable.
    """
    _require_applicable(spec)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if spec.r == 1:
        return True
    if k >= lin_chang_bound(spec.m, spec.n):
        return True
    return multipartite_colorable(spec.blown_sizes, k)
