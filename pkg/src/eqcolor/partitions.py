"""Integer q-partition calculus.

A q-partition of n is a decomposition n = a*q + b*(q+1): a addends equal
to q and b addends equal to q+1.  Because the addend count a+b determines
(a, b) uniquely (b = n - count*q), a partition is stored as the four
integers (n, q, a, b) rather than as an addend multiset.

Facts used throughout (all elementary, all exercised by the test suite):

* existence:   a q-partition of n exists  iff  n mod q <= n // q,
               equivalently ceil(n/(q+1)) <= n/q.
* minimal:     the unique partition with the fewest addends has
               a + b = ceil(n/(q+1)) and is characterised by a < q+1.
* maximal:     the unique partition with the most addends has
               a + b = floor(n/q) and is characterised by b < q.
* every addend count between those two bounds is realised exactly once.

Equitable colorings of complete multipartite graphs reduce to finding one
q and simultaneous q-partitions of every part size; the helpers at the
bottom of this module implement that reduction on plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_domain(n: int, q: int) -> None:
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")
    if q > n:
        raise ValueError(f"q must not exceed n, got q={q} > n={n}")


@dataclass(frozen=True)
class QPartition:
    """n = a*q + b*(q+1) with a addends of size q and b of size q+1."""

    n: int
    q: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 1 or self.q < 1 or self.a < 0 or self.b < 0:
            raise ValueError(f"invalid q-partition parameters {self}")
        if self.a + self.b < 1:
            raise ValueError("a q-partition needs at least one addend")
        if self.a * self.q + self.b * (self.q + 1) != self.n:
            raise ValueError(
                f"{self.a}*{self.q} + {self.b}*{self.q + 1} != {self.n}"
            )

    @property
    def count(self) -> int:
        """Number of addends."""
        return self.a + self.b

    def addends(self) -> list[int]:
        """The addend multiset, small sizes first."""
        return [self.q] * self.a + [self.q + 1] * self.b

    def is_minimal(self) -> bool:
        return self.a < self.q + 1

    def is_maximal(self) -> bool:
        return self.b < self.q


def q_partition_exists(n: int, q: int) -> bool:
    """Whether n can be written as a sum of addends from {q, q+1}."""
    _check_domain(n, q)
    return n % q <= n // q


def _from_count(n: int, q: int, count: int) -> QPartition:
    # b = n - count*q is forced once the addend count is fixed.
    b = n - count * q
    return QPartition(n=n, q=q, a=count - b, b=b)


def minimal_q_partition(n: int, q: int) -> QPartition | None:
    """The unique q-partition of n with the fewest addends, or None."""
    if not q_partition_exists(n, q):
        return None
    return _from_count(n, q, ceil_div(n, q + 1))


def maximal_q_partition(n: int, q: int) -> QPartition | None:
    """The unique q-partition of n with the most addends, or None."""
    if not q_partition_exists(n, q):
        return None
    return _from_count(n, q, n // q)


def enumerate_q_partitions(n: int, q: int) -> list[QPartition]:
    """All q-partitions of n, sorted by addend count ascending.

    Scans b (the number of q+1 addends) and keeps the values for which the
    remainder splits evenly into q's.  Deliberately does not reuse the
    count-range shortcut so it can serve as an independent cross-check.
    """
    _check_domain(n, q)
    found = []
    for b in range(n // (q + 1) + 1):
        rest = n - b * (q + 1)
        if rest % q == 0:
            found.append(QPartition(n=n, q=q, a=rest // q, b=b))
    found.sort(key=lambda p: p.count)
    return found


def addend_count_bounds(n: int, q: int) -> tuple[int, int] | None:
    """(min, max) addend count over all q-partitions of n, or None.

    Every integer in the closed range is realised by exactly one
    q-partition.
    """
    if not q_partition_exists(n, q):
        return None
    return ceil_div(n, q + 1), n // q


def split_step(p: QPartition) -> QPartition | None:
    """Rewrite p into a partition of the same total with one more addend.

    Two rewrites, with mutually exclusive guards:

    * b >= q:            trade q of the (q+1)-addends for q+1 q-addends,
                         staying at scale q.
    * b == 0, a >= q-1,
      q >= 2:            drop to scale q-1: q addends of q-1 plus
                         a-q+1 addends of q.

    Returns None when neither guard holds; the caller picks another part.
    """
    if p.b >= p.q:
        return QPartition(n=p.n, q=p.q, a=p.a + p.q + 1, b=p.b - p.q)
    if p.b == 0 and p.q >= 2 and p.a >= p.q - 1:
        return QPartition(n=p.n, q=p.q - 1, a=p.q, b=p.a - p.q + 1)
    return None


def rescale_pure(p: QPartition) -> QPartition:
    """Reinterpret an all-q partition (b == 0) at scale q-1.

    n = a*q is also n = 0*(q-1) + a*q: same addends viewed as q-1 plus one.
    Addend count is unchanged.  Requires q >= 2 and b == 0.
    """
    if p.b != 0 or p.q < 2:
        raise ValueError(f"not a pure partition above scale 1: {p}")
    return QPartition(n=p.n, q=p.q - 1, a=0, b=p.a)


def simultaneous_class_counts(sizes: list[int] | tuple[int, ...], k: int) -> list[int] | None:
    """Per-part class counts for an equitable k-way split of the sizes.

    An equitable k-coloring of a complete multipartite graph with these
    part sizes puts every color class inside one part, all class sizes in
    {q, q+1} with q = floor(N/k), N = sum(sizes).  Part i can host any
    count in [ceil(s_i/(q+1)), floor(s_i/q)], so a split exists iff every
    part has a q-partition and k lies within the summed bounds.

    Returns the greedy count vector (each part starts at its minimum, the
    remainder is distributed left to right up to each maximum), or None
    when infeasible.  Counts for k > N are handled by the coloring layer,
    not here.
    """
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"sizes must be positive, got {sizes}")
    total = sum(sizes)
    if not 1 <= k <= total:
        raise ValueError(f"k must be in [1, {total}], got {k}")
    q = total // k
    bounds = []
    for s in sizes:
        if q > s or not q_partition_exists(s, q):
            return None
        bounds.append((ceil_div(s, q + 1), s // q))
    low = sum(b[0] for b in bounds)
    high = sum(b[1] for b in bounds)
    if not low <= k <= high:
        return None
    counts = [b[0] for b in bounds]
    rest = k - low
    for i, (lo, hi) in enumerate(bounds):
        if rest == 0:
            break
        take = min(rest, hi - lo)
        counts[i] += take
        rest -= take
    return counts


def simultaneous_exists(sizes: list[int] | tuple[int, ...], k: int) -> bool:
    """Whether the sizes admit an equitable k-way split (k <= sum)."""
    return simultaneous_class_counts(sizes, k) is not None
