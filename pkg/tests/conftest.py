"""Shared test helpers."""

from __future__ import annotations

from itertools import combinations_with_replacement

import pytest

from eqcolor.closedform import ProductSpec

# The standard parameter box: r <= 3, parts up to 2, sum(parts) <= n <= 5.
SWEEP_ORACLE_CAP = 18


def sweep_specs(max_r: int = 3, max_part: int = 2, max_n: int = 5) -> list[ProductSpec]:
    specs = []
    for r in range(1, max_r + 1):
        for parts in combinations_with_replacement(range(1, max_part + 1), r):
            for n in range(sum(parts), max_n + 1):
                specs.append(ProductSpec(parts=parts, n=n))
    specs.sort(key=lambda s: (s.r, s.parts, s.n))
    return specs


@pytest.fixture(scope="session")
def standard_specs() -> list[ProductSpec]:
    return sweep_specs()
