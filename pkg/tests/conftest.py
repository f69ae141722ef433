from __future__ import annotations

import pytest

from graytts.basedesigns import LISTED_ORDERS, base_design


def generalized_petersen(n: int, k: int) -> list[tuple[int, ...]]:
    """Adjacency list of GP(n, k): outer n-cycle, spokes, inner {i, i+k} jumps."""
    adj: list[set[int]] = [set() for _ in range(2 * n)]

    def add(u, w):
        adj[u].add(w)
        adj[w].add(u)

    for i in range(n):
        add(i, (i + 1) % n)
        add(i, n + i)
        add(n + i, n + (i + k) % n)
    return [tuple(sorted(s)) for s in adj]


@pytest.fixture(scope="session")
def petersen():
    return generalized_petersen(5, 2)


@pytest.fixture(scope="session")
def prism():
    return generalized_petersen(3, 1)


@pytest.fixture(scope="session")
def mobius_kantor():
    return generalized_petersen(8, 3)


@pytest.fixture(scope="session")
def k4():
    return [tuple(w for w in range(4) if w != u) for u in range(4)]


@pytest.fixture(scope="session")
def k33():
    left, right = (0, 1, 2), (3, 4, 5)
    return [right] * 3 + [left] * 3


@pytest.fixture(scope="session", params=LISTED_ORDERS)
def listed_base(request):
    return base_design(request.param)
