"""Block-intersection graphs and the small graph checks used on them."""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .design import TripleSystem

INFINITE = float("inf")


class IntersectionGraph:
    """The i-BIG of a design: vertices are block indices, edges join blocks
    meeting in exactly i points."""

    __slots__ = ("i", "n", "adjacency")

    def __init__(self, i: int, n: int, edges):
        self.i = i
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, w in edges:
            if u == w:
                continue
            adj[u].add(w)
            adj[w].add(u)
        self.adjacency: list[tuple[int, ...]] = [tuple(sorted(s)) for s in adj]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        for u in range(self.n):
            for w in self.adjacency[u]:
                if u < w:
                    yield (u, w)

    def is_regular(self, d: int) -> bool:
        return all(len(a) == d for a in self.adjacency)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]


def build_ibig(ts: TripleSystem, i: int) -> IntersectionGraph:
    """Build the i-block-intersection graph of ts.

    i=2 and i=3 use inverted indexes and stay near-linear in the number of
    blocks; i=0 and i=1 fall back to quadratic scans (they are only needed
    on small designs).
    """
    if not 0 <= i <= 3:
        raise ValueError(f"intersection parameter i={i} outside [0, 3]")
    if not ts.blocks:
        raise ValueError("design has no blocks")
    n = len(ts.blocks)
    edges = []
    if i == 2:
        by_pair: dict[tuple[int, int], list[int]] = {}
        for idx, (a, b, c) in enumerate(ts.blocks):
            for p in ((a, b), (a, c), (b, c)):
                by_pair.setdefault(p, []).append(idx)
        for members in by_pair.values():
            for u, w in combinations(members, 2):
                if len(set(ts.blocks[u]) & set(ts.blocks[w])) == 2:
                    edges.append((u, w))
    elif i == 3:
        by_block: dict[tuple, list[int]] = {}
        for idx, blk in enumerate(ts.blocks):
            by_block.setdefault(blk, []).append(idx)
        for members in by_block.values():
            edges.extend(combinations(members, 2))
    else:
        for u, w in combinations(range(n), 2):
            if len(set(ts.blocks[u]) & set(ts.blocks[w])) == i:
                edges.append((u, w))
    return IntersectionGraph(i, n, set(edges))


def girth(g: IntersectionGraph):
    """Length of a shortest cycle, or INFINITE for forests.

    BFS from every vertex, truncated at half the best length found so far.
    """
    best = INFINITE
    adj = g.adjacency
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    # non-tree edge closes a cycle through the BFS tree
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: IntersectionGraph) -> bool:
    color: dict[int, int] = {}
    for root in range(g.n):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_connected(g: IntersectionGraph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n
