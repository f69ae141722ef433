"""Hamiltonicity algorithms on small graphs.

Four jobs: exhaustive certificate search with a definitive negative verdict,
second-cycle discovery in cubic graphs (the parity theorem guarantees one),
brute-force counting of cycles through an edge, and a hill climber that
manufactures small twofold triple systems whose 2-BIG is Hamiltonian.

Graphs are plain adjacency lists: ``adj[u]`` is an iterable of neighbours.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .design import TripleSystem, normalize_certificate, validate_tts
from .graphs import build_ibig, is_connected


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 2_000_000
    max_iters: int = 200_000
    seed: int = 0xC0FFEE

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_iters <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class SearchResult:
    """cycle is None when no Hamilton cycle was returned; definitive tells
    whether that negative is a completed exhaustive search or a budget cut."""

    cycle: tuple[int, ...] | None
    definitive: bool


class SearchExhausted(RuntimeError):
    pass


def _as_adj(graph) -> list[tuple[int, ...]]:
    # accept IntersectionGraph or a raw adjacency list
    adj = getattr(graph, "adjacency", graph)
    return [tuple(ns) for ns in adj]


def _posa_heuristic(adj, n: int, rng: random.Random, max_steps: int):
    """Randomized path growth with Posa rotations; returns a cycle or None.

    Incomplete but fast; callers fall back to exhaustive search for the
    definitive verdict when this fails.
    """
    steps = 0
    while steps < max_steps:
        start = rng.randrange(n)
        path = [start]
        on = [False] * n
        on[start] = True
        pos = [0] * n
        stale = 0
        limit = 40 * n + 100
        while steps < max_steps and stale < limit:
            steps += 1
            stale += 1
            end = path[-1]
            exts = [w for w in adj[end] if not on[w]]
            if exts:
                w = exts[rng.randrange(len(exts))]
                pos[w] = len(path)
                path.append(w)
                on[w] = True
                stale = 0
                continue
            if len(path) == n and path[0] in adj[end]:
                return tuple(path)
            if len(path) < 2:
                break
            cands = [w for w in adj[end] if w != path[-2]]
            if not cands:
                break
            w = cands[rng.randrange(len(cands))]
            i = pos[w]
            tail = path[i + 1:]
            tail.reverse()
            path[i + 1:] = tail
            for j in range(i + 1, len(path)):
                pos[path[j]] = j
    return None


def find_hamilton_cycle(graph, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Hamilton cycle search: rotation heuristic first on larger graphs, then
    exhaustive backtracking anchored at vertex 0.

    The backtracking phase prunes on stranded vertices (an unvisited vertex
    must keep at least two usable connections) and on disconnection of the
    unvisited region; when it completes within budget a None verdict is
    definitive.
    """
    adj = _as_adj(graph)
    n = len(adj)
    if n == 0:
        return SearchResult(None, True)
    if n == 1:
        return SearchResult((0,), True)
    if n == 2:
        return SearchResult(None, True)
    if any(len(ns) < 2 for ns in adj):
        return SearchResult(None, True)

    if n > 24:
        found = _posa_heuristic(adj, n, random.Random(budget.seed),
                                min(budget.max_iters, 600 * n))
        if found is not None:
            return SearchResult(found, True)

    adj_sets = [frozenset(ns) for ns in adj]
    start = 0
    path = [start]
    visited = [False] * n
    visited[start] = True
    nodes = 0
    cutoff = False

    def prune(end: int) -> bool:
        # stranded-vertex test
        for w in range(n):
            if visited[w]:
                continue
            avail = 0
            for x in adj[w]:
                if not visited[x] or x == end or x == start:
                    avail += 1
                    if avail >= 2:
                        break
            if avail < 2:
                return True
        # the unvisited region plus the path end must be connected
        stack = [end]
        seen = {end}
        remaining = n - len(path)
        found = 0
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not visited[w] and w not in seen:
                    seen.add(w)
                    found += 1
                    stack.append(w)
        return found != remaining

    def extend() -> bool:
        nonlocal nodes, cutoff
        if len(path) == n:
            return start in adj_sets[path[-1]]
        nodes += 1
        if nodes > budget.max_nodes:
            cutoff = True
            return False
        end = path[-1]
        if prune(end):
            return False
        cands = [w for w in adj[end] if not visited[w]]
        cands.sort(key=lambda w: sum(1 for x in adj[w] if not visited[x]))
        for w in cands:
            visited[w] = True
            path.append(w)
            if extend():
                return True
            path.pop()
            visited[w] = False
            if cutoff:
                return False
        return False

    if extend():
        return SearchResult(tuple(path), True)
    return SearchResult(None, not cutoff)


def find_hamilton_path(graph, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Hamilton path with free endpoints, via an apex vertex joined to all."""
    adj = _as_adj(graph)
    n = len(adj)
    if n == 0:
        return SearchResult(None, True)
    if n == 1:
        return SearchResult((0,), True)
    apex = n
    aug = [tuple(ns) + (apex,) for ns in adj] + [tuple(range(n))]
    res = find_hamilton_cycle(aug, budget)
    if res.cycle is None:
        return SearchResult(None, res.definitive)
    cyc = list(res.cycle)
    i = cyc.index(apex)
    return SearchResult(tuple(cyc[i + 1:] + cyc[:i]), True)


def count_cycles_through_edge(graph, e) -> int:
    """Exact number of Hamilton cycles containing edge e, by exhaustive
    enumeration of spanning u-w paths avoiding the edge itself."""
    adj = _as_adj(graph)
    n = len(adj)
    u, w = e
    if w not in adj[u]:
        raise ValueError(f"{e} is not an edge")
    visited = [False] * n
    visited[u] = True
    count = 0

    def walk(x: int, depth: int):
        nonlocal count
        if depth == n:
            if x == w:
                count += 1
            return
        for y in adj[x]:
            if not visited[y] and not (x == u and y == w):
                visited[y] = True
                walk(y, depth + 1)
                visited[y] = False

    walk(u, 1)
    return count


def _cycle_edge_set(cycle) -> frozenset:
    n = len(cycle)
    return frozenset(
        (cycle[i], cycle[(i + 1) % n]) if cycle[i] < cycle[(i + 1) % n]
        else (cycle[(i + 1) % n], cycle[i])
        for i in range(n)
    )


def find_alternate_cycle(graph, cycle, budget: SearchBudget = SearchBudget()) -> tuple[int, ...]:
    """A Hamilton cycle distinct from the given one in a cubic graph.

    Runs the lollipop exchange walk: fix the edge (cycle[0], cycle[1]), break
    the cycle at its other end, and pivot deterministically; in a cubic graph
    each state has one non-undoing move and the walk must terminate at a
    second cycle through the fixed edge.  Falls back to exhaustive search
    with a forbidden edge if the step budget runs out.
    """
    adj = _as_adj(graph)
    n = len(adj)
    if any(len(ns) != 3 for ns in adj):
        raise ValueError("alternate-cycle search requires a 3-regular graph")
    cycle = tuple(cycle)
    if len(cycle) != n or set(cycle) != set(range(n)):
        raise ValueError("input cycle is not a Hamilton cycle of the graph")
    original = _cycle_edge_set(cycle)
    for i in range(n):
        if cycle[(i + 1) % n] not in adj[cycle[i]]:
            raise ValueError("input cycle uses a non-edge")

    path = list(cycle)
    pos = [0] * n
    for i, vtx in enumerate(path):
        pos[vtx] = i
    removed_partner = path[0]  # re-adding (end, path[0]) would just restore the input
    steps = 0
    while steps < budget.max_iters:
        steps += 1
        end = path[-1]
        prev = path[-2]
        cand = [w for w in adj[end] if w != prev and w != removed_partner]
        if not cand:
            break
        w = cand[0]
        if w == path[0]:
            result = tuple(path)
            if _cycle_edge_set(result) != original:
                return normalize_certificate(result)
            break
        i = pos[w]
        # pivot: keep path[:i+1], reverse the tail, drop edge (w, path[i+1])
        removed_partner = w
        tail = path[i + 1:]
        tail.reverse()
        path[i + 1:] = tail
        for j in range(i + 1, n):
            pos[path[j]] = j

    # completed-search fallback: forbid one original edge at a time
    for (a, b) in sorted(original):
        res = _search_avoiding(adj, (a, b), budget)
        if res is not None and _cycle_edge_set(res) != original:
            return normalize_certificate(res)
    raise SearchExhausted("no alternate Hamilton cycle found (budget exhausted)")


def _search_avoiding(adj, edge, budget: SearchBudget):
    a, b = edge
    trimmed = [tuple(w for w in ns if not (u == a and w == b or u == b and w == a))
               for u, ns in enumerate(adj)]
    res = find_hamilton_cycle(trimmed, budget)
    return res.cycle


def hill_climb_tts(v: int, budget: SearchBudget = SearchBudget()) -> tuple[TripleSystem, tuple[int, ...]]:
    """Search for a simple TTS(v) whose 2-BIG has a Hamilton cycle.

    The climb keeps a partial block multiset and repairs pair-coverage
    conflicts; each completed simple design is handed to the cycle searcher
    and rejected (with a restart) if no certificate is found.
    """
    if v % 3 not in (0, 1) or v in (3, 6) or v < 4:
        raise ValueError(f"no simple TTS({v}) with Hamiltonian 2-BIG is possible")
    if v > 24:
        raise ValueError("hill climb is intended for base orders v <= 24")
    rng = random.Random(budget.seed)
    needed = v * (v - 1) // 3
    iters = 0
    while iters < budget.max_iters:
        iters += needed * 20
        blocks = _climb_once(v, needed, rng)
        if blocks is None:
            continue
        ts = TripleSystem(v, sorted(blocks))
        report = validate_tts(ts)
        assert report.is_tts and report.is_simple
        big = build_ibig(ts, 2)
        if not is_connected(big):
            continue
        res = find_hamilton_cycle(big, budget)
        if res.cycle is not None:
            return ts, normalize_certificate(res.cycle)
    raise SearchExhausted(f"hill climb found no TTS({v}) with Hamiltonian 2-BIG")


def _climb_once(v, needed, rng):
    """One climb to a complete simple TTS(v), or None if it stalls."""
    blocks: set[tuple[int, int, int]] = set()
    count: dict[tuple[int, int], int] = {}

    def pair(a, b):
        return (a, b) if a < b else (b, a)

    def live_pairs():
        out = []
        for a in range(v):
            for b in range(a + 1, v):
                if count.get((a, b), 0) < 2:
                    out.append((a, b))
        return out

    moves = 0
    cap = needed * 20
    while len(blocks) < needed and moves < cap:
        moves += 1
        lp = live_pairs()
        x, y = lp[rng.randrange(len(lp))]
        good, fallback = [], []
        for z in range(v):
            if z in (x, y):
                continue
            blk = tuple(sorted((x, y, z)))
            if blk in blocks:
                continue
            if count.get(pair(x, z), 0) < 2 and count.get(pair(y, z), 0) < 2:
                good.append(blk)
            else:
                fallback.append(blk)
        pool = good if good else fallback
        if not pool:
            return None
        blk = pool[rng.randrange(len(pool))]
        blocks.add(blk)
        a, b, c = blk
        for p in (pair(a, b), pair(a, c), pair(b, c)):
            count[p] = count.get(p, 0) + 1
        # repair any pair now covered three times by evicting another block
        for p in (pair(a, b), pair(a, c), pair(b, c)):
            if count[p] > 2:
                owners = [t for t in blocks if p[0] in t and p[1] in t and t != blk]
                victim = owners[rng.randrange(len(owners))]
                blocks.remove(victim)
                va, vb, vc = victim
                for q in (pair(va, vb), pair(va, vc), pair(vb, vc)):
                    count[q] -= 1
    return blocks if len(blocks) == needed else None
