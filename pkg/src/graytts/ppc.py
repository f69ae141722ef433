"""Partial parallel classes and the attach-schedule planner.

Contains the proven lower bound on the size of a maximum partial parallel
class in any TTS, a constructive finder that realises it by the block
exchange from the bound's proof, an exact parallel-class search, and the
planner that turns a TTS(v) plus its cycle certificate into the parallel
class of the intermediate TTS(2v+1) used by the order-doubling construction
(v = 1 or 4 mod 6).

Flattened coordinates: input design points keep their labels 0..v-1, the
auxiliary vertex set maps w to v+w (infinity = v, so it lands on 2v).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .decomp import HamDecomposition, cycle_edges, decompose_for_2v2
from .design import Certificate, Triple, TripleSystem


def ppc_lower_bound(v: int) -> int:
    """Guaranteed number of pairwise disjoint blocks in any TTS(v).

    min of ceil((v-1)/4) and the smallest integer strictly greater than
    (2v+3-sqrt(16v+9))/6 (that branch of the proof ends in a strict
    inequality, which matters when 16v+9 is a perfect square, e.g. v=7),
    sharpened to (v+8)/6 and (v+5)/6 on the two residue classes the
    doubling construction needs.
    """
    if v < 4 or v % 3 not in (0, 1):
        raise ValueError(f"v={v} is not an admissible TTS order >= 4")
    b1 = (v - 1 + 3) // 4
    s2 = 16 * v + 9
    r = math.isqrt(s2)
    num = 2 * v + 3
    if r * r == s2:
        b2 = (num - r) // 6 + 1
    else:
        b2 = (num - r) // 6  # sqrt irrational; adjust upward to the true ceiling
        while 6 * b2 < num and (num - 6 * b2) ** 2 > s2:
            b2 += 1
    bound = min(b1, b2)
    if v % 6 == 4 and v >= 16:
        bound = max(bound, (v + 8) // 6)
    if v % 6 == 1 and v >= 7:
        bound = max(bound, (v + 5) // 6)
    return bound


def _greedy_extend(blocks, chosen: list[int], covered: set[int]) -> None:
    for idx, b in enumerate(blocks):
        if idx in chosen:
            continue
        if covered.isdisjoint(b):
            chosen.append(idx)
            covered.update(b)


def find_ppc(ts: TripleSystem, target: int) -> tuple[int, ...]:
    """Indices of >= target pairwise disjoint blocks.

    Greedy maximal class, then repeated exchange: drop one class block B and
    add two blocks that each spend one point of B and two uncovered points.
    The counting behind ppc_lower_bound guarantees an exchange exists while
    the class is smaller than the bound.
    """
    if target < 0 or target > ts.v // 3:
        raise ValueError(f"target {target} exceeds the trivial cap v/3 = {ts.v // 3}")
    blocks = ts.blocks
    chosen: list[int] = []
    covered: set[int] = set()
    _greedy_extend(blocks, chosen, covered)
    while len(chosen) < target:
        uncovered = set(range(ts.v)) - covered
        # pairs of uncovered points reachable by spending one covered point
        spend: dict[int, list[tuple[frozenset, int]]] = {}
        for idx, b in enumerate(blocks):
            if idx in chosen:
                continue
            outside = [p for p in b if p in uncovered]
            if len(outside) == 2:
                x = next(p for p in b if p not in uncovered)
                spend.setdefault(x, []).append((frozenset(outside), idx))
        done = False
        for ci, bi in enumerate(chosen):
            pts = [p for p in blocks[bi] if spend.get(p)]
            for x, y in permutations(pts, 2):
                for d1, i1 in spend[y]:
                    for d2, i2 in spend[x]:
                        if d1.isdisjoint(d2):
                            del chosen[ci]
                            covered.difference_update(blocks[bi])
                            chosen.extend((i1, i2))
                            covered.update(blocks[i1])
                            covered.update(blocks[i2])
                            done = True
                            break
                    if done:
                        break
                if done:
                    break
            if done:
                break
        if not done:
            raise RuntimeError(
                f"no augmenting exchange at size {len(chosen)} < {target}; "
                "the bound proof guarantees one, so the input is not a valid TTS")
        _greedy_extend(blocks, chosen, covered)
    return tuple(sorted(chosen))


def find_parallel_class(ts: TripleSystem, max_nodes: int = 2_000_000):
    """Exact-cover backtracking for a class partitioning all points, or None
    on budget exhaustion (a None return with remaining budget is definitive)."""
    if ts.v % 3:
        raise ValueError(f"a parallel class needs 3 | v, got v={ts.v}")
    by_point: dict[int, list[int]] = {p: [] for p in range(ts.v)}
    for idx, b in enumerate(ts.blocks):
        for p in b:
            by_point[p].append(idx)
    covered = [False] * ts.v
    chosen: list[int] = []
    nodes = 0

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            return False
        pivot, pool = -1, None
        for p in range(ts.v):
            if covered[p]:
                continue
            usable = [i for i in by_point[p]
                      if not any(covered[q] for q in ts.blocks[i])]
            if pool is None or len(usable) < len(pool):
                pivot, pool = p, usable
                if not usable:
                    return False
        if pivot == -1:
            return True
        for i in pool:
            for q in ts.blocks[i]:
                covered[q] = True
            chosen.append(i)
            if rec():
                return True
            chosen.pop()
            for q in ts.blocks[i]:
                covered[q] = False
        return False

    if rec():
        return tuple(sorted(chosen))
    return None


@dataclass
class AttachPlan:
    """Everything the 2v+2 step needs from the parallel-class bookkeeping."""

    v: int
    special_triple: Triple          # T, in input-design points
    roles: dict[str, int]           # role letter -> point of T
    assignment: dict[int, int]      # design point -> Hamilton cycle index
    pi: list[Triple]                # parallel class of the TTS(2v+1), flattened
    pi0: list[Triple]               # the input-design PPC the plan grew from
    used_fallback: bool = False


class ScheduleError(RuntimeError):
    pass


def _schedule_6k4(v: int, k: int) -> dict[int, tuple[int, int]]:
    """Partition edges, one per reserved-side cycle, for v = 6k+4."""
    inf = v
    edges: dict[int, tuple[int, int]] = {}

    def put(cycle, a, b):
        # finite vertices are reduced mod v; pass b=None for the infinity vertex
        cycle %= v
        a %= v
        b = inf if b is None else b % v
        if cycle in edges:
            raise ScheduleError(f"cycle {cycle} scheduled twice")
        edges[cycle] = (min(a, b), max(a, b))

    for j in range(2 * k - 1):
        put(2 * (k - 2) + j, k + 1 + 2 * j, v + k - 6 - j)
    put(4 * k - 5, 5 * k - 1, None)
    put(4 * k - 4, 3 * k - 2, k - 3)
    put(4 * k - 3, 3 * k, k - 4)
    put(4 * k - 2, 3 * k + 2, k - 5)
    if k % 2 == 0:
        for l in range((k - 2) // 2):
            put(5 * k + 4 * l + 4, k + 2 * l + 2, 4 * k + 2 * l + 2)
            put(5 * k + 4 * l + 5, 3 * k + 2 * l + 4, 2 * k + 2 * l)
    else:
        for l in range((k - 3) // 2):
            put(5 * k + 4 * l + 3, k + 2 * l + 2, 4 * k + 2 * l + 1)
            put(5 * k + 4 * l + 4, 3 * k + 2 * l + 4, 2 * k + 2 * l - 1)
        put(2 * k - 10, 3 * k - 4, 5 * k - 2)
    return edges


def _pair_runs(limit: int):
    """0,1,4,5,8,9,... while the second entry stays <= limit."""
    out = []
    m = 0
    while 4 * m + 1 <= limit:
        out.extend((4 * m, 4 * m + 1))
        m += 1
    return out


def _l_set_6k1(v: int, k: int) -> list[int]:
    if k % 4 == 1:
        l = _pair_runs((v - 5) // 2)
        l.append((v + 1) // 2)
        x = (v + 7) // 2
        while x + 1 <= v - 3:
            l.extend((x, x + 1))
            x += 4
        l.append(v - 1)
    else:
        l = _pair_runs((v - 9) // 2)
        l.extend(((v - 5) // 2, (v + 1) // 2, (v + 7) // 2))
        x = (v + 11) // 2
        while x + 1 <= v - 3:
            l.extend((x, x + 1))
            x += 4
        l.append(v - 1)
    return sorted(set(l))


def _schedule_6k1(v: int, k: int) -> dict[int, tuple[int, int]]:
    inf = v
    edges: dict[int, tuple[int, int]] = {}
    if k % 2 == 0:
        for i in range((v + 5) // 2, v + 2):
            a, b = (3 + i) % v, (v - 3 + i) % v
            edges[i % v] = (min(a, b), max(a, b))
        edges[4] = (5, inf)
        return edges
    l = _l_set_6k1(v, k)
    if len(l) != (v + 1) // 2 or l[-1] != v - 1:
        raise ScheduleError(f"L pattern for v={v} came out malformed: {l}")
    for i in range((v - 3) // 4 + 1):
        a, b = ((v - 1) // 2 + 2 * i) % v, ((v + 1) // 2 + 2 * i) % v
        edges[l[i]] = (min(a, b), max(a, b))
    for i in range((v + 1) // 4, (v - 3) // 2 + 1):
        a = (1 + 2 * (i - (v + 1) // 4)) % v
        b = (2 + 2 * (i - (v + 1) // 4)) % v
        edges[l[i]] = (min(a, b), max(a, b))
    edges[l[(v - 1) // 2]] = (0, inf)
    return edges


def _mandated(v: int) -> dict[str, tuple[int, tuple[int, int]]]:
    """role -> (reserved cycle index, edge that must sit on that cycle)."""
    if v % 6 == 4:
        k = (v - 4) // 6
        return {
            "p": (2 * k - 3, (k - 2, k - 1)),
            "q": (2 * k - 2, (k - 2, k)),
            "r": (2 * k - 1, (k - 1, k)),
        }
    return {
        "p": (0, (3, v - 1)),
        "q": (1, (1, 3)),
        "r": (v - 1, (1, v - 1)),
    }


def _check_schedule(v: int, dec: HamDecomposition, edges: dict[int, tuple[int, int]],
                    excluded_vertices: set[int]) -> None:
    universe = set(range(v + 1)) - excluded_vertices
    seen: set[int] = set()
    cycle_sets = dec.edge_sets()
    for cycle, e in edges.items():
        if e not in cycle_sets[cycle]:
            raise ScheduleError(f"edge {e} not on cycle {cycle}")
        if e[0] in seen or e[1] in seen or e[0] in excluded_vertices or e[1] in excluded_vertices:
            raise ScheduleError(f"edge {e} collides in the vertex partition")
        seen.update(e)
    if seen != universe:
        raise ScheduleError("scheduled edges do not partition the vertex set")
    for role, (cycle, mandated) in _mandated(v).items():
        m = (min(mandated), max(mandated))
        if m not in cycle_sets[cycle]:
            raise ScheduleError(f"mandated edge {m} missing from cycle {cycle}")
        if cycle not in edges:
            raise ScheduleError(f"reserved cycle {cycle} got no partition edge")
        if edges[cycle] == m:
            raise ScheduleError(f"partition edge on cycle {cycle} equals the mandated edge")


def _fallback_schedule(v: int, dec: HamDecomposition,
                       excluded_vertices: set[int]) -> dict[int, tuple[int, int]]:
    """Exact-cover search replacing a degenerate literal schedule: pick at
    most one edge per cycle (exactly one per reserved cycle, avoiding its
    mandated edge) so the picked edges partition the remaining vertices."""
    cycle_sets = dec.edge_sets()
    reserved = {cycle: (min(e), max(e)) for _, (cycle, e) in _mandated(v).items()}
    universe = set(range(v + 1)) - excluded_vertices
    by_vertex: dict[int, list[tuple[int, tuple[int, int]]]] = {u: [] for u in universe}
    for cycle, es in enumerate(cycle_sets):
        for e in es:
            if e[0] not in universe or e[1] not in universe:
                continue
            if cycle in reserved and e == reserved[cycle]:
                continue
            by_vertex[e[0]].append((cycle, e))
            by_vertex[e[1]].append((cycle, e))

    chosen: dict[int, tuple[int, int]] = {}
    covered: set[int] = set()

    def usable(cycle, e):
        return cycle not in chosen and e[0] not in covered and e[1] not in covered

    def rec() -> bool:
        # reserved cycles must all contribute; branch on them first
        for cycle in reserved:
            if cycle not in chosen:
                for e in sorted(cycle_sets[cycle]):
                    if e == reserved[cycle] or not usable(cycle, e):
                        continue
                    if e[0] not in universe or e[1] not in universe:
                        continue
                    chosen[cycle] = e
                    covered.update(e)
                    if rec():
                        return True
                    del chosen[cycle]
                    covered.difference_update(e)
                return False
        left = universe - covered
        if not left:
            return True
        pivot = min(left, key=lambda u: sum(1 for c, e in by_vertex[u] if usable(c, e)))
        for cycle, e in by_vertex[pivot]:
            if not usable(cycle, e):
                continue
            chosen[cycle] = e
            covered.update(e)
            if rec():
                return True
            del chosen[cycle]
            covered.difference_update(e)
        return False

    if not rec():
        raise ScheduleError(f"no attach schedule exists for v={v}")
    return chosen


def plan_attach(ts: TripleSystem, cert: Certificate) -> AttachPlan:
    """Build the complete attach plan for the 2v+2 step.

    Picks the PPC, fixes the special triple T and its p/q/r roles from the
    certificate, assigns every design point to a distinct Hamilton cycle of
    the 2K_{v+1} decomposition (reserved roles on the mandated cycles), and
    emits the resulting parallel class of the intermediate TTS(2v+1).
    """
    v = ts.v
    if v % 6 == 4:
        if v < 16:
            raise ValueError(f"v = 6k+4 needs k >= 2, got {v}")
        k = (v - 4) // 6
        target = (v + 8) // 6
        excluded = {k - 2, k - 1, k}
    elif v % 6 == 1:
        if v < 7:
            raise ValueError(f"v = 6k+1 needs k >= 1, got {v}")
        k = (v - 1) // 6
        target = (v + 5) // 6
        excluded = set()
    else:
        raise ValueError(f"plan_attach needs v = 1 or 4 (mod 6), got {v}")

    ppc_idx = find_ppc(ts, target)
    pi0 = sorted(ts.blocks[i] for i in ppc_idx)[:target]
    special = pi0[0]

    # roles from the certificate neighbours of T
    pos = list(cert).index(ts.blocks.index(special))
    n = len(cert)
    first = ts.blocks[cert[(pos + 1) % n]]
    last = ts.blocks[cert[(pos - 1) % n]]
    pair_first = set(special) & set(first)
    pair_last = set(special) & set(last)
    shared = (pair_first & pair_last).pop()
    first_other = (pair_first - {shared}).pop()
    last_other = (pair_last - {shared}).pop()
    if v % 6 == 4:
        roles = {"q": shared, "r": first_other, "p": last_other}
    else:
        roles = {"p": shared, "r": first_other, "q": last_other}

    dec = decompose_for_2v2(v)
    try:
        edges = _schedule_6k4(v, k) if v % 6 == 4 else _schedule_6k1(v, k)
        _check_schedule(v, dec, edges, excluded)
        used_fallback = False
    except ScheduleError:
        edges = _fallback_schedule(v, dec, excluded)
        _check_schedule(v, dec, edges, excluded)
        used_fallback = True

    special_cycles = sorted(edges)
    allowed = sorted(set(range(v)) - set(special_cycles))
    a_points = sorted(set(p for b in pi0 for p in b) - set(special))
    if len(a_points) != len(allowed):
        raise ScheduleError(
            f"schedule size mismatch: {len(a_points)} attachable points vs "
            f"{len(allowed)} free cycles")
    assignment = dict(zip(a_points, allowed))
    reserved_cycle = {role: cyc for role, (cyc, _) in _mandated(v).items()}
    for role, pt in roles.items():
        assignment[pt] = reserved_cycle[role]
    rest_points = sorted(set(range(v)) - set(assignment))
    rest_cycles = sorted(set(special_cycles) - set(reserved_cycle.values()))
    assignment.update(zip(rest_points, rest_cycles))
    if sorted(assignment.values()) != list(range(v)):
        raise ScheduleError("attach assignment is not a bijection onto the cycles")

    point_of_cycle = {c: p for p, c in assignment.items()}
    pi: list[Triple] = list(pi0[1:])
    if v % 6 == 4:
        pi.append((v + k - 2, v + k - 1, v + k))
    for cyc, (a, b) in edges.items():
        pi.append(tuple(sorted((point_of_cycle[cyc], v + a, v + b))))
    flat = sorted(p for t in pi for p in t)
    if flat != list(range(2 * v + 1)):
        raise ScheduleError("planned class does not partition the 2v+1 points")
    return AttachPlan(v=v, special_triple=special, roles=roles,
                      assignment=assignment, pi=sorted(pi), pi0=pi0,
                      used_fallback=used_fallback)
