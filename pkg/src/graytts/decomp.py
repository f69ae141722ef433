"""Hamilton cycle decompositions of the doubled complete graph 2K_t.

Vertices are Z_{t-1} together with one extra vertex; the extra vertex
("infinity") is represented by the integer t-1, so the vertex set is simply
range(t).  All arithmetic on the finite part is modulo t-1.

Two labeled families are produced:

* for even t, shifted 1-factors F_j whose consecutive unions F_s + F_{s+1}
  are the cycles;
* for odd t, explicit zig-zag vertex sequences, in two mirror variants.

The doubling constructions consume these cycles in specific index orders,
so the orderings here are part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass

Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def one_factor(t: int, j: int) -> tuple[Edge, ...]:
    """The shifted perfect matching F_j of 2K_t (t even).

    F_j pairs j with infinity and pairs i+j with -i+j for 1 <= i < t/2,
    modulo t-1.  F_k equals F_l exactly when k = l (mod t-1).
    """
    if t < 4 or t % 2:
        raise ValueError(f"one_factor needs even t >= 4, got {t}")
    m = t - 1
    inf = t - 1
    edges = [_edge(j % m, inf)]
    for i in range(1, t // 2):
        edges.append(_edge((i + j) % m, (-i + j) % m))
    return tuple(sorted(edges))


def _zigzag(t: int, j: int, mirrored: bool) -> tuple[int, ...]:
    """Vertex sequence (inf, j, 1+j, t-2+j, 2+j, t-3+j, ...) for odd t,
    or its mirror (inf, j, t-2+j, 1+j, ...)."""
    m = t - 1
    seq = [t - 1, j % m]
    lo, hi = 1, t - 2
    toggle = mirrored
    while len(seq) < t:
        if toggle:
            seq.append((hi + j) % m)
            hi -= 1
        else:
            seq.append((lo + j) % m)
            lo += 1
        toggle = not toggle
    return tuple(seq)


def cycle_edges(cycle: tuple[int, ...]) -> list[Edge]:
    """Edges of a cycle given as a vertex sequence (closing edge included)."""
    n = len(cycle)
    return [_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)]


def walk_union(t: int, fa: tuple[Edge, ...], fb: tuple[Edge, ...]) -> tuple[int, ...]:
    """Traverse the 2-regular graph fa + fb starting from infinity toward
    its fa-neighbour; the union of two suitable 1-factors is one cycle."""
    nbr_a: dict[int, int] = {}
    nbr_b: dict[int, int] = {}
    for (x, y) in fa:
        nbr_a[x], nbr_a[y] = y, x
    for (x, y) in fb:
        nbr_b[x], nbr_b[y] = y, x
    seq = [t - 1, nbr_a[t - 1]]
    use_b = True
    while len(seq) < t:
        nxt = (nbr_b if use_b else nbr_a)[seq[-1]]
        seq.append(nxt)
        use_b = not use_b
    return tuple(seq)


@dataclass
class HamDecomposition:
    """t-1 Hamilton cycles jointly covering every edge of 2K_t twice."""

    t: int
    cycles: list[tuple[int, ...]]
    variant: str

    def edge_sets(self) -> list[set[Edge]]:
        return [set(cycle_edges(c)) for c in self.cycles]


def decompose(t: int) -> HamDecomposition:
    """Hamilton cycle decomposition of 2K_t for any t >= 3."""
    if t < 3:
        raise ValueError(f"2K_t decomposes into Hamilton cycles only for t >= 3, got {t}")
    if t == 3:
        tri = (2, 0, 1)
        return HamDecomposition(3, [tri, tri], "odd_t")
    if t % 2 == 0:
        cycles = [walk_union(t, one_factor(t, s), one_factor(t, s + 1)) for s in range(t - 1)]
        return HamDecomposition(t, cycles, "even_t")
    half = (t - 1) // 2
    plain = [_zigzag(t, j, mirrored=False) for j in range(half)]
    mirror = [_zigzag(t, j, mirrored=True) for j in range(half)]
    return HamDecomposition(t, plain + mirror, "odd_t")


def decompose_for_2v2(v: int) -> HamDecomposition:
    """The 2K_{v+1} decomposition in the exact cycle order the order-doubling
    parallel-class construction consumes.

    v = 4 (mod 6): interleaved mirror/plain zig-zags H_{2i} = H'_i,
    H_{2i+1} = H''_i.  v = 1 (mod 6): unions of consecutive 1-factors.
    """
    if v % 6 == 4:
        if v < 16:
            raise ValueError(f"v = 6k+4 requires k >= 2, got v={v}")
        t = v + 1
        cycles = []
        for i in range(v // 2):
            cycles.append(_zigzag(t, i, mirrored=True))   # H'_i
            cycles.append(_zigzag(t, i, mirrored=False))  # H''_i
        return HamDecomposition(t, cycles, "v6k4")
    if v % 6 == 1:
        if v < 7:
            raise ValueError(f"v = 6k+1 requires k >= 1, got v={v}")
        t = v + 1
        cycles = [walk_union(t, one_factor(t, s), one_factor(t, s + 1)) for s in range(v)]
        return HamDecomposition(t, cycles, "v6k1")
    raise ValueError(f"decompose_for_2v2 needs v = 1 or 4 (mod 6), got v={v}")
