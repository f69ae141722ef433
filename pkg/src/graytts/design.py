"""Core data model: twofold triple systems and their cycle certificates.

A twofold triple system TTS(v) is a collection of 3-element blocks on the
point set {0, ..., v-1} in which every unordered pair of points occurs in
exactly two blocks.  A Hamilton certificate is a cyclic ordering of all
block indices in which consecutive blocks always share exactly two points
(a cyclic 2-intersecting Gray code for the design).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

Triple = tuple[int, int, int]
Certificate = tuple[int, ...]


def make_triple(points) -> Triple:
    """Canonical sorted form of a 3-element block."""
    a, b, c = sorted(points)
    if a == b or b == c:
        raise ValueError(f"block {points!r} has repeated points")
    return (a, b, c)


class TripleSystem:
    """An ordered list of triples on points 0..v-1.

    The list order is the block-index space that certificates refer to.
    Repeated blocks are allowed (the unique TTS(3) needs them); equality
    compares block lists as multisets.
    """

    __slots__ = ("v", "blocks")

    def __init__(self, v: int, blocks):
        self.v = int(v)
        self.blocks: list[Triple] = [make_triple(b) for b in blocks]
        for b in self.blocks:
            if b[0] < 0 or b[2] >= self.v:
                raise ValueError(f"block {b} out of range for v={self.v}")

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TripleSystem):
            return NotImplemented
        return self.v == other.v and sorted(self.blocks) == sorted(other.blocks)

    def __hash__(self):
        return hash((self.v, tuple(sorted(self.blocks))))

    def __repr__(self) -> str:
        return f"TripleSystem(v={self.v}, blocks={len(self.blocks)})"

    def expected_block_count(self) -> int:
        return self.v * (self.v - 1) // 3


@dataclass
class ValidationReport:
    """Outcome of validate_tts.

    pair_defects lists every pair whose coverage count differs from two,
    as ((a, b), count) entries; is_tts is true iff the list is empty.
    """

    is_tts: bool
    is_simple: bool
    pair_defects: list = field(default_factory=list)


def pair_counts(ts: TripleSystem) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for a, b, c in ts.blocks:
        for p in ((a, b), (a, c), (b, c)):
            counts[p] = counts.get(p, 0) + 1
    return counts


def validate_tts(ts: TripleSystem) -> ValidationReport:
    """Check the twofold balance condition and block distinctness."""
    counts = pair_counts(ts)
    defects = []
    for pair in combinations(range(ts.v), 2):
        c = counts.get(pair, 0)
        if c != 2:
            defects.append((pair, c))
    is_simple = len(set(ts.blocks)) == len(ts.blocks)
    return ValidationReport(is_tts=not defects, is_simple=is_simple, pair_defects=defects)


def intersection_size(x: Triple, y: Triple) -> int:
    return len(set(x) & set(y))


def verify_certificate(ts: TripleSystem, cert) -> bool:
    """True iff cert is a permutation of block indices and consecutive
    blocks (cyclically) intersect in exactly two points."""
    cert = tuple(cert)
    n = len(ts.blocks)
    if len(cert) != n:
        raise ValueError(f"certificate length {len(cert)} != block count {n}")
    if set(cert) != set(range(n)):
        return False
    blocks = ts.blocks
    for i in range(n):
        if intersection_size(blocks[cert[i]], blocks[cert[(i + 1) % n]]) != 2:
            return False
    return True


def normalize_certificate(cert) -> Certificate:
    """Canonical rotation/direction: start at block 0, second entry smaller.

    Normalizing any rotation or reversal of a cycle yields the same tuple.
    """
    cert = list(cert)
    if 0 not in cert:
        raise ValueError("certificate does not contain block index 0")
    i = cert.index(0)
    forward = cert[i:] + cert[:i]
    backward = [0] + forward[1:][::-1]
    if len(cert) < 2:
        return tuple(forward)
    return tuple(forward) if forward[1] <= backward[1] else tuple(backward)


def certificate_blocks(ts: TripleSystem, cert) -> list[Triple]:
    return [ts.blocks[i] for i in cert]


def certificate_from_blocks(ts: TripleSystem, ordered_blocks) -> Certificate:
    """Map a sequence of blocks back to indices in ts (blocks must be unique)."""
    index = {b: i for i, b in enumerate(ts.blocks)}
    if len(index) != len(ts.blocks):
        raise ValueError("block list has duplicates; cannot index by content")
    return tuple(index[make_triple(b)] for b in ordered_blocks)


def relabel_points(ts: TripleSystem, perm: dict[int, int]) -> TripleSystem:
    """Apply a point permutation; block list order is preserved, so any
    certificate for ts remains valid for the result."""
    if sorted(perm) != list(range(ts.v)) or sorted(perm.values()) != list(range(ts.v)):
        raise ValueError("perm is not a permutation of the point set")
    return TripleSystem(ts.v, [tuple(perm[p] for p in b) for b in ts.blocks])
