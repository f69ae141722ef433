"""Order-doubling constructions: v -> 2v+1 and v -> 2v+2.

Both start from a TTS(v) with a cycle certificate, overlay a Hamilton cycle
decomposition of 2K_{v+1} (each design point adopts the edges of one cycle
as new triples), splice everything into one long cycle, and patch a handful
of triples around one special block of the input so the pair balance works
out.  The 2v+2 variant additionally blows up a parallel class of the
intermediate TTS(2v+1) with a fresh point.

Point flattening: input points keep their labels, the decomposition vertex
w becomes v+w (so infinity, stored as w=v, lands on 2v), and the 2v+2 blow-up
point is 2v+1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomp import cycle_edges, decompose, decompose_for_2v2
from .design import (
    Certificate,
    Triple,
    TripleSystem,
    make_triple,
    normalize_certificate,
    relabel_points,
    validate_tts,
    verify_certificate,
)
from .ppc import AttachPlan, plan_attach


class ConstructionError(RuntimeError):
    """A verified invariant of a construction failed; indicates a bug."""


def _shares_two(x, y) -> bool:
    return len(set(x) & set(y)) == 2


def hub_preference(v: int) -> list[int]:
    """Hub vertices to try when splicing, best guess first: the proofs run
    their walks through vertex 0 when v is odd and through v/2 when v is
    even; any other vertex whose incident edges form a single ring would
    do combinatorially, but may break the fixed stitching patterns."""
    first = 0 if v % 2 else v // 2
    return [first] + [h for h in range(v + 1) if h != first]


def threaded_overlay_cycle(v: int, cycles, attach: dict[int, int], hub: int) -> list[Triple]:
    """Hamilton cycle through all overlay triples {point, v+a, v+b}.

    Each decomposition cycle contributes its edges joined with its attached
    point; those triples form a closed chain per cycle, and chains are
    spliced at the hub vertex, all of whose incident edges act as junctions.
    Returns the flattened triples in cycle order.
    """
    point_of = {}
    for p, c in attach.items():
        point_of[c] = p
    if sorted(point_of) != list(range(v)):
        raise ConstructionError("attach map must cover every cycle exactly once")

    edge_lists = [cycle_edges(c) for c in cycles]
    order, junctions = _hub_thread(v, cycles, hub)

    out: list[Triple] = []
    for i, s in enumerate(order):
        entry = junctions[i - 1]
        exit_ = junctions[i]
        es = edge_lists[s]
        a = es.index(entry)
        b = es.index(exit_)
        m = len(es)
        if (a + 1) % m == b:
            walk = [es[(a - j) % m] for j in range(m)]
        elif (b + 1) % m == a:
            walk = [es[(a + j) % m] for j in range(m)]
        else:
            raise ConstructionError("junction edges are not consecutive on the cycle")
        pt = point_of[s]
        out.extend(tuple(sorted((pt, v + x, v + y))) for x, y in walk)

    for i in range(len(out)):
        if not _shares_two(out[i], out[(i + 1) % len(out)]):
            raise ConstructionError("threaded overlay is not a valid cycle")
    return out


def _hub_thread(v, cycles, hub):
    """Splice the cycles into one ring at the given hub vertex; returns the
    cycle visiting order and the exit-junction edge per visited cycle."""
    hub_edges = []
    for cyc in cycles:
        i = cyc.index(hub)
        m = len(cyc)
        e1 = tuple(sorted((hub, cyc[i - 1])))
        e2 = tuple(sorted((hub, cyc[(i + 1) % m])))
        hub_edges.append((e1, e2))
    partner: dict[tuple, list[int]] = {}
    for s, (e1, e2) in enumerate(hub_edges):
        partner.setdefault(e1, []).append(s)
        partner.setdefault(e2, []).append(s)
    if any(len(ss) != 2 for ss in partner.values()):
        raise ConstructionError(f"hub {hub}: some incident edge is not on two cycles")
    order = [0]
    seen = {0}
    junctions = [min(hub_edges[0])]
    while len(order) < v:
        s = order[-1]
        enter = junctions[-1]
        exit_ = hub_edges[s][1] if hub_edges[s][0] == enter else hub_edges[s][0]
        a, b = partner[exit_]
        nxt = b if a == s else a
        if nxt in seen:
            raise ConstructionError(f"hub {hub} does not yield a single ring")
        order.append(nxt)
        seen.add(nxt)
        junctions.append(exit_)
    s = order[-1]
    enter = junctions[-1]
    exit_ = hub_edges[s][1] if hub_edges[s][0] == enter else hub_edges[s][0]
    if exit_ != junctions[0]:
        raise ConstructionError(f"hub {hub} ring does not close")
    return order, junctions[1:] + [junctions[0]]


def split_cycle(seq: list[Triple], removed) -> list[list[Triple]]:
    """Cut a cyclic block sequence at each removed block; removed blocks must
    be pairwise non-adjacent in the sequence."""
    removed = set(removed)
    n = len(seq)
    marks = [i for i, b in enumerate(seq) if b in removed]
    if len(marks) != len(removed):
        raise ConstructionError("some block to remove is absent from the cycle")
    paths = []
    for j, m in enumerate(marks):
        stop = marks[(j + 1) % len(marks)]
        seg = []
        i = (m + 1) % n
        while i != stop:
            seg.append(seq[i])
            i = (i + 1) % n
        if not seg:
            raise ConstructionError("two removed blocks are adjacent on the cycle")
        paths.append(seg)
    return paths


def assemble_cycle(pattern, pool: list[list[Triple]]) -> list[Triple]:
    """Realize a stitching pattern as one cyclic block sequence.

    pattern items: ("block", triple) for fixed single blocks, ("path", None)
    for a slot to be filled from pool, ("path_fixed", blocks) for a pinned
    segment (tried in both orientations).  Matching requires consecutive
    blocks to share two points; a small backtracking search resolves slot
    assignment and orientations, and the closed result is re-verified.
    """
    slots = [i for i, (kind, _) in enumerate(pattern) if kind == "path"]
    if len(slots) != len(pool):
        raise ConstructionError("pattern slot count differs from pool size")

    def orientations(path):
        return [path, path[::-1]] if len(path) > 1 else [path]

    used = [False] * len(pool)
    seq: list[list[Triple]] = [None] * len(pattern)

    def fits(prev_piece, piece):
        return _shares_two(prev_piece[-1], piece[0])

    def rec(i) -> bool:
        if i == len(pattern):
            return _shares_two(seq[-1][-1], seq[0][0])
        kind, payload = pattern[i]
        if kind == "path":
            cands = [(j, o) for j, p in enumerate(pool) if not used[j]
                     for o in orientations(p)]
        elif kind == "path_fixed":
            cands = [(None, o) for o in orientations(payload)]
        else:
            cands = [(None, [payload])]
        for j, piece in cands:
            if i > 0 and not fits(seq[i - 1], piece):
                continue
            if j is not None:
                used[j] = True
            seq[i] = piece
            if rec(i + 1):
                return True
            seq[i] = None
            if j is not None:
                used[j] = False
        return False

    if not rec(0):
        raise ConstructionError("stitching pattern cannot be realized")
    flat = [b for piece in seq for b in piece]
    for i in range(len(flat)):
        if not _shares_two(flat[i], flat[(i + 1) % len(flat)]):
            raise ConstructionError("assembled sequence is not a cycle")
    return flat


def blow_up_cycle(seq: list[Triple], pi, z: int) -> list[Triple]:
    """Replace every parallel-class block on the cycle by its three z-joined
    triples, ordered to keep consecutive intersections at two points."""
    members = set(pi)
    n = len(seq)
    out: list[Triple] = []
    for i, blk in enumerate(seq):
        if blk not in members:
            out.append(blk)
            continue
        prev_b = seq[(i - 1) % n]
        next_b = seq[(i + 1) % n]
        if prev_b in members or next_b in members:
            raise ConstructionError("adjacent parallel-class blocks on the cycle")
        pin = set(blk) & set(prev_b)
        pout = set(blk) & set(next_b)
        if len(pin) != 2 or len(pout) != 2 or pin == pout:
            raise ConstructionError("blow-up needs two distinct anchor pairs")
        # middle triple carries the block's third pair
        a = (pin & pout).pop()
        x = (pin - {a}).pop()
        y = (pout - {a}).pop()
        out.append(make_triple((*sorted(pin), z)))
        out.append(make_triple((x, y, z)))
        out.append(make_triple((*sorted(pout), z)))
    return out


def _thread_and_stitch(v, cycles, attach, excluded, pattern):
    """Run threading, splitting and assembly, retrying over hub choices."""
    last = None
    for hub in hub_preference(v):
        try:
            overlay = threaded_overlay_cycle(v, cycles, attach, hub)
            overlay_set = set(overlay)
            for e in excluded:
                if e not in overlay_set:
                    raise ConstructionError(f"excluded triple {e} missing from overlay")
            paths = split_cycle(overlay, excluded)
            return overlay, assemble_cycle(pattern, paths)
        except ConstructionError as err:
            last = err
    raise ConstructionError(f"threading failed for every hub: {last}")


def _role_permutation(ts: TripleSystem, cert: Certificate, shared_to: int,
                      first_to: int, last_to: int) -> tuple[TripleSystem, Triple]:
    """Relabel so the certificate's first block becomes the construction's
    special triple, roles keyed by which pairs its cycle neighbours share."""
    special = ts.blocks[cert[0]]
    first = ts.blocks[cert[1]]
    last = ts.blocks[cert[-1]]
    pair_first = set(special) & set(first)
    pair_last = set(special) & set(last)
    shared = (pair_first & pair_last).pop()
    perm = {
        shared: shared_to,
        (pair_first - {shared}).pop(): first_to,
        (pair_last - {shared}).pop(): last_to,
    }
    rest = sorted(set(range(ts.v)) - set(perm))
    free = sorted(set(range(ts.v)) - set(perm.values()))
    perm.update(zip(rest, free))
    return relabel_points(ts, perm), tuple(sorted(perm[p] for p in special))


@dataclass
class DoublingCensus:
    type1: int
    type2: int
    type3: int
    type4: int

    def total(self) -> int:
        return self.type1 + self.type2 + self.type3 + self.type4


def construct_2v1_detailed(ts: TripleSystem, cert: Certificate):
    """TTS(2v+1) with certificate, plus the triple-type census."""
    v = ts.v
    if v % 2 and v < 7:
        raise ValueError(f"odd input order must be >= 7, got {v}")
    if v % 2 == 0 and v < 4:
        raise ValueError(f"even input order must be >= 4, got {v}")
    if v % 3 not in (0, 1):
        raise ValueError(f"{v} is not an admissible TTS order")
    if not verify_certificate(ts, cert):
        raise ValueError("input certificate does not verify")
    cert = normalize_certificate(cert)

    if v % 2:
        work, special = _role_permutation(ts, cert, shared_to=4, first_to=3, last_to=5)
        excluded = [make_triple((3, v + 2, v + 4)),
                    make_triple((4, v + 2, v + 6)),
                    make_triple((5, v + 4, v + 6))]
        connectors = [make_triple((4, 5, v + 6)),      # {6, n4, n5}
                      make_triple((v + 2, v + 4, v + 6)),
                      make_triple((3, 5, v + 4)),      # {4, n3, n5}
                      make_triple((3, 4, v + 2))]      # {2, n3, n4}
    else:
        h = v // 2 + 1
        work, special = _role_permutation(ts, cert, shared_to=h, first_to=0, last_to=1)
        excluded = [make_triple((0, v + 0, v + 1)),
                    make_triple((1, v + 1, v + 2)),
                    make_triple((h, v + 0, v + 2))]
        connectors = [make_triple((1, h, v + 2)),      # {2, n_h, n_1}
                      make_triple((0, 1, v + 1)),      # {1, n_0, n_1}
                      make_triple((v + 0, v + 1, v + 2)),
                      make_triple((0, h, v + 0))]      # {0, n_0, n_h}

    dec = decompose(v + 1)
    type1 = [work.blocks[i] for i in cert[1:]]
    pattern = [("path_fixed", type1),
               ("block", connectors[0]), ("path", None),
               ("block", connectors[1]), ("path", None),
               ("block", connectors[2]), ("path", None),
               ("block", connectors[3])]
    overlay, stitched = _thread_and_stitch(
        v, dec.cycles, {p: p for p in range(v)}, excluded, pattern)

    excl = set(excluded)
    type2 = [b for b in overlay if b not in excl]
    census = DoublingCensus(len(type1), len(type2), 3, 1)
    out = TripleSystem(2 * v + 1, type1 + type2 + connectors)
    index = {b: i for i, b in enumerate(out.blocks)}
    if len(index) != len(out.blocks):
        raise ConstructionError("duplicate blocks in 2v+1 output")
    new_cert = normalize_certificate(tuple(index[b] for b in stitched))

    report = validate_tts(out)
    if not (report.is_tts and report.is_simple and verify_certificate(out, new_cert)):
        raise ConstructionError("2v+1 output failed verification")
    return out, new_cert, census


def construct_2v1(ts: TripleSystem, cert: Certificate) -> tuple[TripleSystem, Certificate]:
    out, new_cert, _ = construct_2v1_detailed(ts, cert)
    return out, new_cert


def construct_2v2(ts: TripleSystem, cert: Certificate) -> tuple[TripleSystem, Certificate]:
    """TTS(2v+2) with certificate, for v = 1 or 4 (mod 6)."""
    v = ts.v
    if not verify_certificate(ts, cert):
        raise ValueError("input certificate does not verify")
    cert = normalize_certificate(cert)
    plan = plan_attach(ts, cert)
    k = (v - 4) // 6 if v % 6 == 4 else (v - 1) // 6
    z = 2 * v + 1
    p, q, r = plan.roles["p"], plan.roles["q"], plan.roles["r"]

    if v % 6 == 4:
        excluded = [make_triple((p, v + k - 2, v + k - 1)),
                    make_triple((q, v + k - 2, v + k)),
                    make_triple((r, v + k - 1, v + k))]
        step3 = [make_triple((p, q, v + k - 2)),
                 make_triple((p, r, v + k - 1)),
                 make_triple((q, r, v + k)),
                 make_triple((v + k - 2, v + k - 1, v + k))]
    else:
        excluded = [make_triple((p, 2 * v - 1, v + 3)),
                    make_triple((q, v + 1, v + 3)),
                    make_triple((r, v + 1, 2 * v - 1))]
        step3 = [make_triple((q, r, v + 1)),
                 make_triple((p, q, v + 3)),
                 make_triple((p, r, 2 * v - 1)),
                 make_triple((v + 1, v + 3, 2 * v - 1))]

    dec = decompose_for_2v2(v)
    special_idx = ts.blocks.index(plan.special_triple)
    pos = list(cert).index(special_idx)
    p_input = [ts.blocks[cert[(pos + j) % len(cert)]] for j in range(1, len(cert))]

    if v % 6 == 4:
        zq = [make_triple((v + k - 2, v + k, z)),
              make_triple((v + k - 1, v + k, z)),
              make_triple((v + k - 2, v + k - 1, z))]
        pattern = [("path_fixed", p_input),
                   ("block", step3[0]), ("path", None),
                   ("block", zq[0]), ("block", zq[1]), ("block", zq[2]),
                   ("path", None),
                   ("block", step3[1]), ("path", None),
                   ("block", step3[2])]
    else:
        pattern = [("path_fixed", p_input),
                   ("block", step3[1]), ("path", None),
                   ("block", step3[0]), ("path", None),
                   ("block", step3[3]), ("path", None),
                   ("block", step3[2])]
    overlay, stitched = _thread_and_stitch(
        v, dec.cycles, plan.assignment, excluded, pattern)
    final_seq = blow_up_cycle(stitched, plan.pi, z)

    pi_set = set(plan.pi)
    type1 = [b for i, b in enumerate(ts.blocks) if i != special_idx and b not in pi_set]
    type2 = [b for b in overlay if b not in set(excluded) and b not in pi_set]
    keep3 = [b for b in step3 if b not in pi_set]
    zblocks = [t for blk in plan.pi
               for t in (make_triple((blk[0], blk[1], z)),
                         make_triple((blk[0], blk[2], z)),
                         make_triple((blk[1], blk[2], z)))]
    out = TripleSystem(2 * v + 2, type1 + type2 + keep3 + zblocks)
    index = {b: i for i, b in enumerate(out.blocks)}
    if len(index) != len(out.blocks):
        raise ConstructionError("duplicate blocks in 2v+2 output")
    new_cert = normalize_certificate(tuple(index[b] for b in final_seq))

    report = validate_tts(out)
    if not (report.is_tts and report.is_simple and verify_certificate(out, new_cert)):
        raise ConstructionError("2v+2 output failed verification")
    return out, new_cert
