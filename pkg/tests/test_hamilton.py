from __future__ import annotations

import pytest

from graytts.basedesigns import base_design
from graytts.design import normalize_certificate, validate_tts, verify_certificate
from graytts.graphs import build_ibig
from graytts.hamilton import (
    SearchBudget,
    SearchExhausted,
    count_cycles_through_edge,
    find_alternate_cycle,
    find_hamilton_cycle,
    find_hamilton_path,
    hill_climb_tts,
)


def edges_of(adj):
    return [(u, w) for u, ns in enumerate(adj) for w in ns if u < w]


def test_k4_has_cycle(k4):
    res = find_hamilton_cycle(k4)
    assert res.definitive
    assert res.cycle is not None and len(res.cycle) == 4


def test_petersen_proven_non_hamiltonian(petersen):
    res = find_hamilton_cycle(petersen)
    assert res.cycle is None
    assert res.definitive


def test_petersen_has_hamilton_path(petersen):
    res = find_hamilton_path(petersen)
    assert res.cycle is not None
    path = res.cycle
    assert sorted(path) == list(range(10))
    for a, b in zip(path, path[1:]):
        assert b in petersen[a]


def test_budget_cutoff_is_not_definitive(mobius_kantor):
    res = find_hamilton_cycle(mobius_kantor, SearchBudget(max_nodes=1))
    assert res.cycle is None and not res.definitive


def test_tts18_2big_search_finds_cycle():
    ts, _ = base_design(18)
    big = build_ibig(ts, 2)
    res = find_hamilton_cycle(big)
    assert res.cycle is not None
    assert verify_certificate(ts, res.cycle)


def test_count_through_edge_k4(k4):
    for e in edges_of(k4):
        assert count_cycles_through_edge(k4, e) == 2


def test_count_through_edge_petersen(petersen):
    assert count_cycles_through_edge(petersen, (0, 1)) == 0


def test_count_through_edge_k33(k33):
    # K_{3,3} has six Hamilton cycles of six edges each over nine edges,
    # so every edge lies on exactly four (an even number, as parity demands).
    for e in edges_of(k33):
        assert count_cycles_through_edge(k33, e) == 4


def test_count_rejects_non_edge(k4):
    with pytest.raises(ValueError):
        count_cycles_through_edge(k4, (0, 0))


def smith_parity_holds(adj) -> bool:
    return all(count_cycles_through_edge(adj, e) % 2 == 0 for e in edges_of(adj))


def test_smith_parity_on_named_cubic_graphs(k4, k33, prism, petersen, mobius_kantor):
    for g in (k4, k33, prism, petersen, mobius_kantor):
        assert smith_parity_holds(g)


def test_alternate_cycle_on_k4(k4):
    first = (0, 1, 2, 3)
    other = find_alternate_cycle(k4, first)
    assert other != normalize_certificate(first)
    assert sorted(other) == [0, 1, 2, 3]


def test_alternate_cycle_on_tts7_big():
    ts, cert = base_design(7)
    big = build_ibig(ts, 2)
    other = find_alternate_cycle(big, cert)
    assert other != normalize_certificate(cert)
    assert verify_certificate(ts, other)


def test_alternate_cycle_differs_at_some_vertex():
    ts, cert = base_design(9)
    big = build_ibig(ts, 2)
    other = find_alternate_cycle(big, cert)
    assert verify_certificate(ts, other)

    def incident_pairs(cycle):
        n = len(cycle)
        at = {}
        for i, u in enumerate(cycle):
            at[u] = frozenset((cycle[i - 1], cycle[(i + 1) % n]))
        return at

    p1, p2 = incident_pairs(cert), incident_pairs(other)
    assert any(p1[u] != p2[u] for u in range(len(cert)))


def test_alternate_cycle_rejects_bad_input():
    with pytest.raises(ValueError):
        find_alternate_cycle([(1,), (0,)], (0, 1))  # not cubic
    ts, cert = base_design(7)
    big = build_ibig(ts, 2)
    broken = list(cert)
    broken[1], broken[7] = broken[7], broken[1]  # uses a non-edge
    with pytest.raises(ValueError):
        find_alternate_cycle(big, broken)


def test_hill_climb_tts7_is_deterministic():
    a_ts, a_cert = hill_climb_tts(7, SearchBudget(seed=11))
    b_ts, b_cert = hill_climb_tts(7, SearchBudget(seed=11))
    assert a_ts == b_ts and a_cert == b_cert
    report = validate_tts(a_ts)
    assert report.is_tts and report.is_simple
    assert verify_certificate(a_ts, a_cert)


def test_hill_climb_tts13_default_seed():
    ts, cert = hill_climb_tts(13)
    report = validate_tts(ts)
    assert report.is_tts and report.is_simple
    assert verify_certificate(ts, cert)


def test_hill_climb_tts4_finds_unique_design():
    ts, cert = hill_climb_tts(4, SearchBudget(seed=5))
    expect, _ = base_design(4)
    assert ts == expect
    assert verify_certificate(ts, cert)


def test_hill_climb_rejects_v6():
    with pytest.raises(ValueError):
        hill_climb_tts(6)


def test_hill_climb_budget_exhaustion_reported():
    with pytest.raises(SearchExhausted):
        hill_climb_tts(9, SearchBudget(max_iters=1, max_nodes=1, seed=1))
