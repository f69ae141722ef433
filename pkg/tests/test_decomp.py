from __future__ import annotations

from itertools import combinations

import pytest

from graytts.decomp import cycle_edges, decompose, decompose_for_2v2, one_factor


def double_cover_holds(dec) -> bool:
    t = dec.t
    counts: dict[tuple[int, int], int] = {}
    for cyc in dec.cycles:
        for e in cycle_edges(cyc):
            counts[e] = counts.get(e, 0) + 1
    pairs = list(combinations(range(t), 2))
    return all(counts.get(p, 0) == 2 for p in pairs) and len(counts) == len(pairs)


def is_hamilton(cycle, t) -> bool:
    return len(cycle) == t and set(cycle) == set(range(t)) and all(
        cycle[i] != cycle[(i + 1) % t] for i in range(t)
    )


def test_one_factor_small_examples():
    assert one_factor(4, 0) == ((0, 3), (1, 2))
    assert one_factor(4, 3) == one_factor(4, 0)
    assert one_factor(8, 0) == ((0, 7), (1, 6), (2, 5), (3, 4))


def test_one_factor_shift_period():
    for t in (6, 10, 14):
        for k in range(2 * t - 2):
            for l in range(2 * t - 2):
                same = one_factor(t, k) == one_factor(t, l)
                assert same == (k % (t - 1) == l % (t - 1))


def test_one_factor_rejects_odd_order():
    with pytest.raises(ValueError):
        one_factor(5, 0)


def test_one_factor_is_perfect_matching():
    for t in (4, 8, 12, 20):
        for j in (0, 1, t - 2, t, 2 * t - 3):
            edges = one_factor(t, j)
            assert len(edges) == t // 2
            cover = [v for e in edges for v in e]
            assert sorted(cover) == list(range(t))


def test_decompose_t3_is_two_triangles():
    dec = decompose(3)
    assert dec.cycles == [(2, 0, 1), (2, 0, 1)]
    assert double_cover_holds(dec)


def test_decompose_t4_first_cycle():
    dec = decompose(4)
    assert len(dec.cycles) == 3
    assert dec.cycles[0] == (3, 0, 2, 1)


def test_decompose_t5_first_cycle():
    dec = decompose(5)
    assert dec.cycles[0] == (4, 0, 1, 3, 2)


@pytest.mark.parametrize("t", range(3, 26))
def test_decompose_double_cover_and_hamiltonicity(t):
    dec = decompose(t)
    assert len(dec.cycles) == t - 1
    assert all(is_hamilton(c, t) for c in dec.cycles)
    assert double_cover_holds(dec)


def test_decompose_rejects_small_t():
    with pytest.raises(ValueError):
        decompose(2)


def test_2v2_variant_residue_13():
    dec = decompose_for_2v2(13)
    assert dec.variant == "v6k1"
    assert len(dec.cycles) == 13
    expected = set(one_factor(14, 0)) | set(one_factor(14, 1))
    assert set(cycle_edges(dec.cycles[0])) == expected


def test_2v2_variant_residue_16():
    dec = decompose_for_2v2(16)
    assert dec.variant == "v6k4"
    assert len(dec.cycles) == 16
    assert dec.cycles[0] == (16, 0, 15, 1, 14, 2, 13, 3, 12, 4, 11, 5, 10, 6, 9, 7, 8)


def test_2v2_rejects_other_residues():
    for v in (12, 10, 15, 18):
        with pytest.raises(ValueError):
            decompose_for_2v2(v)


@pytest.mark.parametrize("v", [13, 16, 19, 22, 25, 28])
def test_2v2_double_cover(v):
    dec = decompose_for_2v2(v)
    assert len(dec.cycles) == v
    assert all(is_hamilton(c, v + 1) for c in dec.cycles)
    assert double_cover_holds(dec)


@pytest.mark.parametrize("v", [16, 22, 28, 34])
def test_mandated_edges_for_6k4(v):
    k = (v - 4) // 6
    dec = decompose_for_2v2(v)
    sets = dec.edge_sets()
    assert (k - 2, k - 1) in sets[2 * k - 3]
    assert (k - 2, k) in sets[2 * k - 2]
    assert (k - 1, k) in sets[2 * k - 1]


@pytest.mark.parametrize("v", [7, 13, 19, 25])
def test_mandated_edges_for_6k1(v):
    dec = decompose_for_2v2(v)
    sets = dec.edge_sets()
    assert (3, v - 1) in sets[0]
    assert (1, 3) in sets[1]
    assert (1, v - 1) in sets[v - 1]
