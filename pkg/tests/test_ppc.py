from __future__ import annotations

import pytest

from graytts.basedesigns import base_design
from graytts.design import TripleSystem
from graytts.doubling import construct_2v1, construct_2v2
from graytts.ppc import (
    find_parallel_class,
    find_ppc,
    plan_attach,
    ppc_lower_bound,
)


def test_lower_bound_pinned_values():
    assert ppc_lower_bound(16) == 4   # (v+8)/6 branch
    assert ppc_lower_bound(7) == 2    # (v+5)/6 branch; 16v+9 = 121 is square
    assert ppc_lower_bound(9) == 2    # min(ceil(8/4), ceil((21-sqrt(153))/6))


def test_lower_bound_residue_guarantees():
    for v in range(7, 120, 6):
        assert ppc_lower_bound(v) >= (v + 5) // 6
    for v in range(16, 120, 6):
        assert ppc_lower_bound(v) >= (v + 8) // 6


def test_lower_bound_rejects_inadmissible():
    for v in (2, 3, 5, 8, 11):
        with pytest.raises(ValueError):
            ppc_lower_bound(v)


def ppc_is_disjoint(ts, idx):
    seen = set()
    for i in idx:
        b = set(ts.blocks[i])
        if seen & b:
            return False
        seen |= b
    return True


def test_find_ppc_on_tts7():
    ts, _ = base_design(7)
    idx = find_ppc(ts, 2)
    assert len(idx) >= 2 and ppc_is_disjoint(ts, idx)


def test_find_ppc_single_block_is_trivial():
    for v in (4, 9, 10):
        ts, _ = base_design(v)
        idx = find_ppc(ts, 1)
        assert len(idx) >= 1


def test_find_ppc_on_constructed_tts16():
    ts, cert = base_design(7)
    big, _ = construct_2v2(ts, cert)
    idx = find_ppc(big, 4)
    assert len(idx) >= 4 and ppc_is_disjoint(big, idx)


def test_find_ppc_rejects_impossible_target():
    ts, _ = base_design(7)
    with pytest.raises(ValueError):
        find_ppc(ts, 3)  # floor(7/3) = 2


def test_parallel_class_of_tts3():
    ts = TripleSystem(3, [(0, 1, 2), (0, 1, 2)])
    cls = find_parallel_class(ts)
    assert cls is not None and len(cls) == 1


def test_parallel_class_of_tts9():
    ts, _ = base_design(9)
    cls = find_parallel_class(ts)
    assert cls is not None and len(cls) == 3
    covered = sorted(p for i in cls for p in ts.blocks[i])
    assert covered == list(range(9))


def test_parallel_class_needs_divisibility():
    ts, _ = base_design(4)
    with pytest.raises(ValueError):
        find_parallel_class(ts)


def check_plan(ts, cert, expect_cycles):
    plan = plan_attach(ts, cert)
    v = ts.v
    # pi partitions the flattened 2v+1 points
    flat = sorted(p for t in plan.pi for p in t)
    assert flat == list(range(2 * v + 1))
    # bijective assignment onto cycles
    assert sorted(plan.assignment) == list(range(v))
    assert sorted(plan.assignment.values()) == list(range(v))
    for role, cyc in expect_cycles.items():
        assert plan.assignment[plan.roles[role]] == cyc
    assert set(plan.special_triple) == set(plan.roles.values())
    return plan


def test_plan_attach_v13():
    ts, cert = base_design(13)
    plan = check_plan(ts, cert, {"p": 0, "q": 1, "r": 12})
    assert not plan.used_fallback


def test_plan_attach_v7():
    ts, cert = base_design(7)
    plan = check_plan(ts, cert, {"p": 0, "q": 1, "r": 6})
    assert not plan.used_fallback


def test_plan_attach_v16():
    ts, cert = base_design(7)
    big, big_cert = construct_2v2(ts, cert)
    plan = check_plan(big, big_cert, {"p": 1, "q": 2, "r": 3})
    assert not plan.used_fallback


def test_plan_attach_v19():
    ts, cert = base_design(9)
    big, big_cert = construct_2v1(ts, cert)  # TTS(19), k = 3 odd
    plan = check_plan(big, big_cert, {"p": 0, "q": 1, "r": 18})
    assert not plan.used_fallback


def test_plan_attach_rejects_v10():
    ts, cert = base_design(10)
    with pytest.raises(ValueError):
        plan_attach(ts, cert)
