import pytest

from rigiditybench.errors import GuardExceeded
from rigiditybench.orbit import (
    enumerate_pgl2,
    orbit_invariance_check,
    pgl2_order,
    stabilizer_orders,
)
from rigiditybench.ring.ring import RingDescriptor


@pytest.mark.parametrize("args, expected", [((3,), 24), ((4,), 60), ((5,), 120), ((3, 1, 2), 648)])
def test_pgl2_order(args, expected):
    """|PGL₂(A)| の式をテスト"""
    assert pgl2_order(RingDescriptor.create(*args)) == expected


def test_enumerate_pgl2_f3():
    """F_3 の PGL₂ を列挙すると 24 個の相異なる代表になることをテスト"""
    group = enumerate_pgl2(RingDescriptor.create(3))
    assert len(group) == 24
    assert len(set(group)) == 24


@pytest.mark.parametrize(
    "args, stabilizers", [((3,), (6, 2, 1)), ((4,), (12, 3, 1))]
)
def test_stabilizer_orders(args, stabilizers):
    """固定部分群の位数と 3 重推移性をテスト"""
    report = stabilizer_orders(RingDescriptor.create(*args))
    assert report.stabilizer_orders == stabilizers
    assert report.orbit_counts == (1, 1, 1)
    assert report.c3_orbits == report.expected_c3_orbits
    assert report.passed


def test_stabilizer_guard():
    """軌道計算が上限を超える環では GuardExceeded になることをテスト"""
    with pytest.raises(GuardExceeded):
        stabilizer_orders(RingDescriptor.create(3, 1, 2))


@pytest.mark.parametrize("args", [(5,), (5, 1, 2), (2, 1, 2)])
def test_orbit_invariance(args):
    """正規形が PGL₂ の作用で変わらず、正規化が冪等であることをテスト"""
    report = orbit_invariance_check(RingDescriptor.create(*args), trials=100, seed=0)
    assert report.trials == 100
    assert report.passed
