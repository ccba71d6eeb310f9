import pytest

from rigiditybench.complex import (
    ProjPoint,
    determinant,
    enumerate_p1,
    is_general_position,
    p1_size,
)
from rigiditybench.ring.ring import RingDescriptor


@pytest.mark.parametrize(
    "args, expected",
    [((5,), 6), ((5, 1, 2), 30), ((2, 1, 3), 12), ((3, 2, 2), 36)],
)
def test_p1_size(args, expected):
    """P¹(A) の点の個数が q^{M-1}(q+1) で、列挙と一致することをテスト"""
    ring = RingDescriptor.create(*args)
    points = enumerate_p1(ring)
    assert p1_size(ring) == expected
    assert len(points) == expected
    assert len(set(pt.codes for pt in points)) == expected


def test_normalization():
    """単模ベクトルの正規化が (1, b) か (a, 1) を返すことをテスト"""
    ring = RingDescriptor.create(5, 1, 2)
    t = ring.variable(0)
    assert ProjPoint.from_vector(ring.constant(2), ring.constant(4)) == ProjPoint.affine(ring.constant(2))
    assert ProjPoint.from_vector(t, ring.constant(3)) == ProjPoint(2 * t, ring.one)
    with pytest.raises(ValueError):
        ProjPoint.from_vector(t, 2 * t)


def test_general_position_over_local_ring():
    """剰余点が同じ 2 点は一般の位置にないことをテスト"""
    ring = RingDescriptor.create(5, 1, 2)
    t = ring.variable(0)
    zero, shifted = ProjPoint.zero(ring), ProjPoint.affine(t)
    assert not determinant(zero, shifted).is_unit
    assert not is_general_position([zero, shifted])
    assert is_general_position([zero, ProjPoint.infinity(ring), ProjPoint.one(ring)])
