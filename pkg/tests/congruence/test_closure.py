import pytest

from rigiditybench.congruence import (
    SpecialLinearGroup,
    commutator_subgroup,
    congruence_generators,
    elementary_witness,
    normal_closure,
    subgroup_closure,
    trivial_subgroup,
)
from rigiditybench.errors import GuardExceeded
from rigiditybench.ring.ring import RingDescriptor


@pytest.fixture
def group():
    return SpecialLinearGroup(RingDescriptor.create(3, 1, 2), 2)


def test_cyclic_subgroup(group):
    """I + tE₁₂ の生成する部分群が位数 3 であることをテスト"""
    x = elementary_witness(group, (1,), 0, 1, 1)
    closure = subgroup_closure(group, [x])
    assert closure.order == 3
    assert closure.contains(x)
    assert closure.min_level() == 1


def test_congruence_subgroup_order(group):
    """SL₂(F_3[t]/(t²)) の C¹ が位数 27 の可換群であることをテスト"""
    whole = subgroup_closure(group, congruence_generators(group))
    assert whole.order == 27
    assert commutator_subgroup(group, whole.generators).order == 1


def test_normal_closure_in_sl2_f3(group):
    """層の元の正規閉包が C¹ 全体になることをテスト"""
    x = elementary_witness(group, (1,), 0, 1, 1)
    ambient = [elementary_witness(group, (0,), 0, 1, 1), elementary_witness(group, (0,), 1, 0, 1)]
    assert normal_closure(group, [x], ambient).order == 27


def test_trivial_subgroup(group):
    """自明な部分群の位数とレベルをテスト"""
    trivial = trivial_subgroup(group)
    assert trivial.order == 1
    assert trivial.min_level() == 2


def test_closure_guard(group):
    """上限を超えると GuardExceeded になることをテスト"""
    with pytest.raises(GuardExceeded):
        subgroup_closure(group, congruence_generators(group), guard=10)
