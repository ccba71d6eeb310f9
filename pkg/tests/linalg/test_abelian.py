import pytest

from rigiditybench.errors import IncompatibleMap
from rigiditybench.linalg import (
    IntegerMatrix,
    PresentedAbelianGroup,
    abelian_cokernel,
    abelian_kernel,
    image_order,
    induced_map_mod_p,
    invariant_factors_from_elementary,
    invariant_factors_from_power_orders,
    tensor_mod_p,
    torsion_rank_mod_p,
)
from rigiditybench.linalg.sparse import gf_rank


def test_presented_group_invariants():
    """Z²/⟨(2, 4), (6, 6)⟩ の不変因子が (2, 6) であることをテスト"""
    group = PresentedAbelianGroup(2, IntegerMatrix.from_rows([[2, 4], [6, 6]]))
    assert group.invariant_factors == (2, 6)
    assert group.order == 12
    assert str(group) == "Z/2 + Z/6"


def test_free_part_is_reported_as_zero():
    """関係式が足りない生成元は自由因子 Z として数えることをテスト"""
    group = PresentedAbelianGroup(2, IntegerMatrix.from_rows([[3, 0]]))
    assert group.invariant_factors == (3, 0)
    assert group.order is None
    assert group.free_rank == 1
    assert tensor_mod_p(group, 3) == 2
    assert torsion_rank_mod_p(group, 3) == 1


def test_coordinates_detect_zero():
    """関係式の整数結合が 0、それ以外が非零と判定されることをテスト"""
    group = PresentedAbelianGroup.from_invariants([4, 6])
    assert group.is_zero((8, -6))
    assert not group.is_zero((2, 0))


def test_kernel_of_multiplication_by_two():
    """Z/6 上の 2 倍写像の核が Z/2 で、位数の帳尻が合うことをテスト"""
    z6 = PresentedAbelianGroup.from_invariants([6])
    f = IntegerMatrix.from_rows([[2]])
    kernel = abelian_kernel(f, z6, z6)
    assert kernel.invariant_factors == (2,)
    assert image_order(f, z6, z6) == 3
    assert abelian_cokernel(f, z6, z6).invariant_factors == (2,)
    (word,) = kernel.inclusion.rows
    assert z6.coordinates(f.row_times(word)) == (0,)


def test_kernel_into_free_group():
    """Z/4 → Z の写像は 0 だけで、核は始域全体になることをテスト"""
    z4 = PresentedAbelianGroup.from_invariants([4])
    z = PresentedAbelianGroup.free(1)
    kernel = abelian_kernel(IntegerMatrix.from_rows([[0]]), z4, z)
    assert kernel.invariant_factors == (4,)


def test_incompatible_map_is_rejected():
    """関係式を消さない写像でIncompatibleMapが送出されることをテスト"""
    z4 = PresentedAbelianGroup.from_invariants([4])
    z6 = PresentedAbelianGroup.from_invariants([6])
    with pytest.raises(IncompatibleMap):
        abelian_kernel(IntegerMatrix.from_rows([[1]]), z4, z6)


def test_induced_map_mod_p():
    """Z/9 → Z/3 の自然な全射が ⊗Z/3 で同型になることをテスト"""
    z9 = PresentedAbelianGroup.from_invariants([9])
    z3 = PresentedAbelianGroup.from_invariants([3])
    matrix = induced_map_mod_p(IntegerMatrix.from_rows([[1]]), z9, z3, 3)
    assert matrix.shape == (1, 1)
    assert gf_rank(matrix) == 1


@pytest.mark.parametrize(
    "orders, expected",
    [([6, 7], (42,)), ([4, 5], (20,)), ([2, 3, 3], (3, 6)), ([1, 4, 2], (2, 4))],
)
def test_invariant_factors_from_elementary(orders, expected):
    """巡回群の直和から不変因子の整除列を作れることをテスト"""
    assert invariant_factors_from_elementary(orders) == expected


def test_invariant_factors_from_power_orders():
    """|G|, |G²|, |G⁴| = 32, 4, 1 から (2, 4, 4) を復元することをテスト"""
    assert invariant_factors_from_power_orders(2, [32, 4, 1]) == (2, 4, 4)
    assert invariant_factors_from_power_orders(5, [125, 1]) == (5, 5, 5)
    with pytest.raises(ValueError):
        invariant_factors_from_power_orders(2, [8, 2])
