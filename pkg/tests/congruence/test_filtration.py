import pytest

from rigiditybench.congruence import (
    SpecialLinearGroup,
    abelianization_small,
    commutator_check,
    congruence_order,
    exponent_bound,
    is_klingenberg_exception,
    layer_acyclicity,
    layer_dimension,
    layer_iso_check,
    lower_central_series,
    pth_root_check,
    rho_additivity_check,
)
from rigiditybench.errors import CharacteristicPrimeError, GuardExceeded
from rigiditybench.ring.ring import RingDescriptor


def test_orders_and_dimensions():
    """|C^i| と層の次元の式をテスト"""
    ring = RingDescriptor.create(5, 1, 3)
    assert congruence_order(ring, 2) == 5**6
    assert congruence_order(ring, 2, 2) == 5**3
    assert congruence_order(ring, 2, 3) == 1
    assert layer_dimension(RingDescriptor.create(3, 2, 3), 2, 2) == 9
    assert layer_dimension(ring, 3, 1) == 8


@pytest.mark.parametrize(
    "args, n, expected",
    [((3, 1, 2), 2, True), ((2, 1, 2, 2), 2, True), ((5, 1, 2), 2, False), ((3, 1, 2), 3, False)],
)
def test_klingenberg_exception(args, n, expected):
    """n = 2 で標数 2 か F_3 のときだけ例外扱いになることをテスト"""
    assert is_klingenberg_exception(RingDescriptor.create(*args), n) == expected


@pytest.mark.parametrize("args, expected", [((2, 1, 3), 4), ((5, 1, 2), 5), ((3, 1, 10), 27), ((5,), 1)])
def test_exponent_bound(args, expected):
    """指数の上界が L 以上の最小の標数の冪であることをテスト"""
    assert exponent_bound(RingDescriptor.create(*args)) == expected


@pytest.mark.parametrize("i", [1, 2])
def test_rho_additivity(i):
    """ρ_i の加法性を乱択でテスト"""
    group = SpecialLinearGroup(RingDescriptor.create(5, 1, 3), 3)
    report = rho_additivity_check(group, i, trials=200, seed=0)
    assert report.ok


@pytest.mark.parametrize("args, n", [((5, 1, 3), 2), ((3, 2, 3), 3), ((2, 1, 3, 2), 2)])
def test_commutator_levels(args, n):
    """[C^i, C^j] ⊆ C^{i+j} とリー括弧との一致をテスト"""
    group = SpecialLinearGroup(RingDescriptor.create(*args), n)
    for i, j in [(1, 1), (1, 2), (2, 2)]:
        report = commutator_check(group, i, j, trials=100, seed=1)
        assert report.passed
        assert (report.bracket_ok is None) == (i + j >= group.trunc)


def test_layer_exhaustive_sl2_f3():
    """SL₂(F_3[t]/(t²)) の C¹ を全数列挙して ρ₁ が同型であることをテスト"""
    report = layer_iso_check(RingDescriptor.create(3, 1, 2), 2, 1)
    assert report.mode == "exhaustive"
    assert (report.expected_size, report.image_size, report.kernel_size) == (27, 27, 1)
    assert report.passed


def test_layer_sampled():
    """大きな群では乱択に切り替わり、全射性とトレース 0 を確かめることをテスト"""
    report = layer_iso_check(RingDescriptor.create(5, 1, 3), 3, 1, samples=50)
    assert report.mode == "sampled"
    assert report.image_size is None
    assert report.passed


def test_layer_index_range():
    """範囲外の層は ValueError になることをテスト"""
    with pytest.raises(ValueError):
        layer_iso_check(RingDescriptor.create(3, 1, 2), 2, 2)


def test_abelianization_sl2_f5():
    """SL₂(F_5[t]/(t²)) の C の可換化が (5, 5, 5) であることをテスト"""
    report = abelianization_small(RingDescriptor.create(5, 1, 2), 2)
    assert report.order == 125
    assert report.commutator_order == 1
    assert report.abelianization == (5, 5, 5)
    assert report.commutator_equals_c2
    assert not report.exception


@pytest.mark.slow
def test_lower_central_series_sl2_f5_cubed():
    """SL₂(F_5[t]/(t³)) で Γ^i = C^i となることをテスト"""
    report = lower_central_series(RingDescriptor.create(5, 1, 3), 2)
    assert report.gamma_orders == (5**6, 5**3, 1)
    assert report.equal
    assert report.passed


def test_lower_central_series_exception_is_reported():
    """F_3 の例外では Γ^i ⊆ C^i だけを要求することをテスト"""
    report = lower_central_series(RingDescriptor.create(3, 1, 3), 2)
    assert report.exception
    assert report.contained
    assert report.congruence_orders == (3**6, 3**3, 1)
    assert report.passed


def test_abelianization_guard():
    """|C| が上限を超えると GuardExceeded になることをテスト"""
    with pytest.raises(GuardExceeded):
        abelianization_small(RingDescriptor.create(5, 1, 3), 3)


def test_layer_acyclicity_f3():
    """C/C³（F_3[t]/(t³)、n = 2）が Z/2 非輪状であることをテスト"""
    report = layer_acyclicity(RingDescriptor.create(3, 1, 3), 2, 3, 2, samples=50)
    assert report.quotient_order == 3**6
    assert report.quotient_is_char_power
    assert report.h1_mod_p == 0
    assert report.passed


def test_layer_acyclicity_rejects_characteristic():
    """p が標数のときは CharacteristicPrimeError になることをテスト"""
    with pytest.raises(CharacteristicPrimeError):
        layer_acyclicity(RingDescriptor.create(3, 1, 3), 2, 2, 3)


def test_pth_roots():
    """X^{s·p} = X で X^s が C に入ることをテスト"""
    report = pth_root_check(RingDescriptor.create(5, 1, 3), 2, 3, samples=100, seed=0)
    assert (report.exponent_bound, report.multiplier) == (5, 2)
    assert report.passed
