import numpy as np
import pytest

from rigiditybench.congruence import (
    SpecialLinearGroup,
    bracket,
    commutator,
    congruence_generators,
    congruence_level,
    elementary_witness,
    layer_witnesses,
    partitions_of,
    rho,
)
from rigiditybench.errors import LevelTooLow
from rigiditybench.ring.ring import RingDescriptor


@pytest.fixture
def sl2():
    return SpecialLinearGroup(RingDescriptor.create(5, 1, 3), 2)


def _elementary(group, degree, row, col, c=1):
    return group.element(elementary_witness(group, (degree,), row, col, c))


def test_rho_of_elementary_matrix(sl2):
    """I + t·E₁₂ の ρ₁ が E₁₂ で、ρ₂ は LevelTooLow になることをテスト"""
    x = _elementary(sl2, 1, 0, 1)
    assert congruence_level(x) == 1
    value = rho(1, x)
    assert value.partitions == ((1,),)
    assert np.array_equal(value.matrices[0], [[0, 1], [0, 0]])
    assert value.is_trace_zero()
    with pytest.raises(LevelTooLow):
        rho(2, x)
    with pytest.raises(ValueError):
        rho(3, x)


def test_bracket_matches_commutator(sl2):
    """[I + tE₁₂, I + tE₂₁] の t² の係数が [E₁₂, E₂₁] = H であることをテスト"""
    x, y = _elementary(sl2, 1, 0, 1), _elementary(sl2, 1, 1, 0)
    c = commutator(x, y)
    assert c.level == 2
    expected = bracket(rho(1, x), rho(1, y), sl2.ring)
    assert expected == rho(2, c)
    assert np.array_equal(expected.matrices[0], [[1, 0], [0, 4]])
    assert bracket(rho(2, c), rho(1, x), sl2.ring) is None


def test_rho_is_additive(sl2):
    """ρ₁(XY) = ρ₁(X) + ρ₁(Y) をテスト"""
    x, y = _elementary(sl2, 1, 0, 1, 2), _elementary(sl2, 1, 1, 0, 3)
    assert rho(1, x * y) == rho(1, x) + rho(1, y)


def test_inverse_and_power():
    """定数部分が単位行列でない元の逆元と冪をテスト"""
    group = SpecialLinearGroup(RingDescriptor.create(5, 1, 3), 2)
    coeffs = group.identity_array.copy()
    coeffs[0] = [[2, 1], [1, 1]]
    coeffs[1] = [[0, 3], [1, 0]]
    coeffs[2] = [[4, 0], [2, 1]]
    x = group.element(group.normalize_det(coeffs))
    assert x * x.inverse() == group.identity()
    assert x ** -1 == x.inverse()
    assert x ** 3 == x * x * x
    assert x.det() == (1, 0, 0)


def test_element_rejects_determinant():
    """行列式が 1 でない係数は ValueError になることをテスト"""
    group = SpecialLinearGroup(RingDescriptor.create(5, 1, 2), 2)
    coeffs = group.identity_array.copy()
    coeffs[0, 0, 0] = 2
    with pytest.raises(ValueError):
        group.element(coeffs)
    with pytest.raises(ValueError):
        SpecialLinearGroup(group.ring, 1)


def test_unipotent_has_characteristic_exponent():
    """F_5[t]/(t³) の C の元の 5 乗が単位元であることをテスト"""
    group = SpecialLinearGroup(RingDescriptor.create(5, 1, 3), 3)
    x = group.random_congruence(1, 20, np.random.default_rng(0))
    assert np.all(group.power(x, 5) == group.identity_array)
    assert np.all(group.level(x) >= 1)


def test_extension_field_arithmetic():
    """F_4[t]/(t²) でも逆元と行列式が正しいことをテスト"""
    group = SpecialLinearGroup(RingDescriptor.create(2, 1, 2, ext_degree=2), 2)
    x = group.random_congruence(1, 10, np.random.default_rng(1))
    assert np.all(group.mul(x, group.inverse(x)) == group.identity_array)
    assert np.all(group.det(x) == np.array(group.ring.one.coeffs))


def test_layer_witnesses_count():
    """証人の個数が #λ·e·(n²−1) であることをテスト"""
    ring = RingDescriptor.create(3, 2, 3)
    group = SpecialLinearGroup(ring, 2)
    assert partitions_of(ring, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(layer_witnesses(group, 1)) == 2 * 3
    assert len(layer_witnesses(group, 2)) == 3 * 3
    assert len(congruence_generators(group)) == 15
    levels = [int(group.level(w)) for w in layer_witnesses(group, 2)]
    assert levels == [2] * 9
