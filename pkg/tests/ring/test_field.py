import numpy as np
import pytest

from rigiditybench.errors import ReducibleModulus
from rigiditybench.ring.field import FieldDescriptor, default_modulus


def test_prime_field_scalar_operations():
    """素体 F_7 の四則演算が剰余演算と一致することをテスト"""
    F = FieldDescriptor(7)
    assert F.order == 7
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F.pow(3, 6) == 1


def test_f4_multiplication_uses_default_modulus():
    """F_4 で α² = α + 1 となることをテスト"""
    F = FieldDescriptor(2, 2)
    assert F.modulus == default_modulus(2, 2) == (1, 1, 1)
    alpha, alpha_plus_one = 2, 3
    assert F.mul(alpha, alpha) == alpha_plus_one
    assert F.inv(alpha) == alpha_plus_one
    assert F.add(alpha, 1) == alpha_plus_one


def test_extension_field_tables_form_a_field():
    """F_9 の乗法表で 0 以外の元がすべて逆元を持つことをテスト"""
    F = FieldDescriptor(3, 2)
    units = np.arange(1, F.order)
    products = F.mul_table[units, F.inv_table[units]]
    assert np.all(products == 1)
    assert np.all(F.add_table[units, F.neg_table[units]] == 0)


def test_reducible_modulus_is_rejected():
    """根を持つ定義多項式を指定するとReducibleModulusが送出されることをテスト"""
    with pytest.raises(ReducibleModulus):
        FieldDescriptor(2, 2, (1, 0, 1))


@pytest.mark.parametrize(
    "characteristic, ext_degree",
    [(4, 1), (5, 0), (5, 4)],
)
def test_invalid_field_parameters(characteristic, ext_degree):
    """標数が素数でない、または拡大次数が範囲外のときValueErrorになることをテスト"""
    with pytest.raises(ValueError):
        FieldDescriptor(characteristic, ext_degree)


def test_array_matmul_matches_scalar_operations():
    """F_8 上の行列積の配列版がスカラー演算と一致することをテスト"""
    F = FieldDescriptor(2, 3)
    rng = np.random.default_rng(0)
    x = rng.integers(F.order, size=(2, 2))
    y = rng.integers(F.order, size=(2, 2))
    product = F.matmul(x, y)
    for i in range(2):
        for j in range(2):
            expected = F.add(F.mul(int(x[i, 0]), int(y[0, j])), F.mul(int(x[i, 1]), int(y[1, j])))
            assert product[i, j] == expected
