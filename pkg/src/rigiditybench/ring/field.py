"""有限体 F_q (q = p₀^e, e ≤ 3) の正確な演算

元は 0..q-1 の整数で表します。整数表現は galois と同じく、冪基底
1, α, α², ... に関する係数を p₀ 進数の各桁に並べたものです。
素体では剰余演算を直接使い、拡大体では加法表・乗法表を引きます。
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

import galois
import numpy as np
from sympy import isprime

from rigiditybench.errors import ReducibleModulus

MAX_EXT_DEGREE = 3


def default_modulus(characteristic: int, ext_degree: int) -> Tuple[int, ...]:
    """既定の定義多項式（最高次から並べた係数列）を返す"""
    if ext_degree == 1:
        return (1, 0)
    poly = galois.irreducible_poly(characteristic, ext_degree)
    return tuple(int(c) for c in poly.coeffs)


def _has_root(modulus: Tuple[int, ...], p: int) -> bool:
    for x in range(p):
        value = 0
        for c in modulus:
            value = (value * x + c) % p
        if value == 0:
            return True
    return False


@dataclass(frozen=True)
class FieldDescriptor:
    """有限体の記述子

    Attributes:
        characteristic: 標数 p₀（素数）
        ext_degree: 拡大次数 e（1〜3）
        modulus: 最高次係数 1 の e 次多項式の係数列（最高次から）。
            省略時は既定の既約多項式を使います。
    """

    characteristic: int
    ext_degree: int = 1
    modulus: Tuple[int, ...] = ()

    def __post_init__(self):
        p, e = self.characteristic, self.ext_degree
        if not isprime(p):
            raise ValueError(f"characteristic must be prime: {p}")
        if not 1 <= e <= MAX_EXT_DEGREE:
            raise ValueError(f"ext_degree must be in 1..{MAX_EXT_DEGREE}: {e}")
        if not self.modulus:
            object.__setattr__(self, "modulus", default_modulus(p, e))
        modulus = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", modulus)
        if len(modulus) != e + 1 or modulus[0] != 1:
            raise ValueError(f"modulus must be monic of degree {e}: {modulus}")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {p}): {modulus}")
        # 次数 2, 3 では根を持たないことと既約性が同値
        if e > 1 and _has_root(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} has a root in F_{p}")

    @property
    def order(self) -> int:
        return self.characteristic**self.ext_degree

    @property
    def is_prime_field(self) -> bool:
        return self.ext_degree == 1

    @cached_property
    def gf(self) -> type:
        """galois の体クラス"""
        p, e = self.characteristic, self.ext_degree
        if e == 1:
            return galois.GF(p)
        poly = galois.Poly(list(self.modulus), field=galois.GF(p))
        return galois.GF(p**e, irreducible_poly=poly)

    @cached_property
    def add_table(self) -> np.ndarray:
        x = self.gf.elements
        return (x[:, None] + x[None, :]).view(np.ndarray).astype(np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        x = self.gf.elements
        return (x[:, None] * x[None, :]).view(np.ndarray).astype(np.int64)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return (-self.gf.elements).view(np.ndarray).astype(np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        """逆元表（0 の位置は 0 のまま）"""
        inv = np.zeros(self.order, dtype=np.int64)
        units = self.gf.elements[1:]
        inv[1:] = np.reciprocal(units).view(np.ndarray).astype(np.int64)
        return inv

    @cached_property
    def _tables(self) -> Tuple[List[List[int]], List[List[int]], List[int], List[int]]:
        return (
            self.add_table.tolist(),
            self.mul_table.tolist(),
            self.neg_table.tolist(),
            self.inv_table.tolist(),
        )

    # スカラー演算

    def add(self, a: int, b: int) -> int:
        if self.ext_degree == 1:
            return (a + b) % self.characteristic
        return self._tables[0][a][b]

    def neg(self, a: int) -> int:
        if self.ext_degree == 1:
            return -a % self.characteristic
        return self._tables[2][a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.ext_degree == 1:
            return a * b % self.characteristic
        return self._tables[1][a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        if self.ext_degree == 1:
            return pow(a, -1, self.characteristic)
        return self._tables[3][a]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def from_int(self, k: int) -> int:
        """整数 k の素体部分への像"""
        return k % self.characteristic

    def digits(self, a: int) -> Tuple[int, ...]:
        """F_{p₀} 上の座標（冪基底に関する係数）"""
        p = self.characteristic
        return tuple((a // p**k) % p for k in range(self.ext_degree))

    def prime_basis(self) -> Tuple[int, ...]:
        """冪基底 1, α, ..., α^{e-1} の整数表現"""
        return tuple(self.characteristic**k for k in range(self.ext_degree))

    # 配列演算（numpy）

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.ext_degree == 1:
            return (a + b) % self.characteristic
        return self.add_table[a, b]

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        if self.ext_degree == 1:
            return -a % self.characteristic
        return self.neg_table[a]

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.ext_degree == 1:
            return a * b % self.characteristic
        return self.mul_table[a, b]

    def sum_arr(self, a: np.ndarray, axis: int) -> np.ndarray:
        """軸 axis に沿った総和"""
        if self.ext_degree == 1:
            return a.sum(axis=axis) % self.characteristic
        a = np.moveaxis(a, axis, 0)
        total = np.zeros(a.shape[1:], dtype=np.int64)
        for part in a:
            total = self.add_table[total, part]
        return total

    def matmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """末尾 2 軸についての行列積"""
        if self.ext_degree == 1:
            return np.matmul(x, y) % self.characteristic
        products = self.mul_table[x[..., :, :, None], y[..., None, :, :]]
        return self.sum_arr(products, axis=-2)

    def __str__(self) -> str:
        if self.ext_degree == 1:
            return f"F{self.characteristic}"
        return f"F{self.characteristic}^{self.ext_degree}"
