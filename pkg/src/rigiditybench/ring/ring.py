"""切断多項式環 A = F_q[t₁, ..., t_m]/𝔪^l の正確な演算

元は単項式表（全次数、次に辞書式の順）で添字付けられた係数ベクトルです。
単項式表の先頭は定数項なので、剰余体への還元は第 0 成分を取るだけです。
"""

import hashlib
import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, Tuple, Union

import numpy as np

from rigiditybench.errors import MismatchedRings, NotAUnit
from rigiditybench.ring.field import FieldDescriptor


def _compositions(total: int, parts: int) -> Tuple[Tuple[int, ...], ...]:
    """total を parts 個の非負整数に分ける組（辞書式で降順）"""
    found = [c for c in itertools.product(range(total + 1), repeat=parts) if sum(c) == total]
    return tuple(sorted(found, reverse=True))


@dataclass(frozen=True)
class RingDescriptor:
    """切断多項式環の記述子

    Attributes:
        field: 剰余体 F_q
        num_vars: 変数の個数 m
        trunc: 切断次数 l（𝔪^l = 0）
    """

    field: FieldDescriptor
    num_vars: int = 0
    trunc: int = 1

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError(f"num_vars must be >= 0: {self.num_vars}")
        if self.trunc < 1:
            raise ValueError(f"trunc must be >= 1: {self.trunc}")

    @classmethod
    def create(
        cls, characteristic: int, num_vars: int = 0, trunc: int = 1, ext_degree: int = 1
    ) -> "RingDescriptor":
        return cls(FieldDescriptor(characteristic, ext_degree), num_vars, trunc)

    @cached_property
    def monomials(self) -> Tuple[Tuple[int, ...], ...]:
        if self.num_vars == 0 or self.trunc == 1:
            return ((0,) * self.num_vars,)
        table = []
        for degree in range(self.trunc):
            table.extend(_compositions(degree, self.num_vars))
        return tuple(table)

    @cached_property
    def monomial_index(self) -> Dict[Tuple[int, ...], int]:
        return {mono: i for i, mono in enumerate(self.monomials)}

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(sum(mono) for mono in self.monomials)

    @property
    def num_monomials(self) -> int:
        return len(self.monomials)

    @property
    def is_field(self) -> bool:
        return self.num_monomials == 1

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def size(self) -> int:
        return self.q**self.num_monomials

    @property
    def num_units(self) -> int:
        return (self.q - 1) * self.q ** (self.num_monomials - 1)

    @property
    def residue_field(self) -> "RingDescriptor":
        return RingDescriptor(self.field, 0, 1)

    @cached_property
    def mul_pairs(self) -> Tuple[Tuple[int, int, int], ...]:
        """積で次数 < l に残る単項式の組 (i, j, k)"""
        pairs = []
        index = self.monomial_index
        for i, a in enumerate(self.monomials):
            for j, b in enumerate(self.monomials):
                prod = tuple(x + y for x, y in zip(a, b))
                if sum(prod) < self.trunc:
                    pairs.append((i, j, index[prod]))
        return tuple(pairs)

    @cached_property
    def _pair_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        pairs = np.array(self.mul_pairs, dtype=np.int64).reshape(-1, 3)
        scatter = np.zeros((len(pairs), self.num_monomials), dtype=np.int64)
        scatter[np.arange(len(pairs)), pairs[:, 2]] = 1
        return pairs[:, 0], pairs[:, 1], pairs[:, 2], scatter

    @cached_property
    def _place_values(self) -> np.ndarray:
        return self.q ** np.arange(self.num_monomials, dtype=np.int64)

    def descriptor_hash(self) -> str:
        """キャッシュ無効化に使う記述子ハッシュ"""
        payload = {
            "char": self.field.characteristic,
            "ext": self.field.ext_degree,
            "modulus": list(self.field.modulus),
            "vars": self.num_vars,
            "trunc": self.trunc,
        }
        blob = json.dumps(payload, sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]

    # 元の生成

    def element(self, coeffs) -> "RingElement":
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.num_monomials:
            raise ValueError(
                f"expected {self.num_monomials} coefficients, got {len(coeffs)}"
            )
        if any(not 0 <= c < self.q for c in coeffs):
            raise ValueError(f"coefficients must be reduced field elements: {coeffs}")
        return RingElement(self, coeffs)

    def constant(self, c: int) -> "RingElement":
        """体の元 c の定数としての埋め込み"""
        return RingElement(self, (c,) + (0,) * (self.num_monomials - 1))

    def from_int(self, k: int) -> "RingElement":
        return self.constant(self.field.from_int(k))

    def variable(self, i: int) -> "RingElement":
        if self.trunc < 2 or not 0 <= i < self.num_vars:
            return self.zero
        mono = tuple(1 if j == i else 0 for j in range(self.num_vars))
        coeffs = [0] * self.num_monomials
        coeffs[self.monomial_index[mono]] = 1
        return RingElement(self, tuple(coeffs))

    def monomial(self, exponents: Tuple[int, ...], c: int = 1) -> "RingElement":
        coeffs = [0] * self.num_monomials
        if sum(exponents) < self.trunc:
            coeffs[self.monomial_index[tuple(exponents)]] = c
        return RingElement(self, tuple(coeffs))

    @property
    def zero(self) -> "RingElement":
        return self.constant(0)

    @property
    def one(self) -> "RingElement":
        return self.constant(1)

    def encode(self, x: "RingElement") -> int:
        return sum(c * self.q**i for i, c in enumerate(x.coeffs))

    def decode(self, code: int) -> "RingElement":
        q = self.q
        return RingElement(self, tuple((code // q**i) % q for i in range(self.num_monomials)))

    def elements(self) -> Iterator["RingElement"]:
        """全元を符号順に列挙"""
        for code in range(self.size):
            yield self.decode(code)

    def units(self) -> Iterator["RingElement"]:
        for code in range(self.size):
            if code % self.q:
                yield self.decode(code)

    def maximal_ideal(self) -> Iterator["RingElement"]:
        for code in range(0, self.size, self.q):
            yield self.decode(code)

    # 係数ベクトルの演算

    def add_coeffs(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        if self.field.is_prime_field:
            p = self.field.characteristic
            return tuple((x + y) % p for x, y in zip(a, b))
        return tuple(self.field.add(x, y) for x, y in zip(a, b))

    def neg_coeffs(self, a: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(self.field.neg(x) for x in a)

    def mul_coeffs(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        out = [0] * self.num_monomials
        if self.field.is_prime_field:
            p = self.field.characteristic
            for i, j, k in self.mul_pairs:
                if a[i] and b[j]:
                    out[k] += a[i] * b[j]
            return tuple(x % p for x in out)
        F = self.field
        for i, j, k in self.mul_pairs:
            if a[i] and b[j]:
                out[k] = F.add(out[k], F.mul(a[i], b[j]))
        return tuple(out)

    # numpy による一括演算（行ごとに 1 元）

    def decode_codes(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[:, None] // self._place_values[None, :]) % self.q

    def encode_coeffs(self, coeffs: np.ndarray) -> np.ndarray:
        return np.asarray(coeffs, dtype=np.int64) @ self._place_values

    def batch_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """係数配列 (N, M) どうしの積"""
        left, right, target, scatter = self._pair_arrays
        F = self.field
        if F.is_prime_field:
            prod = a[:, left] * b[:, right]
            return (prod @ scatter) % F.characteristic
        prod = F.mul_table[a[:, left], b[:, right]]
        out = np.zeros((a.shape[0], self.num_monomials), dtype=np.int64)
        for t, k in enumerate(target):
            out[:, k] = F.add_table[out[:, k], prod[:, t]]
        return out

    def batch_pow(self, a: np.ndarray, k: int) -> np.ndarray:
        if k < 0:
            raise ValueError("batch_pow expects a non-negative exponent")
        result = np.zeros_like(a)
        result[:, 0] = 1
        base = a
        while k:
            if k & 1:
                result = self.batch_mul(result, base)
            k >>= 1
            if k:
                base = self.batch_mul(base, base)
        return result

    def __str__(self) -> str:
        if self.is_field:
            return str(self.field)
        names = ",".join(f"t{i + 1}" for i in range(self.num_vars))
        if self.num_vars == 1:
            return f"{self.field}[t]/(t^{self.trunc})"
        return f"{self.field}[{names}]/m^{self.trunc}"


Operand = Union["RingElement", int]


@dataclass(frozen=True)
class RingElement:
    """切断多項式環の元

    Attributes:
        ring: 所属する環
        coeffs: 単項式表で添字付けた係数（体の元）
    """

    ring: RingDescriptor
    coeffs: Tuple[int, ...]

    def _coerce(self, other: Operand) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise MismatchedRings(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        raise TypeError(f"cannot combine a ring element with {type(other).__name__}")

    def __add__(self, other: Operand) -> "RingElement":
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.add_coeffs(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self.ring.neg_coeffs(self.coeffs))

    def __sub__(self, other: Operand) -> "RingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> "RingElement":
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> "RingElement":
        other = self._coerce(other)
        return RingElement(self.ring, self.ring.mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "RingElement":
        return self * ring_inv(self._coerce(other))

    def __rtruediv__(self, other: Operand) -> "RingElement":
        return self._coerce(other) * ring_inv(self)

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            return ring_inv(self) ** (-k)
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    @property
    def constant_term(self) -> int:
        return self.coeffs[0]

    @property
    def residue(self) -> "RingElement":
        """剰余体への還元 v̄"""
        return self.ring.residue_field.constant(self.coeffs[0])

    @property
    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def order_of_vanishing(self) -> int:
        """0 でない係数を持つ最小の全次数（0 なら l）"""
        for c, d in zip(self.coeffs, self.ring.degrees):
            if c:
                return d
        return self.ring.trunc

    def __str__(self) -> str:
        terms = []
        for c, mono in zip(self.coeffs, self.ring.monomials):
            if not c:
                continue
            factors = []
            for v, e in enumerate(mono):
                if e:
                    name = "t" if self.ring.num_vars == 1 else f"t{v + 1}"
                    factors.append(name if e == 1 else f"{name}^{e}")
            mono_str = "*".join(factors)
            if not mono_str:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono_str)
            else:
                terms.append(f"{c}*{mono_str}")
        return " + ".join(terms) if terms else "0"


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """切断積 a·b（環が異なれば MismatchedRings）"""
    if not isinstance(b, RingElement):
        raise TypeError("ring_mul expects two ring elements")
    return a * b


def ring_inv(a: RingElement) -> RingElement:
    """局所環での逆元

    定数項を体で反転し、冪零部分を幾何級数で l-1 次まで補正します。

    Raises:
        NotAUnit: 定数項が 0 の場合
    """
    if not a.is_unit:
        raise NotAUnit(f"{a} lies in the maximal ideal of {a.ring}")
    ring = a.ring
    c_inv = ring.constant(ring.field.inv(a.constant_term))
    nilpotent = a * c_inv - ring.one
    step = -nilpotent
    result, term = ring.one, ring.one
    for _ in range(ring.trunc - 1):
        term = term * step
        if term.is_zero:
            break
        result = result + term
    return result * c_inv
