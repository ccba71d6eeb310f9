"""SL_n(A) の元を係数配列 (M, n, n) で扱う

X = Σ_μ t^μ X_μ と書き、X_μ を単項式表の順に並べた配列です。複数の元は
先頭に軸を足した (N, M, n, n) でまとめて計算します。
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from rigiditybench.errors import LevelTooLow, NotAUnit
from rigiditybench.ring.ring import RingDescriptor, ring_inv


def _perm_sign(perm: Tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


class SpecialLinearGroup:
    """SL_n(A)（A = F_q[t₁..t_m]/𝔪^L）の配列演算

    Args:
        ring: 切断多項式環
        n: 行列のサイズ
    """

    def __init__(self, ring: RingDescriptor, n: int):
        if n < 2:
            raise ValueError(f"n must be >= 2: {n}")
        self.ring = ring
        self.n = n
        self.field = ring.field
        left, right, target, scatter = ring._pair_arrays
        self._left, self._right, self._target, self._scatter = left, right, target, scatter

    def __repr__(self) -> str:
        return f"SL{self.n}({self.ring})"

    @property
    def trunc(self) -> int:
        return self.ring.trunc

    @cached_property
    def identity_array(self) -> np.ndarray:
        out = np.zeros((self.ring.num_monomials, self.n, self.n), dtype=np.int64)
        out[0] = np.eye(self.n, dtype=np.int64)
        return out

    def identity(self) -> "SLElement":
        return SLElement(self, self.identity_array)

    def element(self, coeffs) -> "SLElement":
        """係数配列から作る（行列式 1 を検査する）"""
        coeffs = np.asarray(coeffs, dtype=np.int64).reshape(self.identity_array.shape)
        x = SLElement(self, coeffs)
        if not np.array_equal(self.det(coeffs), self.ring.one.coeffs):
            raise ValueError("matrix does not have determinant 1")
        return x

    # 配列演算

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """(…, M, n, n) どうしの積（先頭の軸はブロードキャスト）"""
        F = self.field
        products = F.matmul(x[..., self._left, :, :], y[..., self._right, :, :])
        if F.is_prime_field:
            out = np.einsum("...pab,pk->...kab", products, self._scatter)
            return out % F.characteristic
        shape = np.broadcast_shapes(x.shape[:-3], y.shape[:-3]) + self.identity_array.shape
        out = np.zeros(shape, dtype=np.int64)
        for t, k in enumerate(self._target):
            out[..., k, :, :] = F.add_table[out[..., k, :, :], products[..., t, :, :]]
        return out

    def sub_identity(self, x: np.ndarray) -> np.ndarray:
        """X − I"""
        F = self.field
        return F.add_arr(x, F.neg_arr(np.broadcast_to(self.identity_array, x.shape)))

    def power(self, x: np.ndarray, k: int) -> np.ndarray:
        if k < 0:
            return self.power(self.inverse(x), -k)
        result = np.broadcast_to(self.identity_array, x.shape).copy()
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def inverse(self, x: np.ndarray) -> np.ndarray:
        """X = X₀(I + N) と分けて、(I + N)⁻¹ = Σ_{k<L} (−N)^k で求める"""
        constant = x[..., 0, :, :]
        identity = np.eye(self.n, dtype=np.int64)
        if np.all(constant == identity):
            c_inv = np.broadcast_to(identity, constant.shape)
            unipotent = x
        else:
            c_inv = np.stack(
                [self._field_inverse(c) for c in constant.reshape(-1, self.n, self.n)]
            ).reshape(constant.shape)
            lifted = np.zeros_like(x)
            lifted[..., 0, :, :] = c_inv
            unipotent = self.mul(lifted, x)
        minus_n = self.field.neg_arr(self.sub_identity(unipotent))
        total = np.broadcast_to(self.identity_array, x.shape).copy()
        term = total
        for _ in range(self.trunc - 1):
            term = self.mul(term, minus_n)
            total = self.field.add_arr(total, term)
        lifted = np.zeros_like(x)
        lifted[..., 0, :, :] = c_inv
        return self.mul(total, lifted)

    def _field_inverse(self, matrix: np.ndarray) -> np.ndarray:
        F, n = self.field, self.n
        a = [[int(v) for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                raise NotAUnit("constant part of the matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = F.inv(a[col][col])
            a[col] = [F.mul(v, inv) for v in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    factor = a[r][col]
                    a[r] = [F.sub(v, F.mul(factor, w)) for v, w in zip(a[r], a[col])]
        return np.array([row[n:] for row in a], dtype=np.int64)

    def det(self, x: np.ndarray) -> np.ndarray:
        """行列式の係数ベクトル（ライプニッツ展開）"""
        ring, F = self.ring, self.field
        batch = x.reshape(-1, *self.identity_array.shape)
        total = np.zeros((batch.shape[0], ring.num_monomials), dtype=np.int64)
        for perm in itertools.permutations(range(self.n)):
            term = batch[:, :, 0, perm[0]]
            for row in range(1, self.n):
                term = ring.batch_mul(term, batch[:, :, row, perm[row]])
            if _perm_sign(perm) < 0:
                term = F.neg_arr(term)
            total = F.add_arr(total, term)
        return total.reshape(x.shape[:-3] + (ring.num_monomials,))

    def commutator(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """[X, Y] = X Y X⁻¹ Y⁻¹"""
        return self.mul(self.mul(x, y), self.mul(self.inverse(x), self.inverse(y)))

    def level(self, x: np.ndarray) -> np.ndarray:
        """X − I ∈ 𝔪^i となる最大の i（X = I なら L）"""
        diff = self.sub_identity(x)
        nonzero = np.any(diff != 0, axis=(-1, -2))
        degrees = np.array(self.ring.degrees, dtype=np.int64)
        masked = np.where(nonzero, degrees, self.trunc)
        return masked.min(axis=-1)

    def scale_last_column(self, x: np.ndarray, factor: np.ndarray) -> np.ndarray:
        """最後の列に環の元 factor（係数ベクトル (…, M)）を掛ける"""
        correction = np.broadcast_to(self.identity_array, x.shape).copy()
        correction[..., :, -1, -1] = factor
        return self.mul(x, correction)

    def normalize_det(self, x: np.ndarray) -> np.ndarray:
        """最後の列に det⁻¹ を掛けて行列式を 1 にする"""
        ring = self.ring
        det = self.det(x).reshape(-1, ring.num_monomials)
        inverses = np.array([ring_inv(ring.element(d)).coeffs for d in det], dtype=np.int64)
        return self.scale_last_column(x, inverses.reshape(x.shape[:-3] + (ring.num_monomials,)))

    def random_congruence(self, i: int, count: int, rng: np.random.Generator) -> np.ndarray:
        """C^i の元を count 個（次数 ≥ i の係数を一様に選び、行列式を補正）"""
        M, n, q = self.ring.num_monomials, self.n, self.ring.q
        out = np.broadcast_to(self.identity_array, (count, M, n, n)).copy()
        for k, degree in enumerate(self.ring.degrees):
            if degree >= i and degree > 0:
                out[:, k] = rng.integers(q, size=(count, n, n))
        return self.normalize_det(out)

    def key(self, x: np.ndarray) -> bytes:
        return np.ascontiguousarray(x, dtype=np.int64).tobytes()

    def keys(self, batch: np.ndarray) -> list:
        flat = np.ascontiguousarray(batch.reshape(batch.shape[0], -1), dtype=np.int64)
        return [row.tobytes() for row in flat]


@dataclass(frozen=True, eq=False)
class SLElement:
    """SL_n(A) の元"""

    group: SpecialLinearGroup
    coeffs: np.ndarray

    def __mul__(self, other: "SLElement") -> "SLElement":
        return SLElement(self.group, self.group.mul(self.coeffs, other.coeffs))

    def inverse(self) -> "SLElement":
        return SLElement(self.group, self.group.inverse(self.coeffs))

    def __pow__(self, k: int) -> "SLElement":
        return SLElement(self.group, self.group.power(self.coeffs, k))

    def __eq__(self, other) -> bool:
        return isinstance(other, SLElement) and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash(self.group.key(self.coeffs))

    @property
    def level(self) -> int:
        return int(self.group.level(self.coeffs))

    def det(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.group.det(self.coeffs))

    def coefficient(self, monomial: Tuple[int, ...]) -> np.ndarray:
        return self.coeffs[self.group.ring.monomial_index[monomial]]


def congruence_level(x: SLElement) -> int:
    """X ≡ I mod 𝔪^i となる最大の i（≤ L）"""
    return x.level


def commutator(x: SLElement, y: SLElement) -> SLElement:
    return SLElement(x.group, x.group.commutator(x.coeffs, y.coeffs))


@dataclass(frozen=True, eq=False)
class LiePartitionVector:
    """ρ_i の値 (X_λ)_λ：次数 i の単項式 λ ごとの n×n 行列

    Attributes:
        degree: i
        partitions: 次数 i の単項式（単項式表の順）
        matrices: (#λ, n, n)
    """

    field: object
    degree: int
    partitions: Tuple[Tuple[int, ...], ...]
    matrices: np.ndarray

    def as_dict(self) -> Dict[Tuple[int, ...], np.ndarray]:
        return dict(zip(self.partitions, self.matrices))

    def __add__(self, other: "LiePartitionVector") -> "LiePartitionVector":
        return LiePartitionVector(
            self.field, self.degree, self.partitions, self.field.add_arr(self.matrices, other.matrices)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LiePartitionVector)
            and self.partitions == other.partitions
            and np.array_equal(self.matrices, other.matrices)
        )

    def is_trace_zero(self) -> bool:
        traces = self.field.sum_arr(np.diagonal(self.matrices, axis1=-2, axis2=-1), axis=-1)
        return not np.any(traces)

    def is_zero(self) -> bool:
        return not np.any(self.matrices)


def partitions_of(ring: RingDescriptor, degree: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(mono for mono, d in zip(ring.monomials, ring.degrees) if d == degree)


def rho(i: int, x: SLElement) -> LiePartitionVector:
    """ρ_i(X) = (X_λ)_λ（|λ| = i）

    Raises:
        LevelTooLow: X ∉ C^i の場合
    """
    group = x.group
    if not 1 <= i < group.trunc:
        raise ValueError(f"rho_i needs 1 <= i < L = {group.trunc}: {i}")
    if x.level < i:
        raise LevelTooLow(f"element has level {x.level} < {i}")
    partitions = partitions_of(group.ring, i)
    index = group.ring.monomial_index
    matrices = np.stack([x.coeffs[index[lam]] for lam in partitions])
    return LiePartitionVector(group.field, i, partitions, matrices)


def bracket(a: LiePartitionVector, b: LiePartitionVector, ring: RingDescriptor) -> Optional[LiePartitionVector]:
    """Σ_{λ,μ} [X_λ, Y_μ] を λ+μ に置いたもの（次数 i+j が L 以上なら None）"""
    degree = a.degree + b.degree
    if degree >= ring.trunc:
        return None
    F = a.field
    partitions = partitions_of(ring, degree)
    position = {lam: k for k, lam in enumerate(partitions)}
    n = a.matrices.shape[-1]
    out = np.zeros((len(partitions), n, n), dtype=np.int64)
    for lam, x in zip(a.partitions, a.matrices):
        for mu, y in zip(b.partitions, b.matrices):
            k = position[tuple(s + t for s, t in zip(lam, mu))]
            term = F.add_arr(F.matmul(x, y), F.neg_arr(F.matmul(y, x)))
            out[k] = F.add_arr(out[k], term)
    return LiePartitionVector(F, degree, partitions, out)


def elementary_witness(
    group: SpecialLinearGroup, monomial: Tuple[int, ...], row: int, col: int, c: int
) -> np.ndarray:
    """I + c·t^μ·E_{row,col}（対角なら H = E_{row,row} − E_{row+1,row+1} として行列式を補正）"""
    coeffs = group.identity_array.copy()
    k = group.ring.monomial_index[monomial]
    F = group.field
    if row != col:
        coeffs[k, row, col] = c
        return coeffs
    coeffs[k, row, row] = F.add(int(coeffs[k, row, row]), c)
    coeffs[k, row + 1, row + 1] = F.add(int(coeffs[k, row + 1, row + 1]), F.neg(c))
    return group.normalize_det(coeffs)


def layer_witnesses(group: SpecialLinearGroup, degree: int) -> Tuple[np.ndarray, ...]:
    """ρ_degree の像が ⊕_λ sl_n(F) の F_p 基底を動くような C^degree の元"""
    out = []
    n = group.n
    for mono in partitions_of(group.ring, degree):
        for c in group.field.prime_basis():
            for row in range(n):
                for col in range(n):
                    if row != col:
                        out.append(elementary_witness(group, mono, row, col, c))
            for row in range(n - 1):
                out.append(elementary_witness(group, mono, row, row, c))
    return tuple(out)


def congruence_generators(group: SpecialLinearGroup) -> Tuple[np.ndarray, ...]:
    """C = C¹ の生成系（各次数の層の証人を合わせたもの）"""
    out = []
    for degree in range(1, group.trunc):
        out.extend(layer_witnesses(group, degree))
    return tuple(out)
