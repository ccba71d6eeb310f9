"""有限アーベル群の Z/p 係数ホモロジーの次元

H_•(G, Z/p) ≅ Λ(G⊗Z/p) ⊗ Γ(_pG) から、ポアンカレ級数
(1+x)^r · (1−x²)^{−s} の係数として次元を求めます。巡回群については
周期的な自由分解から独立に計算する検算も用意しています。
"""

import logging
from dataclasses import dataclass
from math import comb, gcd
from typing import Optional, Sequence, Tuple

import numpy as np

from rigiditybench.errors import CharacteristicPrimeError
from rigiditybench.linalg.abelian import (
    PresentedAbelianGroup,
    invariant_factors_from_elementary,
    tensor_mod_p,
)
from rigiditybench.linalg.matrix import PrimeFieldMatrix
from rigiditybench.linalg.sparse import gf_rank
from rigiditybench.ring.ring import RingDescriptor
from rigiditybench.ring.units import roots_of_unity, unit_group_invariants

DEFAULT_NMAX = 6


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """不変因子 d₁ | d₂ | ... で与えた有限アーベル群"""

    invariant_factors: Tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors if d != 1)
        if any(d <= 0 for d in factors):
            raise ValueError(f"invariant factors must be positive: {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"invariant factors must divide successively: {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "FiniteAbelianGroup":
        """任意の巡回群の直和から作る"""
        return cls(invariant_factors_from_elementary(orders))

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def tensor_rank(self, p: int) -> int:
        """r = dim G⊗Z/p"""
        return tensor_mod_p(PresentedAbelianGroup.from_invariants(self.invariant_factors), p)

    def torsion_rank(self, p: int) -> int:
        """s = dim _pG（p の gcd の積の指数として数える）"""
        total = 1
        for d in self.invariant_factors:
            total *= gcd(d, p)
        s = 0
        while total > 1:
            total //= p
            s += 1
        return s


def series_coefficients(r: int, s: int, nmax: int) -> Tuple[int, ...]:
    """(1+x)^r (1−x²)^{−s} の 0..nmax 次の係数"""
    out = []
    for n in range(nmax + 1):
        total = 0
        for j in range(min(r, n) + 1):
            if (n - j) % 2:
                continue
            k = (n - j) // 2
            total += comb(r, j) * (comb(s - 1 + k, k) if s else int(k == 0))
        out.append(total)
    return tuple(out)


def homology_dims_formula(
    group: FiniteAbelianGroup, p: int, nmax: int = DEFAULT_NMAX
) -> Tuple[int, ...]:
    """dim H_n(G, Z/p)（n = 0..nmax）

    Raises:
        ArithmeticError: r と s が食い違う場合（有限群では起こらない）
    """
    r, s = group.tensor_rank(p), group.torsion_rank(p)
    if r != s:
        raise ArithmeticError(f"dim G/p = {r} but dim _pG = {s} for {group}")
    return series_coefficients(r, s, nmax)


def kunneth(first: Sequence[int], second: Sequence[int]) -> Tuple[int, ...]:
    """次数付き畳み込み（直積群のホモロジーの次元）"""
    n = min(len(first), len(second))
    return tuple(sum(first[j] * second[k - j] for j in range(k + 1)) for k in range(n))


def cyclic_oracle(m: int, p: int, nmax: int = DEFAULT_NMAX) -> Tuple[int, ...]:
    """周期的分解 ... → Z[G] −N→ Z[G] −(g−1)→ Z[G] → Z から H_n(Z/m, Z/p) を計算する

    分解の写像は巡回行列として作り、合成が 0 であることも確かめます。
    G 余不変を取ると各項は Z/p になり、写像は係数和（添加写像の値）で掛かります。
    """
    if m < 1:
        raise ValueError(f"cyclic order must be positive: {m}")
    shift = np.roll(np.eye(m, dtype=np.int64), 1, axis=0)
    g_minus_1 = shift - np.eye(m, dtype=np.int64)
    norm = np.ones((m, m), dtype=np.int64)
    if np.any(g_minus_1 @ norm) or np.any(norm @ g_minus_1):
        raise ArithmeticError("periodic resolution does not compose to zero")

    def induced_rank(matrix: np.ndarray) -> int:
        value = int(matrix[:, 0].sum())
        return gf_rank(PrimeFieldMatrix.from_dense(p, [[value]]))

    # d_n: P_n → P_{n-1}。奇数次は g−1、正の偶数次は N
    ranks = [0] + [induced_rank(g_minus_1 if n % 2 else norm) for n in range(1, nmax + 2)]
    return tuple(1 - ranks[n] - ranks[n + 1] for n in range(nmax + 1))


@dataclass(frozen=True)
class UnitHomologyComparison:
    """H_•(k^×, Z/p) → H_•(R^×, Z/p) の次元比較"""

    prime: int
    residue_dims: Tuple[int, ...]
    ring_dims: Tuple[int, ...]
    residue_rs: Tuple[int, int]
    ring_rs: Tuple[int, int]
    ring_s_from_roots: Optional[int]

    @property
    def equal(self) -> bool:
        return self.residue_dims == self.ring_dims


def unit_homology_compare(
    residue_ring: RingDescriptor, ring: RingDescriptor, p: int, nmax: int = DEFAULT_NMAX
) -> UnitHomologyComparison:
    """k^× と R^× のホモロジーの次元を比べる

    不変因子は列挙せずに構造から求めるので、単元群の列挙上限を超える環でも使えます。
    1 の p 乗根が列挙できる大きさなら、その個数から s も数え直します。

    Raises:
        CharacteristicPrimeError: p が標数に等しい場合
    """
    if p == ring.characteristic:
        raise CharacteristicPrimeError(f"p = {p} equals the residue characteristic of {ring}")
    k_group = FiniteAbelianGroup(unit_group_invariants(residue_ring))
    r_group = FiniteAbelianGroup(unit_group_invariants(ring))
    try:
        count = len(roots_of_unity(ring, p))
        s_roots = 0
        while count > 1:
            count //= p
            s_roots += 1
    except ValueError:
        s_roots = None
    comparison = UnitHomologyComparison(
        prime=p,
        residue_dims=homology_dims_formula(k_group, p, nmax),
        ring_dims=homology_dims_formula(r_group, p, nmax),
        residue_rs=(k_group.tensor_rank(p), k_group.torsion_rank(p)),
        ring_rs=(r_group.tensor_rank(p), r_group.torsion_rank(p)),
        ring_s_from_roots=s_roots,
    )
    logging.info(f"[homology] {residue_ring} vs {ring} mod {p}: equal={comparison.equal}")
    return comparison
