"""単元群 A^× の構造、1 の p 乗根、Hensel による p 乗根の持ち上げ"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rigiditybench.errors import CharacteristicPrimeError, GuardExceeded, NotAUnit
from rigiditybench.linalg.abelian import (
    PresentedAbelianGroup,
    invariant_factors_from_elementary,
    invariant_factors_from_power_orders,
    tensor_mod_p,
    torsion_rank_mod_p,
)
from rigiditybench.linalg.matrix import IntegerMatrix
from rigiditybench.ring.ring import RingDescriptor, RingElement

UNIT_GUARD = 10**6
ROOT_CANDIDATE_GUARD = 10**7
HENSEL_CHECK_GUARD = 10**4
_CHUNK = 1 << 16


def _prime_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


@dataclass(frozen=True)
class UnitGroupData:
    """A^× の構造と離散対数表

    Attributes:
        ring: 対象の環
        invariant_factors: 不変因子 d₁ | d₂ | ...
        splitting: (q-1, 1+𝔪 の巡回因子の位数, ...) という分解表示
        generators: 各巡回因子の生成元
        dlog: 符号 → 指数ベクトルの表（単元でない行は -1）
    """

    ring: RingDescriptor
    invariant_factors: Tuple[int, ...]
    splitting: Tuple[int, ...]
    generators: Tuple[RingElement, ...]
    dlog: np.ndarray = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def group(self) -> PresentedAbelianGroup:
        return PresentedAbelianGroup.from_invariants(self.invariant_factors)

    def log(self, x: RingElement) -> Tuple[int, ...]:
        if not x.is_unit:
            raise NotAUnit(f"{x} has no discrete logarithm")
        return tuple(int(v) for v in self.dlog[self.ring.encode(x)])

    def exp(self, vector: Sequence[int]) -> RingElement:
        result = self.ring.one
        for g, k in zip(self.generators, vector):
            if k:
                result = result * g**k
        return result


@dataclass(frozen=True)
class UnitStructureReport:
    """A^× の構造と、係数素数 p に関する派生量"""

    data: UnitGroupData
    prime: int
    roots_of_unity: Tuple[RingElement, ...]
    kernel_size: int
    pth_powers_size: int
    kernel_is_pth_powers: bool
    r: int
    s: int


def _check_prime(ring: RingDescriptor, p: int) -> None:
    if p == ring.characteristic:
        raise CharacteristicPrimeError(
            f"p = {p} equals the residue characteristic of {ring}; p must be invertible"
        )


def _unit_codes(ring: RingDescriptor) -> np.ndarray:
    codes = np.arange(ring.size, dtype=np.int64)
    return codes[codes % ring.q != 0]


@lru_cache(maxsize=32)
def unit_group(ring: RingDescriptor) -> UnitGroupData:
    """単元を全列挙して A^× の構造と離散対数表を作る

    生成元を符号順に貪欲に加え、既存の部分群 H に初めて落ちる冪で関係式を
    記録します。関係式行列のスミス標準形から不変因子と生成元を得ます。

    Raises:
        GuardExceeded: |A^×| が上限を超える場合
    """
    if ring.num_units > UNIT_GUARD:
        raise GuardExceeded("unit group", ring.num_units, UNIT_GUARD)
    size = ring.size
    in_h = np.zeros(size, dtype=bool)
    in_h[1] = True
    h_codes = np.array([1], dtype=np.int64)
    exps: List[np.ndarray] = []
    gens: List[RingElement] = []
    relation_rows: List[Tuple[Tuple[int, ...], int]] = []

    for code in _unit_codes(ring):
        if in_h[code]:
            continue
        g = ring.decode(int(code))
        cur, e = g, 1
        while not in_h[ring.encode(cur)]:
            cur = cur * g
            e += 1
        cur_code = ring.encode(cur)
        relation_rows.append((tuple(int(x[cur_code]) for x in exps), e))

        exps.append(np.zeros(size, dtype=np.int64))
        h_coeffs = ring.decode_codes(h_codes)
        power = np.array(g.coeffs, dtype=np.int64)
        blocks = [h_codes]
        for j in range(1, e):
            block = ring.batch_mul(h_coeffs, np.broadcast_to(power, h_coeffs.shape))
            block_codes = ring.encode_coeffs(block)
            in_h[block_codes] = True
            for x in exps[:-1]:
                x[block_codes] = x[h_codes]
            exps[-1][block_codes] = j
            blocks.append(block_codes)
            power = np.array((ring.element(power) * g).coeffs, dtype=np.int64)
        h_codes = np.concatenate(blocks)
        gens.append(g)

    k = len(gens)
    rows = []
    for i, (prev, e) in enumerate(relation_rows):
        rows.append([-v for v in prev] + [e] + [0] * (k - i - 1))
    presented = PresentedAbelianGroup(k, IntegerMatrix.from_rows(rows, k))
    factors = presented.invariant_factors

    v = presented.snf.right.rows
    table = np.full((size, len(factors)), -1, dtype=np.int64)
    units = _unit_codes(ring)
    if k:
        x = np.stack([e[units] for e in exps], axis=1)
        for col, (i, d) in enumerate(presented.summands):
            v_col = np.array([v[j][i] % d for j in range(k)], dtype=np.int64)
            table[units, col] = (x @ v_col) % d
    generators = []
    for word in presented.generator_words():
        element = ring.one
        for g, w in zip(gens, word):
            if w:
                element = element * g**w
        generators.append(element)

    q, p0 = ring.q, ring.characteristic
    splitting = ((q - 1,) if q > 2 else ()) + tuple(
        part for part in (_prime_part(d, p0) for d in factors) if part > 1
    )
    logging.debug(f"[units] {ring}: invariant factors {factors}, splitting {splitting}")
    return UnitGroupData(ring, factors, splitting, tuple(generators), table)


def unit_group_invariants(ring: RingDescriptor) -> Tuple[int, ...]:
    """列挙せずに A^× の不変因子を求める

    A^× ≅ F_q^× × (1+𝔪) で、1+𝔪 の p₀^k 乗の像は次数 p₀^k·deg μ < l を満たす
    単項式 μ ≠ 1 の個数 n_k を使って位数 q^{n_k} を持ちます。
    """
    p0, e, l = ring.characteristic, ring.field.ext_degree, ring.trunc
    degrees = [d for d in ring.degrees if d > 0]
    orders = []
    k = 0
    while True:
        n_k = sum(1 for d in degrees if p0**k * d < l)
        orders.append(p0 ** (e * n_k))
        if n_k == 0:
            break
        k += 1
    one_plus_m = invariant_factors_from_power_orders(p0, orders)
    return invariant_factors_from_elementary([ring.q - 1, *one_plus_m])


def roots_of_unity(ring: RingDescriptor, p: int) -> Tuple[RingElement, ...]:
    """μ_p(A)：x^p = 1 となる元（符号順）

    剰余が F_q の 1 の p 乗根である候補だけを numpy で分割して調べます。

    Raises:
        GuardExceeded: 候補数が上限を超える場合
    """
    F = ring.field
    residues = [c for c in range(1, ring.q) if F.pow(c, p) == 1]
    nilpotent_count = ring.q ** (ring.num_monomials - 1)
    total = len(residues) * nilpotent_count
    if total > ROOT_CANDIDATE_GUARD:
        raise GuardExceeded("roots of unity candidates", total, ROOT_CANDIDATE_GUARD)
    one = np.zeros(ring.num_monomials, dtype=np.int64)
    one[0] = 1
    found = []
    for start in range(0, nilpotent_count, _CHUNK):
        ideal_codes = np.arange(start, min(start + _CHUNK, nilpotent_count), dtype=np.int64) * ring.q
        for c in residues:
            codes = ideal_codes + c
            powers = ring.batch_pow(ring.decode_codes(codes), p)
            found.extend(int(x) for x in codes[np.all(powers == one, axis=1)])
    return tuple(ring.decode(code) for code in sorted(found))


def hensel_pth_root(x: RingElement, p: int) -> Optional[RingElement]:
    """y^p = x となる y を返す（剰余が F_q で p 乗でなければ None）

    剰余体で根を全探索し、Newton 法 y ← y - (y^p - x)/(p·y^{p-1}) で持ち上げます。
    p·ȳ^{p-1} が単元なので各段で精度が倍になります。

    Raises:
        CharacteristicPrimeError: p が標数に等しい場合
        NotAUnit: x が単元でない場合
    """
    ring = x.ring
    _check_prime(ring, p)
    if not x.is_unit:
        raise NotAUnit(f"{x} is not a unit")
    F = ring.field
    residue = next((c for c in range(1, ring.q) if F.pow(c, p) == x.constant_term), None)
    if residue is None:
        return None
    y = ring.constant(residue)
    scale = ring.from_int(p)
    for _ in range(ring.trunc + 1):
        error = y**p - x
        if error.is_zero:
            return y
        y = y - error / (scale * y ** (p - 1))
    raise ArithmeticError(f"Newton lifting did not converge for {x}")


def _pth_power_residue_class(ring: RingDescriptor, p: int) -> set:
    F = ring.field
    return {F.pow(c, p) for c in range(1, ring.q)}


def unit_group_structure(ring: RingDescriptor, p: int) -> UnitStructureReport:
    """A^× の構造と p に関する量（μ_p、ker π = (A^×)^p、r、s）

    Raises:
        CharacteristicPrimeError: p が標数に等しい場合
        GuardExceeded: |A^×| が上限を超える場合
    """
    _check_prime(ring, p)
    data = unit_group(ring)
    units = _unit_codes(ring)
    coeffs = ring.decode_codes(units)
    powers = ring.encode_coeffs(ring.batch_pow(coeffs, p))
    pth_powers = set(np.unique(powers).tolist())
    residue_powers = _pth_power_residue_class(ring, p)
    kernel = {int(code) for code in units if int(code) % ring.q in residue_powers}
    mu = tuple(ring.decode(int(code)) for code in units[powers == 1])

    group = data.group
    r, s = tensor_mod_p(group, p), torsion_rank_mod_p(group, p)
    if len(mu) != p**s:
        raise ArithmeticError(f"|mu_{p}| = {len(mu)} but p-torsion rank is {s}")
    logging.info(
        f"[units] {ring}, p={p}: |ker pi|={len(kernel)}, |(A^x)^p|={len(pth_powers)}, r={r}, s={s}"
    )
    return UnitStructureReport(
        data=data,
        prime=p,
        roots_of_unity=mu,
        kernel_size=len(kernel),
        pth_powers_size=len(pth_powers),
        kernel_is_pth_powers=kernel == pth_powers,
        r=r,
        s=s,
    )


@dataclass(frozen=True)
class HenselCheck:
    """Hensel 持ち上げの全数検査の結果"""

    units: int
    kernel_size: int
    roots_found: int
    roots_valid: bool
    found_exactly_on_kernel: bool

    @property
    def passed(self) -> bool:
        return self.roots_valid and self.found_exactly_on_kernel


def hensel_kernel_check(ring: RingDescriptor, p: int) -> HenselCheck:
    """全単元について、根が返るのがちょうど ker π の上であることを確かめる"""
    _check_prime(ring, p)
    if ring.num_units > HENSEL_CHECK_GUARD:
        raise GuardExceeded("hensel check units", ring.num_units, HENSEL_CHECK_GUARD)
    residue_powers = _pth_power_residue_class(ring, p)
    kernel_size = found = 0
    valid = exact = True
    for x in ring.units():
        in_kernel = x.constant_term in residue_powers
        kernel_size += in_kernel
        y = hensel_pth_root(x, p)
        if y is not None:
            found += 1
            valid = valid and y**p == x
        exact = exact and (y is not None) == in_kernel
    return HenselCheck(ring.num_units, kernel_size, found, valid, exact)
