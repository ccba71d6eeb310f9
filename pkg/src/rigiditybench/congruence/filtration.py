"""合同部分群のフィルトレーション C^i の検査"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Optional, Tuple

import numpy as np

from rigiditybench.congruence.closure import (
    CLOSURE_GUARD,
    FiniteSubgroup,
    commutator_subgroup,
    relative_commutator,
    subgroup_closure,
)
from rigiditybench.congruence.slgroup import (
    SpecialLinearGroup,
    congruence_generators,
    layer_witnesses,
    partitions_of,
)
from rigiditybench.errors import CharacteristicPrimeError, GuardExceeded
from rigiditybench.linalg.abelian import invariant_factors_from_power_orders
from rigiditybench.linalg.matrix import PrimeFieldMatrix
from rigiditybench.linalg.sparse import gf_rank
from rigiditybench.ring.ring import RingDescriptor

ENUMERATION_GUARD = 2 * 10**5


def layer_dimension(ring: RingDescriptor, n: int, i: int) -> int:
    """dim_F C^i/C^{i+1} = (n²−1)·C(i+m−1, m−1)"""
    return (n * n - 1) * comb(i + ring.num_vars - 1, ring.num_vars - 1)


def congruence_order(ring: RingDescriptor, n: int, i: int = 1) -> int:
    """|C^i| = q^{(n²−1)·#{μ : i ≤ deg μ < L}}"""
    count = sum(1 for d in ring.degrees if d >= max(i, 1))
    return ring.q ** ((n * n - 1) * count)


def is_klingenberg_exception(ring: RingDescriptor, n: int) -> bool:
    """n = 2 で標数 2 か F₃ のとき、C^i = Γ^i は保証されない"""
    return n == 2 and (ring.characteristic == 2 or ring.q == 3)


def _layer(group: SpecialLinearGroup, x: np.ndarray, i: int) -> np.ndarray:
    index = group.ring.monomial_index
    return np.stack([x[..., index[lam], :, :] for lam in partitions_of(group.ring, i)], axis=-3)


def _prime_coordinates(group: SpecialLinearGroup, layers: np.ndarray) -> np.ndarray:
    """F_q の各成分を F_p 上の座標に展開して行ベクトルに並べる"""
    F = group.field
    flat = layers.reshape(layers.shape[0], -1)
    p, e = F.characteristic, F.ext_degree
    digits = [(flat // p**k) % p for k in range(e)]
    return np.concatenate(digits, axis=1)


@dataclass(frozen=True)
class SampleReport:
    trials: int
    passed: int

    @property
    def ok(self) -> bool:
        return self.trials == self.passed


def rho_additivity_check(group: SpecialLinearGroup, i: int, trials: int, seed: int) -> SampleReport:
    """ρ_i(XY) = ρ_i(X) + ρ_i(Y) を乱択で確かめる"""
    rng = np.random.default_rng(seed)
    x = group.random_congruence(i, trials, rng)
    y = group.random_congruence(i, trials, rng)
    lhs = _layer(group, group.mul(x, y), i)
    rhs = group.field.add_arr(_layer(group, x, i), _layer(group, y, i))
    ok = np.all(lhs == rhs, axis=(1, 2, 3))
    return SampleReport(trials, int(ok.sum()))


@dataclass(frozen=True)
class CommutatorReport:
    """[C^i, C^j] ⊆ C^{i+j} の乱択検査

    Attributes:
        level_ok: 交換子のレベルが min(i+j, L) 以上だった試行数
        bracket_ok: ρ_{i+j}([X, Y]) がリー括弧と一致した試行数（i+j ≥ L なら None）
    """

    i: int
    j: int
    trials: int
    level_ok: int
    bracket_ok: Optional[int]

    @property
    def passed(self) -> bool:
        return self.level_ok == self.trials and self.bracket_ok in (None, self.trials)


def commutator_check(
    group: SpecialLinearGroup, i: int, j: int, trials: int, seed: int
) -> CommutatorReport:
    rng = np.random.default_rng(seed)
    x = group.random_congruence(i, trials, rng)
    y = group.random_congruence(j, trials, rng)
    c = group.commutator(x, y)
    L = group.trunc
    level_ok = int(np.sum(group.level(c) >= min(i + j, L)))
    bracket_ok = None
    if i + j < L:
        F = group.field
        ring = group.ring
        target = {lam: k for k, lam in enumerate(partitions_of(ring, i + j))}
        expected = np.zeros((trials, len(target), group.n, group.n), dtype=np.int64)
        index = ring.monomial_index
        for lam in partitions_of(ring, i):
            for mu in partitions_of(ring, j):
                k = target[tuple(a + b for a, b in zip(lam, mu))]
                a, b = x[:, index[lam]], y[:, index[mu]]
                term = F.add_arr(F.matmul(a, b), F.neg_arr(F.matmul(b, a)))
                expected[:, k] = F.add_arr(expected[:, k], term)
        actual = _layer(group, c, i + j)
        bracket_ok = int(np.sum(np.all(actual == expected, axis=(1, 2, 3))))
    report = CommutatorReport(i, j, trials, level_ok, bracket_ok)
    logging.debug(f"[congruence] commutator check {report}")
    return report


@dataclass(frozen=True)
class LayerReport:
    """C^i/C^{i+1} ≅ ⊕_λ sl_n(F) の検査

    Attributes:
        mode: "exhaustive" か "sampled"
        expected_size: q^{(n²−1)·#λ}
        image_size: ρ_i の像の大きさ（全数のときのみ）
        kernel_size: ρ_i の核の大きさ（全数のときのみ）
        surjective: 証人の像が F_p 上で層全体を張るか
        trace_zero: 調べた像がすべてトレース 0 か
    """

    mode: str
    expected_size: int
    image_size: Optional[int]
    kernel_size: Optional[int]
    kernel_in_next: Optional[bool]
    surjective: bool
    trace_zero: bool

    @property
    def passed(self) -> bool:
        ok = self.surjective and self.trace_zero
        if self.mode == "exhaustive":
            ok = ok and self.image_size == self.expected_size and bool(self.kernel_in_next)
        return ok


def _enumerate_congruence(group: SpecialLinearGroup, i: int) -> np.ndarray:
    ring, n = group.ring, group.n
    slots = [k for k, d in enumerate(ring.degrees) if d >= max(i, 1)]
    width = len(slots) * n * n
    total = ring.q**width
    if total > ENUMERATION_GUARD:
        raise GuardExceeded(f"C^{i} candidates", total, ENUMERATION_GUARD)
    codes = np.arange(total, dtype=np.int64)
    digits = (codes[:, None] // ring.q ** np.arange(width, dtype=np.int64)) % ring.q
    out = np.broadcast_to(group.identity_array, (total,) + group.identity_array.shape).copy()
    out[:, slots] = digits.reshape(total, len(slots), n, n)
    det = group.det(out)
    one = np.array(ring.one.coeffs, dtype=np.int64)
    return out[np.all(det == one, axis=1)]


def layer_iso_check(
    ring: RingDescriptor, n: int, i: int, samples: int = 200, seed: int = 0
) -> LayerReport:
    """ρ_i が ⊕_λ sl_n(F) への全射で核が C^{i+1} であることを確かめる

    候補が上限以下なら C^i を全数列挙し、そうでなければ乱択で確かめます。
    """
    if not 1 <= i < ring.trunc:
        raise ValueError(f"layer index must satisfy 1 <= i < L = {ring.trunc}: {i}")
    group = SpecialLinearGroup(ring, n)
    F = group.field
    expected = ring.q ** layer_dimension(ring, n, i)

    witnesses = np.stack(layer_witnesses(group, i))
    rows = _prime_coordinates(group, _layer(group, witnesses, i))
    span = gf_rank(PrimeFieldMatrix.from_dense(F.characteristic, rows))
    surjective = span == layer_dimension(ring, n, i) * F.ext_degree

    def traces_zero(layers: np.ndarray) -> bool:
        diagonal = np.diagonal(layers, axis1=-2, axis2=-1)
        return not np.any(F.sum_arr(diagonal, axis=-1))

    try:
        elements = _enumerate_congruence(group, i)
    except GuardExceeded:
        sample = group.random_congruence(i, samples, np.random.default_rng(seed))
        layers = _layer(group, sample, i)
        return LayerReport(
            "sampled", expected, None, None, None, surjective,
            traces_zero(layers) and traces_zero(_layer(group, witnesses, i)),
        )

    layers = _layer(group, elements, i)
    flat = layers.reshape(len(elements), -1)
    image = np.unique(flat, axis=0)
    kernel_mask = ~np.any(flat, axis=1)
    kernel = elements[kernel_mask]
    kernel_in_next = bool(np.all(group.level(kernel) >= i + 1)) and (
        len(kernel) * len(image) == len(elements)
    )
    report = LayerReport(
        "exhaustive",
        expected,
        len(image),
        len(kernel),
        kernel_in_next and len(elements) == congruence_order(ring, n, i),
        surjective,
        traces_zero(layers),
    )
    logging.info(f"[congruence] layer {i} of SL{n}({ring}): {report}")
    return report


@dataclass(frozen=True)
class AbelianizationReport:
    """C/[C, C] と Γ² = [C, C] 対 C² の比較"""

    order: int
    commutator_order: int
    abelianization: Tuple[int, ...]
    c2_order: int
    commutator_in_c2: bool
    exception: bool

    @property
    def commutator_equals_c2(self) -> bool:
        return self.commutator_in_c2 and self.commutator_order == self.c2_order


def _check_closure_size(ring: RingDescriptor, n: int) -> None:
    order = congruence_order(ring, n)
    if order > CLOSURE_GUARD:
        raise GuardExceeded("congruence subgroup", order, CLOSURE_GUARD)


def _abelianization(
    group: SpecialLinearGroup, whole: FiniteSubgroup, derived: FiniteSubgroup
) -> Tuple[int, ...]:
    p0 = group.ring.characteristic
    orders = []
    k = 0
    while True:
        powers = [group.power(g, p0**k) for g in whole.generators]
        sub = subgroup_closure(group, powers, base=derived)
        orders.append(sub.order // derived.order)
        if sub.order == derived.order:
            break
        k += 1
    return invariant_factors_from_power_orders(p0, orders)


def abelianization_small(ring: RingDescriptor, n: int) -> AbelianizationReport:
    """C/[C, C] の不変因子と、[C, C] と C² の比較

    Raises:
        GuardExceeded: |C| が上限を超える場合
    """
    _check_closure_size(ring, n)
    group = SpecialLinearGroup(ring, n)
    gens = congruence_generators(group)
    whole = subgroup_closure(group, gens)
    if whole.order != congruence_order(ring, n):
        raise ArithmeticError(f"generated {whole.order} elements, expected |C| = {congruence_order(ring, n)}")
    derived = commutator_subgroup(group, whole.generators)
    report = AbelianizationReport(
        order=whole.order,
        commutator_order=derived.order,
        abelianization=_abelianization(group, whole, derived),
        c2_order=congruence_order(ring, n, 2),
        commutator_in_c2=derived.min_level() >= min(2, ring.trunc),
        exception=is_klingenberg_exception(ring, n),
    )
    logging.info(f"[congruence] abelianization of C in SL{n}({ring}): {report.abelianization}")
    return report


@dataclass(frozen=True)
class LowerCentralReport:
    """Γ^i と C^i の位数（i = 1..L）"""

    gamma_orders: Tuple[int, ...]
    congruence_orders: Tuple[int, ...]
    contained: bool
    exception: bool

    @property
    def equal(self) -> bool:
        return self.gamma_orders == self.congruence_orders

    @property
    def passed(self) -> bool:
        return self.contained and (self.equal or self.exception)


def lower_central_series(ring: RingDescriptor, n: int) -> LowerCentralReport:
    """Γ¹ = C, Γ^{i+1} = [C, Γ^i] を計算して C^i と比べる"""
    _check_closure_size(ring, n)
    group = SpecialLinearGroup(ring, n)
    gens = congruence_generators(group)
    term = subgroup_closure(group, gens)
    gammas, contained = [term.order], term.min_level() >= 1
    for i in range(2, ring.trunc + 1):
        term = relative_commutator(group, gens, term)
        gammas.append(term.order)
        contained = contained and term.min_level() >= min(i, ring.trunc)
    c_orders = tuple(
        congruence_order(ring, n, i) if i < ring.trunc else 1 for i in range(1, ring.trunc + 1)
    )
    return LowerCentralReport(tuple(gammas), c_orders, contained, is_klingenberg_exception(ring, n))


@dataclass(frozen=True)
class AcyclicityReport:
    """C/C^i が Z/p 非輪状であることの証拠

    Attributes:
        layers_elementary: 各層 C^j/C^{j+1}（j < i）が可換で指数が標数を割る
        quotient_order: |C/C^i|
        quotient_is_char_power: |C/C^i| が標数の冪
        h1_mod_p: dim H₁(C/C^i, Z/p)（列挙できたときのみ）
    """

    i: int
    prime: int
    layers_elementary: bool
    quotient_order: int
    quotient_is_char_power: bool
    h1_mod_p: Optional[int]

    @property
    def passed(self) -> bool:
        return self.layers_elementary and self.quotient_is_char_power and self.h1_mod_p in (None, 0)


def layer_acyclicity(
    ring: RingDescriptor, n: int, i: int, p: int, samples: int = 200, seed: int = 0
) -> AcyclicityReport:
    """
    Raises:
        CharacteristicPrimeError: p が標数に等しい場合
    """
    if p == ring.characteristic:
        raise CharacteristicPrimeError(f"p = {p} equals the residue characteristic of {ring}")
    group = SpecialLinearGroup(ring, n)
    p0 = ring.characteristic
    rng = np.random.default_rng(seed)
    elementary = True
    for j in range(1, min(i, ring.trunc)):
        x = group.random_congruence(j, samples, rng)
        y = group.random_congruence(j, samples, rng)
        powers_ok = np.all(group.level(group.power(x, p0)) >= j + 1)
        commute_ok = np.all(group.level(group.commutator(x, y)) >= j + 1)
        elementary = elementary and bool(powers_ok and commute_ok)

    quotient_ring = RingDescriptor(ring.field, ring.num_vars, min(i, ring.trunc))
    order = congruence_order(quotient_ring, n) if quotient_ring.trunc > 1 else 1
    rest = order
    while rest % p0 == 0:
        rest //= p0
    is_power = rest == 1
    h1 = None
    if quotient_ring.trunc > 1 and order <= CLOSURE_GUARD:
        factors = abelianization_small(quotient_ring, n).abelianization
        h1 = sum(1 for d in factors if d % p == 0)
    elif quotient_ring.trunc == 1:
        h1 = 0
    return AcyclicityReport(i, p, elementary, order, is_power, h1)


@dataclass(frozen=True)
class PthRootReport:
    exponent_bound: int
    multiplier: int
    samples: int
    passed_count: int

    @property
    def passed(self) -> bool:
        return self.passed_count == self.samples


def exponent_bound(ring: RingDescriptor) -> int:
    """C の指数の上界 p₀^{⌈log_{p₀} L⌉}"""
    p0, bound = ring.characteristic, 1
    while bound < ring.trunc:
        bound *= p0
    return bound


def pth_root_check(
    ring: RingDescriptor, n: int, p: int, samples: int, seed: int
) -> PthRootReport:
    """X^{s·p} = X（s = p⁻¹ mod 指数の上界）を確かめ、X^s が C に入ることも見る"""
    if p == ring.characteristic:
        raise CharacteristicPrimeError(f"p = {p} equals the residue characteristic of {ring}")
    group = SpecialLinearGroup(ring, n)
    bound = exponent_bound(ring)
    s = pow(p, -1, bound) if bound > 1 else 1
    x = group.random_congruence(1, samples, np.random.default_rng(seed))
    root = group.power(x, s)
    again = group.power(root, p)
    ok = np.all(again == x, axis=(1, 2, 3)) & (group.level(root) >= 1)
    return PthRootReport(bound, s, samples, int(ok.sum()))
