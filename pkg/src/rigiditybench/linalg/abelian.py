"""有限表示アーベル群とその準同型

群は生成元の個数と関係式行列（各行が一つの関係式）で表します。
準同型 f は「始域の生成元 i の像を終域の語で表した行」を並べた整数行列です。
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint

from rigiditybench.errors import IncompatibleMap
from rigiditybench.linalg.matrix import IntegerMatrix, PrimeFieldMatrix
from rigiditybench.linalg.snf import SmithForm, left_kernel, smith_normal_form


@dataclass(frozen=True)
class PresentedAbelianGroup:
    """Z^n / (関係式の行空間)

    Attributes:
        num_generators: 生成元の個数 n
        relations: 関係式行列（列数 n）
        inclusion: 部分群として得られた場合の、親の群の語による生成元の表示
    """

    num_generators: int
    relations: IntegerMatrix
    inclusion: Optional[IntegerMatrix] = None

    def __post_init__(self):
        if self.relations.ncols != self.num_generators:
            raise ValueError(
                f"relation matrix has {self.relations.ncols} columns for "
                f"{self.num_generators} generators"
            )

    @classmethod
    def free(cls, num_generators: int) -> "PresentedAbelianGroup":
        return cls(num_generators, IntegerMatrix.zeros(0, num_generators))

    @classmethod
    def from_invariants(cls, factors: Sequence[int]) -> "PresentedAbelianGroup":
        """⊕ Z/dᵢ（dᵢ = 0 は Z）"""
        n = len(factors)
        rows = [[d if j == i else 0 for j in range(n)] for i, d in enumerate(factors) if d]
        return cls(n, IntegerMatrix.from_rows(rows, n))

    @cached_property
    def snf(self) -> SmithForm:
        return smith_normal_form(self.relations)

    @cached_property
    def summands(self) -> Tuple[Tuple[int, int], ...]:
        """自明でない巡回因子 (SNF 座標の添字, 位数)。自由因子の位数は 0"""
        diagonal = self.snf.diagonal
        out = [(i, d) for i, d in enumerate(diagonal) if d != 1]
        out.extend((i, 0) for i in range(len(diagonal), self.num_generators))
        return tuple(out)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        """d₁ | d₂ | ...（自由部分は末尾の 0）"""
        return tuple(d for _, d in self.summands)

    @property
    def is_finite(self) -> bool:
        return all(d for d in self.invariant_factors)

    @property
    def order(self) -> Optional[int]:
        """有限なら位数、無限なら None"""
        if not self.is_finite:
            return None
        return prod(self.invariant_factors)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    def coordinates(self, word: Sequence[int]) -> Tuple[int, ...]:
        """語の SNF 座標（巡回因子ごと、位数で既約化）"""
        y = self.snf.right.row_times(word)
        return tuple(y[i] % d if d else y[i] for i, d in self.summands)

    def is_zero(self, word: Sequence[int]) -> bool:
        return not any(self.coordinates(word))

    def generator_words(self) -> Tuple[Tuple[int, ...], ...]:
        """各巡回因子の生成元を元の生成元の語で表したもの"""
        v_inv = self.snf.right_inverse.rows
        return tuple(v_inv[i] for i, _ in self.summands)

    def simplified(self) -> "PresentedAbelianGroup":
        """巡回因子を生成元とする対角表示に取り替える（inclusion も合成）"""
        words = IntegerMatrix.from_rows(self.generator_words(), self.num_generators)
        inclusion = words if self.inclusion is None else words.matmul(self.inclusion)
        factors = self.invariant_factors
        base = PresentedAbelianGroup.from_invariants(factors)
        return PresentedAbelianGroup(len(factors), base.relations, inclusion)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.invariant_factors)


def check_compatible(
    f: IntegerMatrix, source: PresentedAbelianGroup, target: PresentedAbelianGroup
) -> None:
    """f が始域の関係式をすべて終域の 0 に送ることを確かめる

    Raises:
        IncompatibleMap: 消えない関係式がある場合
    """
    if f.shape != (source.num_generators, target.num_generators):
        raise IncompatibleMap(
            f"map of shape {f.shape} between groups with "
            f"{source.num_generators} and {target.num_generators} generators"
        )
    for k, relation in enumerate(source.relations.rows):
        if not target.is_zero(f.row_times(relation)):
            raise IncompatibleMap(f"source relation {k} is not killed by the map")


def abelian_kernel(
    f: IntegerMatrix, source: PresentedAbelianGroup, target: PresentedAbelianGroup
) -> PresentedAbelianGroup:
    """ker f を始域の部分群として表示する

    返す群は対角表示で、``inclusion`` の各行が始域の語による生成元です。

    Raises:
        IncompatibleMap: f が始域の関係式を消さない場合
    """
    check_compatible(f, source, target)
    n_s = source.num_generators
    t_form = target.snf
    # x が核に入る ⟺ x·F·V_t の各成分が対応する dᵢ の倍数（自由成分は 0）
    images = f.matmul(t_form.right)
    diagonal_rows = IntegerMatrix.diagonal(t_form.diagonal, target.num_generators)
    lattice = left_kernel(images.stack(diagonal_rows))
    spanning = lattice.columns(0, n_s)

    # 生成系 spanning に対する関係式：y·spanning が始域の関係式の整数結合になる y
    r = spanning.nrows
    relations = left_kernel(spanning.stack(source.relations)).columns(0, r)
    kernel = PresentedAbelianGroup(r, relations, spanning).simplified()

    for word in kernel.inclusion.rows:
        if not target.is_zero(f.row_times(word)):
            raise ArithmeticError("kernel generator does not map to zero")
    if source.is_finite:
        image = image_order(f, source, target)
        if source.order != kernel.order * image:
            raise ArithmeticError(
                f"index bookkeeping failed: {source.order} != {kernel.order} * {image}"
            )
    logging.debug(f"[abelian] kernel {kernel} inside {source}")
    return kernel


def abelian_cokernel(
    f: IntegerMatrix, source: PresentedAbelianGroup, target: PresentedAbelianGroup
) -> PresentedAbelianGroup:
    """coker f = 終域 / 像"""
    check_compatible(f, source, target)
    return PresentedAbelianGroup(target.num_generators, target.relations.stack(f))


def image_order(
    f: IntegerMatrix, source: PresentedAbelianGroup, target: PresentedAbelianGroup
) -> Optional[int]:
    """像の位数（無限なら None）

    像は Z^{n_s} を「SNF 座標で終域の関係式に落ちる結合」で割った群として表示します。
    """
    check_compatible(f, source, target)
    t_form = target.snf
    images = f.matmul(t_form.right)
    diagonal_rows = IntegerMatrix.diagonal(t_form.diagonal, target.num_generators)
    n_s = source.num_generators
    relations = left_kernel(images.stack(diagonal_rows)).columns(0, n_s)
    return PresentedAbelianGroup(n_s, relations).order


def tensor_mod_p(group: PresentedAbelianGroup, p: int) -> int:
    """dim G⊗Z/p（p で割り切れる不変因子と自由因子の個数）"""
    return sum(1 for d in group.invariant_factors if d % p == 0)


def torsion_rank_mod_p(group: PresentedAbelianGroup, p: int) -> int:
    """dim _pG（p 倍で消える部分群の次元、自由因子は数えない）"""
    return sum(1 for d in group.invariant_factors if d and d % p == 0)


def induced_map_mod_p(
    f: IntegerMatrix, source: PresentedAbelianGroup, target: PresentedAbelianGroup, p: int
) -> PrimeFieldMatrix:
    """f⊗Z/p の行列（両側とも SNF 座標の p 部分を基底とする）"""
    check_compatible(f, source, target)
    src_basis = [
        word
        for word, (_, d) in zip(source.generator_words(), source.summands)
        if d % p == 0
    ]
    tgt_slots = [k for k, (_, d) in enumerate(target.summands) if d % p == 0]
    entries = []
    for row, word in enumerate(src_basis):
        coords = target.coordinates(f.row_times(word))
        for col, k in enumerate(tgt_slots):
            if coords[k] % p:
                entries.append((row, col, coords[k] % p))
    return PrimeFieldMatrix.from_entries(p, (len(src_basis), len(tgt_slots)), entries)


def invariant_factors_from_elementary(orders: Sequence[int]) -> Tuple[int, ...]:
    """巡回群の直和 ⊕ Z/nᵢ の不変因子（昇順の整除列）"""
    exponents: Dict[int, List[int]] = {}
    for n in orders:
        if n <= 0:
            raise ValueError(f"cyclic orders must be positive: {n}")
        for prime, e in factorint(n).items():
            exponents.setdefault(prime, []).append(e)
    length = max((len(es) for es in exponents.values()), default=0)
    factors = [1] * length
    for prime, es in exponents.items():
        es = sorted(es, reverse=True)
        for k, e in enumerate(es):
            factors[length - 1 - k] *= prime**e
    return tuple(factors)


def invariant_factors_from_power_orders(p: int, orders: Sequence[int]) -> Tuple[int, ...]:
    """|G^{p^k}| (k = 0, 1, ...) の列から p 群 G の不変因子を復元する

    orders は 1 で終わる必要があります。
    """
    if not orders or orders[-1] != 1:
        raise ValueError("power orders must end with the trivial subgroup")
    counts = []
    for big, small in zip(orders, orders[1:]):
        ratio, e = big // small, 0
        if big % small:
            raise ValueError(f"power orders must divide successively: {orders}")
        while ratio > 1:
            if ratio % p:
                raise ValueError(f"power orders must be powers of {p}: {orders}")
            ratio //= p
            e += 1
        counts.append(e)
    counts.append(0)
    # counts[k] = 位数 > p^k の巡回因子の個数
    factors = []
    for k in range(1, len(counts)):
        factors.extend([p**k] * (counts[k - 1] - counts[k]))
    return tuple(factors)
