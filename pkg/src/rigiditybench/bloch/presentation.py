"""前 Bloch 群 𝔭(A) の生成元と五項関係式"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple

import numpy as np

from rigiditybench.errors import GuardExceeded
from rigiditybench.linalg.abelian import PresentedAbelianGroup
from rigiditybench.linalg.matrix import IntegerMatrix
from rigiditybench.ring.ring import RingDescriptor, RingElement

GENERATOR_GUARD = 400
FIVE_TERM_SIGNS = (1, -1, 1, -1, 1)

SignedTerm = Tuple[int, RingElement]


def enumerate_admissible(ring: RingDescriptor) -> Tuple[RingElement, ...]:
    """x と 1−x がともに単元である元（符号順）

    Raises:
        GuardExceeded: 生成元が上限を超える場合
    """
    count = (ring.q - 2) * ring.q ** (ring.num_monomials - 1) if ring.q > 2 else 0
    if count > GENERATOR_GUARD:
        raise GuardExceeded("pre-Bloch generators", count, GENERATOR_GUARD)
    return tuple(x for x in ring.units() if (1 - x).is_unit)


def is_admissible_pair(x: RingElement, y: RingElement) -> bool:
    """x, y, 1−x, 1−y, x−y がすべて単元か"""
    return all(z.is_unit for z in (x, y, 1 - x, 1 - y, x - y))


def five_term_relation(x: RingElement, y: RingElement) -> Optional[Tuple[SignedTerm, ...]]:
    """[x] − [y] + [y/x] − [(1−x⁻¹)/(1−y⁻¹)] + [(1−x)/(1−y)]

    許容でない組には None を返します。
    """
    if not is_admissible_pair(x, y):
        return None
    terms = (x, y, y / x, (1 - 1 / x) / (1 - 1 / y), (1 - x) / (1 - y))
    return tuple(zip(FIVE_TERM_SIGNS, terms))


@dataclass(frozen=True)
class PreBlochPresentation:
    """𝔭(A) の表示

    Attributes:
        ring: 環 A
        generators: 生成元 [x] の x（列の順）
        pairs: 関係式の行に対応する許容な組 (x, y)
        relations: 五項関係式の行列（同じ生成元に落ちる項は足し合わせる）
    """

    ring: RingDescriptor
    generators: Tuple[RingElement, ...]
    pairs: Tuple[Tuple[RingElement, RingElement], ...]
    relations: IntegerMatrix

    @cached_property
    def index(self) -> Dict[Tuple[int, ...], int]:
        return {x.coeffs: k for k, x in enumerate(self.generators)}

    @cached_property
    def group(self) -> PresentedAbelianGroup:
        return PresentedAbelianGroup(len(self.generators), self.relations)

    def word(self, x: RingElement) -> Tuple[int, ...]:
        """[x] の単位ベクトル"""
        out = [0] * len(self.generators)
        out[self.index[x.coeffs]] = 1
        return tuple(out)


def build_presentation(ring: RingDescriptor, order_seed: Optional[int] = None) -> PreBlochPresentation:
    """𝔭(A) の表示を作る

    Args:
        ring: 環 A
        order_seed: 指定すると生成元の順序をこの種で並べ替える（順序に依らないことの検査用）
    """
    generators = list(enumerate_admissible(ring))
    if order_seed is not None:
        perm = np.random.default_rng(order_seed).permutation(len(generators))
        generators = [generators[k] for k in perm]
    index = {x.coeffs: k for k, x in enumerate(generators)}
    n = len(generators)

    pairs, rows = [], []
    for x in generators:
        for y in generators:
            relation = five_term_relation(x, y)
            if relation is None:
                continue
            row = [0] * n
            for sign, term in relation:
                row[index[term.coeffs]] += sign
            if sum(row) != 1:
                raise ArithmeticError(f"five-term row for ({x}, {y}) does not sum to 1")
            pairs.append((x, y))
            rows.append(row)
    logging.info(f"[bloch] {ring}: {n} generators, {len(rows)} five-term relations")
    return PreBlochPresentation(
        ring, tuple(generators), tuple(pairs), IntegerMatrix.from_rows(rows, n)
    )
